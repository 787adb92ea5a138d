use std::io;
use std::process::ExitCode;

use clap::Parser;
use configurable::cli::{exit_code, run, CommandRequest};

fn main() -> ExitCode {
    let request = CommandRequest::parse();
    let (mut stdout, mut stderr) = (io::stdout().lock(), io::stderr().lock());
    let code = match run(&request, &mut stdout, &mut stderr) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            exit_code(&err)
        }
    };
    ExitCode::from(code as u8)
}
