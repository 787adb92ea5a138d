//! Construction traces replay bit-exactly.
//!
//! ```bash
//! cargo run --example trace_replay
//! ```

use configurable::cli::construct;
use configurable::{replay, DrkBudget, Trace};

fn main() -> anyhow::Result<()> {
    let (trace, config) = construct(3, 3, 29, &DrkBudget::default())?;
    let json = trace.to_json();
    println!("{json}");
    let again = replay(&Trace::from_json(&json)?)?;
    assert_eq!(again.to_json(), config.to_json());
    println!("replayed: {} points, {} lines, identical", again.v(), again.b());
    Ok(())
}
