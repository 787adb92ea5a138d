//! Command-line front end: one subcommand per capability, JSON on standard
//! output, and artifacts (configuration JSON, optional DOT, replayable
//! trace) in the output directory.
//!
//! Exit codes: 0 success, 1 verification failure or other error, 2 usage,
//! 3 infeasible parameters, 4 budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::anchors::find_anchors;
use crate::config::{tuple_of, Configuration, Tuple};
use crate::constructions::{decompose, theorem_copies, ScaffoldOptions};
use crate::drk::{drk_describe, oracle_problem, DrkBudget, DrkDescription, WitnessSource};
use crate::error::Error;
use crate::search::{decide, SearchOptions, SearchProblem, VerdictKind};
use crate::semigroup::{d2k, NumericalSemigroup};
use crate::trace::{replay, Step, Trace, TraceBuilder};
use crate::verify::verify;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "CONFIGURABLE_OUT_DIR";

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Construct, compose and verify (v,b,r,k)-configurations.
#[derive(Debug, Parser)]
#[command(name = "configurable", version)]
pub struct CommandRequest {
    /// Directory for artifacts.
    #[arg(long, global = true, env = OUT_DIR_ENV, default_value = ".")]
    pub out_dir: PathBuf,

    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Also write a Graphviz DOT file next to each configuration.
    #[arg(long, global = true)]
    pub dot: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a configuration with scale factor d.
    Construct {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Configuration file to write (the trace goes next to it).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a configuration file; the report goes to standard error.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Relabel a configuration so that its anchors are x1y1, x2y2, xvyb.
    Anchors {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Glue two configurations with the same (r,k).
    Amalgamate {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// The s*m+1 construction on a base configuration.
    Theorem {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Numerical-semigroup queries.
    Semigroup {
        /// Comma-separated generators, e.g. 2,3.
        #[arg(long, value_delimiter = ',', required_unless_present = "d2k")]
        generators: Vec<usize>,
        /// Use the closed form D_{2,k} for this k instead of --generators.
        #[arg(long, conflicts_with = "generators")]
        d2k: Option<usize>,
        /// Report membership of this integer with a certificate.
        #[arg(long)]
        member: Option<usize>,
        /// Report the Apéry set with respect to this element.
        #[arg(long)]
        apery: Option<usize>,
    },
    /// Describe D_{r,k}; witnesses are written to the output directory.
    Drk {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether a (v,b,r,k)-configuration exists.
    Search {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// Seconds before giving up with an unknown verdict.
        #[arg(long)]
        time_budget: Option<f64>,
        #[arg(long)]
        node_budget: Option<u64>,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Write a configuration (or the result of replaying a trace) as
    /// canonical JSON or DOT.
    Export {
        #[arg(long, required_unless_present = "trace", conflicts_with = "trace")]
        input: Option<PathBuf>,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        /// Destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Json,
    Dot,
}

#[derive(Clone, Debug, Args)]
pub struct BudgetArgs {
    /// Node budget for each oracle call.
    #[arg(long, default_value_t = 2_000_000)]
    pub node_budget: u64,
    /// Scale factors tried from the lower bound when looking for m.
    #[arg(long, default_value_t = 4)]
    pub scan: usize,
    /// Oracle calls spent on gaps of the inner semigroup.
    #[arg(long, default_value_t = 8)]
    pub gap_checks: usize,
}

impl BudgetArgs {
    fn budget(&self, seed: u64) -> DrkBudget {
        DrkBudget {
            search: SearchOptions {
                node_budget: Some(self.node_budget),
                seed,
                ..SearchOptions::default()
            },
            scan: self.scan,
            gap_checks: self.gap_checks,
            scaffold: ScaffoldOptions {
                seed,
                ..ScaffoldOptions::default()
            },
            ..DrkBudget::default()
        }
    }
}

/// Maps an error to the documented exit code.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExhausted(_)) => EXIT_BUDGET,
        Some(
            Error::InfeasibleParameters(_)
            | Error::NotExpressible { .. }
            | Error::NotNumerical { .. }
            | Error::NotMember(_)
            | Error::ParameterMismatch { .. }
            | Error::AnchorNotFound(_)
            | Error::NotRegular(_)
            | Error::NotConnected,
        ) => EXIT_INFEASIBLE,
        _ => EXIT_FAILURE,
    }
}

/// Executes `request`; results go to `stdout`, reports to `stderr`.
/// Returns the exit status for outcomes that are not errors (a failed
/// verification, an unknown search verdict).
pub fn run(request: &CommandRequest, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<i32> {
    let ctx = Artifacts {
        out_dir: &request.out_dir,
        dot: request.dot,
    };
    let seed = request.seed;
    match &request.command {
        Command::Construct {
            r,
            k,
            d,
            budget,
            output,
        } => {
            let (trace, config) = construct(*r, *k, *d, &budget.budget(seed))?;
            let path = output
                .clone()
                .unwrap_or_else(|| ctx.path(&format!("construct-r{r}-k{k}-d{d}.json")));
            let summary = ctx.write_config(&config, &path, Some(&trace))?;
            emit(stdout, &summary)?;
            Ok(0)
        }
        Command::Verify { input } => {
            let config = read_config(input)?;
            let report = verify(&config);
            if report.is_pass() {
                emit(stdout, &VerifySummary { pass: true, tuple: tuple_of(&config) })?;
                Ok(0)
            } else {
                write!(stderr, "{report}")?;
                emit(stdout, &VerifySummary { pass: false, tuple: tuple_of(&config) })?;
                Ok(EXIT_FAILURE)
            }
        }
        Command::Anchors { input, output } => {
            let config = read_config(input)?;
            let anchored = find_anchors(&config)?;
            let path = output
                .clone()
                .unwrap_or_else(|| ctx.path(&format!("{}-anchored.json", stem(input))));
            let mut summary = ctx.write_config(anchored.config(), &path, None)?;
            summary.anchors = anchored
                .anchors()
                .map(|a| a.iter().map(|&(p, l)| [p + 1, l + 1]).collect());
            emit(stdout, &summary)?;
            Ok(0)
        }
        Command::Amalgamate { left, right, output } => {
            let mut t = TraceBuilder::new();
            let a = t.push(Step::Literal { config: read_config(left)?.to_document() })?;
            let b = t.push(Step::Literal { config: read_config(right)?.to_document() })?;
            let out = t.push(Step::Amalgamate { left: a, right: b })?;
            let (trace, config) = t.finish(out)?;
            let path = output.clone().unwrap_or_else(|| ctx.path(&tuple_name("amalgam", &config)));
            emit(stdout, &ctx.write_config(&config, &path, Some(&trace))?)?;
            Ok(0)
        }
        Command::Theorem { input, output } => {
            let mut t = TraceBuilder::new();
            let base = t.push(Step::Literal { config: read_config(input)?.to_document() })?;
            let out = t.push(Step::SmPlusOne { base })?;
            let (trace, config) = t.finish(out)?;
            let path = output.clone().unwrap_or_else(|| ctx.path(&tuple_name("theorem", &config)));
            emit(stdout, &ctx.write_config(&config, &path, Some(&trace))?)?;
            Ok(0)
        }
        Command::Semigroup {
            generators,
            d2k: closed,
            member,
            apery,
        } => {
            let s = match closed {
                Some(k) => d2k(*k)?,
                None => NumericalSemigroup::from_generators(generators)?,
            };
            let summary = s.summary();
            let query = SemigroupQuery {
                generators: summary.generators,
                frobenius: summary.frobenius,
                gaps: summary.gaps,
                genus: summary.genus,
                member: member.map(|d| Membership {
                    d,
                    member: s.is_member(d),
                    certificate: s.contains(d).map(|c| {
                        s.generators()
                            .iter()
                            .zip(c)
                            .filter(|(_, n)| *n > 0)
                            .map(|(&g, n)| [g, n])
                            .collect()
                    }),
                }),
                apery: apery.map(|m| s.apery_set(m)).transpose()?,
            };
            emit(stdout, &query)?;
            Ok(0)
        }
        Command::Drk { r, k, budget } => {
            let desc = drk_describe(*r, *k, &budget.budget(seed))?;
            let mut paths = Vec::new();
            for w in &desc.witnesses {
                let path = ctx.path(&format!("drk-r{r}-k{k}-d{}.json", w.d));
                ctx.write_config(&w.config, &path, None)?;
                paths.push(Some(path.display().to_string()));
            }
            let doc = desc.to_document(&paths);
            let json = serde_json::to_string(&doc)?;
            ctx.write(&ctx.path(&format!("drk-r{r}-k{k}.json")), &json)?;
            writeln!(stdout, "{json}")?;
            Ok(0)
        }
        Command::Search {
            v,
            b,
            r,
            k,
            time_budget,
            node_budget,
            no_symmetry,
            workers,
        } => {
            let time_budget = time_budget
                .map(|s| {
                    Duration::try_from_secs_f64(s)
                        .map_err(|e| Error::InfeasibleParameters(format!("--time-budget {s}: {e}")))
                })
                .transpose()?;
            let problem = SearchProblem::new(*v, *b, *r, *k).with_options(SearchOptions {
                time_budget,
                node_budget: *node_budget,
                seed,
                symmetry: !no_symmetry,
                workers: (*workers).max(1),
            });
            let verdict = decide(&problem);
            let mut doc = verdict.to_document(&problem);
            writeln!(stderr, "elapsed: {:?}", verdict.elapsed)?;
            doc.elapsed_ms = None;
            let json = serde_json::to_string(&doc)?;
            ctx.write(&ctx.path(&format!("search-{v}-{b}-{r}-{k}.json")), &json)?;
            writeln!(stdout, "{json}")?;
            if ctx.dot {
                if let Some(w) = &verdict.witness {
                    ctx.write(&ctx.path(&format!("search-{v}-{b}-{r}-{k}.dot")), &w.to_dot())?;
                }
            }
            Ok(match verdict.kind {
                VerdictKind::Unknown => EXIT_BUDGET,
                _ => 0,
            })
        }
        Command::Export {
            input,
            trace,
            format,
            output,
        } => {
            let config = match (input, trace) {
                (Some(path), _) => read_config(path)?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    replay(&Trace::from_json(&text)?)?
                }
                (None, None) => unreachable!("clap requires --input or --trace"),
            };
            let text = match format {
                ExportFormat::Json => format!("{}\n", config.to_json()),
                ExportFormat::Dot => config.to_dot(),
            };
            match output {
                Some(path) => ctx.write(path, &text)?,
                None => write!(stdout, "{text}")?,
            }
            Ok(0)
        }
    }
}

/// The construction pipeline behind `construct`, returning the trace that
/// rebuilds the configuration.
pub fn construct(r: usize, k: usize, d: usize, budget: &DrkBudget) -> anyhow::Result<(Trace, Configuration)> {
    if r == 0 || k == 0 {
        return Err(Error::InfeasibleParameters(format!("r and k must be positive, got r={r}, k={k}")).into());
    }
    let mut t = TraceBuilder::new();
    if d == 0 {
        let out = t.push(Step::Empty { r, k })?;
        return Ok(t.finish(out)?);
    }
    let (lo, hi) = (r.min(k), r.max(k));
    let out = match lo {
        1 => {
            if d != 1 {
                return Err(not_expressible(d, vec![1]).into());
            }
            let line = Configuration::new(hi, 1, 1, hi, (0..hi).map(|p| (p, 0)).collect());
            let base = t.push(Step::Literal { config: line.to_document() })?;
            orient(&mut t, base, r > k)?
        }
        2 => {
            let s = d2k(hi)?;
            if !s.is_member(d) {
                return Err(not_expressible(d, s.minimal_generators()).into());
            }
            let b = Tuple::from_scale(d, 2, hi).b;
            let graph = t.push(Step::Circulant { k: hi, b })?;
            let config = t.push(Step::Subdivide { graph })?;
            orient(&mut t, config, r > k)?
        }
        _ => composed(&mut t, r, k, d, budget)?,
    };
    Ok(t.finish(out)?)
}

fn orient(t: &mut TraceBuilder, index: usize, dual: bool) -> anyhow::Result<usize> {
    Ok(if dual { t.push(Step::Dual { config: index })? } else { index })
}

fn not_expressible(d: usize, generators: Vec<usize>) -> Error {
    Error::NotExpressible { d, generators }
}

/// `r, k >= 3`: `construct_for_d` over the witnessed generators of the
/// inner semigroup found by `drk_describe`.
fn composed(t: &mut TraceBuilder, r: usize, k: usize, d: usize, budget: &DrkBudget) -> anyhow::Result<usize> {
    let desc = drk_describe(r, k, budget)?;
    let witnessed: Vec<usize> = desc.witnesses.iter().map(|w| w.d).collect();
    let Some(parts) = decompose(d, &witnessed) else {
        return Err(match desc.classify(d) {
            Some(true) => Error::BudgetExhausted(format!(
                "d={d} lies in D_{{{r},{k}}}, but not in the span of the witnessed generators {witnessed:?}"
            )),
            _ => not_expressible(d, describe_inner(&desc)),
        }
        .into());
    };
    let mut needed: Vec<usize> = parts.clone();
    needed.sort_unstable();
    needed.dedup();
    let mut built: Vec<(usize, usize)> = Vec::new();
    for &part in &needed {
        let index = witness_steps(t, &desc, part, budget, &mut built)?;
        built.push((part, index));
    }
    let known: Vec<usize> = needed
        .iter()
        .map(|p| built.iter().find(|(d, _)| d == p).expect("built above").1)
        .collect();
    Ok(t.push(Step::ConstructForD { d, r, k, known })?)
}

fn describe_inner(desc: &DrkDescription) -> Vec<usize> {
    desc.inner
        .as_ref()
        .map(NumericalSemigroup::minimal_generators)
        .unwrap_or_default()
}

/// Steps reproducing the witness for generator `part`; `built` lists the
/// generators already in the trace.
fn witness_steps(
    t: &mut TraceBuilder,
    desc: &DrkDescription,
    part: usize,
    budget: &DrkBudget,
    built: &mut Vec<(usize, usize)>,
) -> anyhow::Result<usize> {
    let (r, k) = (desc.r, desc.k);
    let witness = desc.witness(part).expect("parts come from the witnesses");
    match witness.source {
        WitnessSource::Oracle => {
            let (problem, dualize) = oracle_problem(part, r, k, &budget.search);
            let found = t.push(Step::search(&problem))?;
            orient(t, found, dualize)
        }
        WitnessSource::Surgery => {
            let options = ScaffoldOptions {
                girth: budget.scaffold.girth.max(5),
                ..budget.scaffold
            };
            let scaffold = t.push(Step::Scaffold {
                degree: (r - 1) * (k - 1),
                options,
            })?;
            Ok(t.push(Step::Surgery { r, k, scaffold })?)
        }
        WitnessSource::Theorem => {
            let m = (part - 1) / theorem_copies(r, k);
            let base = match built.iter().find(|(d, _)| *d == m) {
                Some(&(_, index)) => index,
                None => {
                    let index = witness_steps(t, desc, m, budget, built)?;
                    built.push((m, index));
                    index
                }
            };
            Ok(t.push(Step::SmPlusOne { base })?)
        }
        WitnessSource::Circulant | WitnessSource::SingleLine => {
            unreachable!("r, k >= 3 never uses the r <= 2 witnesses")
        }
    }
}

struct Artifacts<'a> {
    out_dir: &'a Path,
    dot: bool,
}

impl Artifacts<'_> {
    fn path(&self, name: &str) -> PathBuf {
        self.out_dir.join(name)
    }

    fn write(&self, path: &Path, text: &str) -> anyhow::Result<()> {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
            }
        }
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }

    /// Writes `config` to `path`, plus the trace and DOT file next to it.
    fn write_config(&self, config: &Configuration, path: &Path, trace: Option<&Trace>) -> anyhow::Result<ArtifactSummary> {
        self.write(path, &format!("{}\n", config.to_json()))?;
        let mut summary = ArtifactSummary {
            tuple: tuple_of(config),
            config: path.display().to_string(),
            trace: None,
            dot: None,
            anchors: None,
        };
        if let Some(trace) = trace {
            let trace_path = path.with_extension("trace.json");
            self.write(&trace_path, &format!("{}\n", trace.to_json()))?;
            summary.trace = Some(trace_path.display().to_string());
        }
        if self.dot {
            let dot_path = path.with_extension("dot");
            self.write(&dot_path, &config.to_dot())?;
            summary.dot = Some(dot_path.display().to_string());
        }
        Ok(summary)
    }
}

fn read_config(path: &Path) -> anyhow::Result<Configuration> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Configuration::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "config".into())
}

fn tuple_name(prefix: &str, config: &Configuration) -> String {
    format!("{prefix}-{}-{}-{}-{}.json", config.v(), config.b(), config.r(), config.k())
}

fn emit(stdout: &mut dyn Write, value: &impl Serialize) -> anyhow::Result<()> {
    writeln!(stdout, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

#[derive(Serialize)]
struct ArtifactSummary {
    tuple: Tuple,
    config: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dot: Option<String>,
    /// 1-based anchor incidences.
    #[serde(skip_serializing_if = "Option::is_none")]
    anchors: Option<Vec<[usize; 2]>>,
}

#[derive(Serialize)]
struct VerifySummary {
    pass: bool,
    tuple: Tuple,
}

#[derive(Serialize)]
struct SemigroupQuery {
    generators: Vec<usize>,
    frobenius: i64,
    gaps: Option<Vec<usize>>,
    genus: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    member: Option<Membership>,
    #[serde(skip_serializing_if = "Option::is_none")]
    apery: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct Membership {
    d: usize,
    member: bool,
    /// `[generator, multiplicity]` pairs summing to `d`.
    certificate: Option<Vec<[usize; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> CommandRequest {
        CommandRequest::try_parse_from(std::iter::once("configurable").chain(args.iter().copied())).unwrap()
    }

    fn run_ok(args: &[&str]) -> (i32, String, String) {
        let request = parse(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&request, &mut out, &mut err).unwrap();
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn construct_two_four() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().to_str().unwrap();
        let (code, stdout, _) = run_ok(&["construct", "--r", "2", "--k", "4", "--d", "10", "--out-dir", out]);
        assert_eq!(code, 0);
        assert!(stdout.contains(r#""v":20,"b":10,"r":2,"k":4,"d":10"#), "{stdout}");
        let config = read_config(&dir.path().join("construct-r2-k4-d10.json")).unwrap();
        assert!(verify(&config).is_pass());
        assert!(dir.path().join("construct-r2-k4-d10.trace.json").exists());
    }

    #[test]
    fn construct_three_three_matches_construct_for_d() {
        let (trace, config) = construct(3, 3, 29, &DrkBudget::default()).unwrap();
        assert_eq!(tuple_of(&config).d, 29);
        assert!(verify(&config).is_pass());
        assert_eq!(replay(&trace).unwrap(), config);
    }

    #[test]
    fn construct_swapped_and_degenerate() {
        let (_, c) = construct(5, 2, 4, &DrkBudget::default()).unwrap();
        assert_eq!((c.r(), c.k(), tuple_of(&c).d), (5, 2, 4));
        assert!(verify(&c).is_pass());
        let (_, c) = construct(4, 1, 1, &DrkBudget::default()).unwrap();
        assert!(verify(&c).is_pass());
        let (_, c) = construct(3, 3, 0, &DrkBudget::default()).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn construct_errors_map_to_exit_codes() {
        let err = construct(2, 4, 4, &DrkBudget::default()).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_INFEASIBLE);
        let err = construct(3, 3, 6, &DrkBudget::default()).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_INFEASIBLE);
        let err = construct(1, 3, 2, &DrkBudget::default()).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_INFEASIBLE);
        let budget_err = anyhow::Error::from(Error::BudgetExhausted("x".into()));
        assert_eq!(exit_code(&budget_err), EXIT_BUDGET);
    }

    #[test]
    fn semigroup_query() {
        let (_, stdout, _) = run_ok(&["semigroup", "--generators", "7,22", "--member", "29"]);
        assert!(stdout.starts_with(r#"{"generators":[7,22],"frobenius":125"#), "{stdout}");
        assert!(stdout.contains(r#""certificate":[[7,1],[22,1]]"#));
        let (_, stdout, _) = run_ok(&["semigroup", "--d2k", "4", "--apery", "5"]);
        assert!(stdout.contains(r#""apery":[0,6,7,8,9]"#), "{stdout}");
    }

    #[test]
    fn drk_two_five() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().to_str().unwrap();
        let (_, stdout, _) = run_ok(&["drk", "--r", "2", "--k", "5", "--out-dir", out]);
        assert!(stdout.starts_with(r#"{"generators":[3,4,5],"#), "{stdout}");
        assert!(dir.path().join("drk-r2-k5-d3.json").exists());
    }

    #[test]
    fn usage_errors() {
        assert!(CommandRequest::try_parse_from(["configurable"]).is_err());
        assert!(CommandRequest::try_parse_from(["configurable", "search", "--v", "7"]).is_err());
        let err = CommandRequest::try_parse_from(["configurable", "bogus"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }
}
