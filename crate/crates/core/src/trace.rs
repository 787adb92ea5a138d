//! Construction traces: the list of steps that produced a configuration,
//! with every parameter and seed, so the build can be replayed bit-exactly.
//!
//! Steps refer to earlier results by index. A [`TraceBuilder`] executes each
//! step as it is recorded; [`replay`] executes a stored trace from scratch.

use serde::{Deserialize, Serialize};

use crate::anchors::find_anchors;
use crate::config::{tuple_of, ConfigDocument, Configuration};
use crate::constructions::{
    amalgamate, circulant_regular, construct_for_d, regular_graph_with_girth, sm_plus_one, subdivision_configuration,
    surgery_on_scaffold, ScaffoldOptions,
};
use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::search::{decide, SearchOptions, SearchProblem};

/// Format version written into every trace.
pub const TRACE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// The empty `(r,k)`-configuration.
    Empty { r: usize, k: usize },
    /// `circulant_regular(k, b)`; yields a graph.
    Circulant { k: usize, b: usize },
    /// `regular_graph_with_girth(degree, options)`; yields a graph.
    Scaffold { degree: usize, options: ScaffoldOptions },
    /// Points are the edges of graph `graph`, lines its vertices.
    Subdivide { graph: usize },
    /// `K_{r,k}` copies glued along the scaffold graph `scaffold`.
    Surgery { r: usize, k: usize, scaffold: usize },
    /// Oracle witness; replay fails unless the search finds one again.
    Search {
        v: usize,
        b: usize,
        r: usize,
        k: usize,
        seed: u64,
        symmetry: bool,
        node_budget: Option<u64>,
    },
    Dual { config: usize },
    /// `amalgamate(find_anchors(left), find_anchors(right))`.
    Amalgamate { left: usize, right: usize },
    /// `sm_plus_one(find_anchors(base))`.
    SmPlusOne { base: usize },
    /// `construct_for_d(d, r, k, known)` with every known configuration
    /// anchored by `find_anchors`.
    ConstructForD {
        d: usize,
        r: usize,
        k: usize,
        known: Vec<usize>,
    },
    /// A configuration supplied verbatim (for example a file read by the CLI).
    Literal { config: ConfigDocument },
}

impl Step {
    /// A search step reproducing a call with `options`. Time budgets and
    /// worker counts do not affect a successful result and are dropped.
    pub fn search(problem: &SearchProblem) -> Step {
        Step::Search {
            v: problem.v,
            b: problem.b,
            r: problem.r,
            k: problem.k,
            seed: problem.options.seed,
            symmetry: problem.options.symmetry,
            node_budget: problem.options.node_budget,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub version: u32,
    pub steps: Vec<Step>,
    /// Index of the step whose configuration is the final artifact.
    pub output: usize,
}

impl Trace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Trace> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, Debug)]
enum Value {
    Graph(RegularGraph),
    Config(Configuration),
}

/// Records and executes steps.
#[derive(Debug, Default)]
pub struct TraceBuilder {
    steps: Vec<Step>,
    values: Vec<Value>,
}

impl TraceBuilder {
    pub fn new() -> Self {
        TraceBuilder::default()
    }

    /// Executes `step` and records it; returns its index.
    pub fn push(&mut self, step: Step) -> Result<usize> {
        let value = self.execute(&step)?;
        self.steps.push(step);
        self.values.push(value);
        Ok(self.values.len() - 1)
    }

    /// The configuration produced by step `index`.
    pub fn config(&self, index: usize) -> Result<&Configuration> {
        match self.values.get(index) {
            Some(Value::Config(c)) => Ok(c),
            Some(Value::Graph(_)) => Err(Error::Format(format!(
                "step {index} produced a graph, not a configuration"
            ))),
            None => Err(Error::Format(format!("no step {index}"))),
        }
    }

    fn graph(&self, index: usize) -> Result<&RegularGraph> {
        match self.values.get(index) {
            Some(Value::Graph(g)) => Ok(g),
            Some(Value::Config(_)) => Err(Error::Format(format!(
                "step {index} produced a configuration, not a graph"
            ))),
            None => Err(Error::Format(format!("no step {index}"))),
        }
    }

    /// Finishes the trace with step `output` as the artifact.
    pub fn finish(self, output: usize) -> Result<(Trace, Configuration)> {
        let config = self.config(output)?.clone();
        Ok((
            Trace {
                version: TRACE_VERSION,
                steps: self.steps,
                output,
            },
            config,
        ))
    }

    fn execute(&self, step: &Step) -> Result<Value> {
        let config = match step {
            Step::Empty { r, k } => Configuration::empty(*r, *k),
            Step::Circulant { k, b } => return Ok(Value::Graph(circulant_regular(*k, *b)?)),
            Step::Scaffold { degree, options } => {
                return Ok(Value::Graph(regular_graph_with_girth(*degree, options)?))
            }
            Step::Subdivide { graph } => subdivision_configuration(self.graph(*graph)?.graph())?,
            Step::Surgery { r, k, scaffold } => {
                surgery_on_scaffold(*r, *k, self.graph(*scaffold)?)?.config
            }
            Step::Search {
                v,
                b,
                r,
                k,
                seed,
                symmetry,
                node_budget,
            } => {
                let options = SearchOptions {
                    seed: *seed,
                    symmetry: *symmetry,
                    node_budget: *node_budget,
                    ..SearchOptions::default()
                };
                let verdict = decide(&SearchProblem::new(*v, *b, *r, *k).with_options(options));
                verdict.witness.ok_or_else(|| {
                    Error::BudgetExhausted(format!(
                        "search for ({v},{b},{r},{k}) ended {:?} without a witness",
                        verdict.kind
                    ))
                })?
            }
            Step::Dual { config } => self.config(*config)?.dual(),
            Step::Amalgamate { left, right } => amalgamate(
                &find_anchors(self.config(*left)?)?,
                &find_anchors(self.config(*right)?)?,
            )?,
            Step::SmPlusOne { base } => sm_plus_one(&find_anchors(self.config(*base)?)?)?,
            Step::ConstructForD { d, r, k, known } => {
                let known = known
                    .iter()
                    .map(|&i| {
                        let c = self.config(i)?;
                        Ok((tuple_of(c).d, find_anchors(c)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                construct_for_d(*d, *r, *k, &known)?
            }
            Step::Literal { config } => Configuration::from_document(config)?,
        };
        Ok(Value::Config(config))
    }
}

/// Re-executes every step of `trace` and returns the output configuration.
pub fn replay(trace: &Trace) -> Result<Configuration> {
    if trace.version != TRACE_VERSION {
        return Err(Error::Format(format!(
            "trace version {} is not supported (expected {TRACE_VERSION})",
            trace.version
        )));
    }
    let mut builder = TraceBuilder::new();
    for step in &trace.steps {
        builder.push(step.clone())?;
    }
    Ok(builder.config(trace.output)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    #[test]
    fn circulant_trace_replays() {
        let mut t = TraceBuilder::new();
        let g = t.push(Step::Circulant { k: 4, b: 10 }).unwrap();
        let c = t.push(Step::Subdivide { graph: g }).unwrap();
        let (trace, config) = t.finish(c).unwrap();
        assert_eq!((config.v(), config.b()), (20, 10));
        let back = Trace::from_json(&trace.to_json()).unwrap();
        assert_eq!(replay(&back).unwrap(), config);
    }

    #[test]
    fn composed_trace_replays() {
        let mut t = TraceBuilder::new();
        let fano = t.push(Step::search(&SearchProblem::new(7, 7, 3, 3))).unwrap();
        let big = t.push(Step::SmPlusOne { base: fano }).unwrap();
        let both = t.push(Step::Amalgamate { left: fano, right: big }).unwrap();
        let (trace, config) = t.finish(both).unwrap();
        assert!(verify(&config).is_pass());
        assert_eq!(tuple_of(&config).d, 29);
        assert_eq!(replay(&trace).unwrap().to_json(), config.to_json());
    }

    #[test]
    fn construct_for_d_step() {
        let mut t = TraceBuilder::new();
        let fano = t.push(Step::search(&SearchProblem::new(7, 7, 3, 3))).unwrap();
        let mk = t.push(Step::search(&SearchProblem::new(8, 8, 3, 3))).unwrap();
        let out = t
            .push(Step::ConstructForD { d: 23, r: 3, k: 3, known: vec![fano, mk] })
            .unwrap();
        let (trace, config) = t.finish(out).unwrap();
        assert_eq!(tuple_of(&config).d, 23);
        assert!(verify(&config).is_pass());
        assert_eq!(replay(&trace).unwrap(), config);
    }

    #[test]
    fn wrong_value_kinds_are_rejected() {
        let mut t = TraceBuilder::new();
        let e = t.push(Step::Empty { r: 3, k: 3 }).unwrap();
        assert!(t.push(Step::Subdivide { graph: e }).is_err());
        assert!(t.push(Step::Dual { config: 9 }).is_err());
    }

    #[test]
    fn step_json_is_tagged() {
        let json = serde_json::to_string(&Step::Circulant { k: 4, b: 10 }).unwrap();
        assert_eq!(json, r#"{"op":"circulant","k":4,"b":10}"#);
    }
}
