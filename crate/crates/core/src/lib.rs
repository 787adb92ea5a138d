//! Construction, composition and verification of `(v,b,r,k)` combinatorial
//! configurations, and the numerical semigroups `D_{r,k}` of their scale
//! factors.
//!
//! A `(v,b,r,k)`-configuration is a connected bipartite graph with `v`
//! points of degree `r`, `b` lines of degree `k` and no cycle of length 4.
//! Every construction in [`constructions`] is certified by [`verify`], and
//! the exhaustive [`search`] oracle serves as an independent ground truth.

pub mod anchors;
pub mod cli;
pub mod config;
pub mod constructions;
pub mod drk;
pub mod error;
pub mod graph;
pub mod search;
pub mod semigroup;
pub mod trace;
pub mod verify;

#[cfg(test)]
pub(crate) mod fixtures;

pub use anchors::{find_anchors, AnchoredConfiguration};
pub use config::{scale_lower_bound, tuple_of, Configuration, Incidence, Tuple};
pub use drk::{drk_describe, DrkBudget, DrkDescription, DrkKind};
pub use error::{Error, Result};
pub use graph::{RegularGraph, SimpleGraph};
pub use search::{decide, minimal_element, SearchOptions, SearchProblem, SearchVerdict, VerdictKind};
pub use semigroup::{d2k, GeneratedMonoid, NumericalSemigroup, SemigroupSummary};
pub use trace::{replay, Step, Trace, TraceBuilder};
pub use verify::{verify, VerificationReport, Violation};
