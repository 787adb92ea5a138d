//! Constructive routes to configurations: circulant graphs for `r = 2`,
//! girth-constrained scaffolds, `K_{r,k}` surgery, amalgamation and the
//! `s*m+1` gluing.

mod amalgam;
mod circulant;
mod compose;
mod scaffold;
mod surgery;
mod theorem;

pub use amalgam::amalgamate;
pub use circulant::{circulant_regular, collapse_subdivision, subdivision_configuration};
pub use compose::{construct_for_d, decompose};
pub use scaffold::{regular_graph_with_girth, ScaffoldOptions};
pub use surgery::{minimal_nontrivial, surgery_on_scaffold, SurgeryPlan, SwapRecord};
pub use theorem::{sm_plus_one, theorem_copies};

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::verify::verify;

/// Every construction passes its output through the verifier.
fn certified(config: Configuration) -> Result<Configuration> {
    let report = verify(&config);
    if report.is_pass() {
        Ok(config)
    } else {
        Err(Error::Invalid(report))
    }
}
