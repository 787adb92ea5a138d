//! Lemma (Drkmot0): copies of K_{r,k} glued along a girth-5 scaffold give
//! an (r,k)-configuration for every r, k >= 3.
//!
//! ```bash
//! cargo run --release --example surgery
//! ```

use configurable::constructions::{minimal_nontrivial, regular_graph_with_girth, surgery_on_scaffold, ScaffoldOptions};
use configurable::{tuple_of, verify};

fn main() -> configurable::Result<()> {
    let scaffold = regular_graph_with_girth(4, &ScaffoldOptions::default())?;
    let plan = surgery_on_scaffold(3, 3, &scaffold)?;
    println!(
        "(3,3) over a {}-vertex scaffold: {:?}; first swaps:",
        scaffold.vertex_count(),
        tuple_of(&plan.config)
    );
    for swap in plan.swaps.iter().take(4) {
        println!("  {swap:?}");
    }
    for r in 3..=5 {
        for k in 3..=5 {
            let c = minimal_nontrivial(r, k, &ScaffoldOptions::default())?;
            println!("({r},{k}): {:?} verify={}", tuple_of(&c), verify(&c).is_pass());
        }
    }
    Ok(())
}
