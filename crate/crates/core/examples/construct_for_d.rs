//! Witnesses for semigroup membership by repeated amalgamation
//! (Lemma submonoid).
//!
//! ```bash
//! cargo run --example construct_for_d
//! ```

use configurable::constructions::{construct_for_d, decompose, sm_plus_one};
use configurable::{decide, find_anchors, tuple_of, SearchProblem};

fn main() -> configurable::Result<()> {
    let fano = find_anchors(&decide(&SearchProblem::new(7, 7, 3, 3)).witness.expect("Fano"))?;
    let big = find_anchors(&sm_plus_one(&fano)?)?;
    let known = vec![(7, fano), (22, big)];
    for d in [0, 14, 21, 29, 36, 20] {
        match construct_for_d(d, 3, 3, &known) {
            Ok(c) => println!("d={d}: {:?} = {:?}", decompose(d, &[7, 22]).unwrap(), tuple_of(&c)),
            Err(e) => println!("d={d}: {e}"),
        }
    }
    Ok(())
}
