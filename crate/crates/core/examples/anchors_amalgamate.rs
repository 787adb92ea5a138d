//! Anchors (Lemma separacio) and amalgamation (Lemma construccio).
//!
//! ```bash
//! cargo run --example anchors_amalgamate
//! ```

use configurable::constructions::amalgamate;
use configurable::{decide, find_anchors, tuple_of, verify, SearchProblem};

fn main() -> configurable::Result<()> {
    let fano = decide(&SearchProblem::new(7, 7, 3, 3)).witness.expect("Fano");
    let mobius_kantor = decide(&SearchProblem::new(8, 8, 3, 3)).witness.expect("(8,8,3,3)");

    let a = find_anchors(&fano)?;
    println!("Fano anchors (0-based): {:?}", a.anchors());
    println!("point permutation: {:?}", a.point_perm());

    let b = find_anchors(&mobius_kantor)?;
    let glued = amalgamate(&a, &b)?;
    println!("Fano + Möbius–Kantor: {:?}, verify: {}", tuple_of(&glued), verify(&glued));

    let twice = amalgamate(&a, &a)?;
    println!("Fano + Fano: {:?}", tuple_of(&twice));
    Ok(())
}
