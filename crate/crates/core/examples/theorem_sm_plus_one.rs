//! Theorem (Drksemigroup): from a configuration with scale factor m build
//! one with s*m+1, s = rk/gcd(r,k); then <m, sm+1> ⊆ D_{r,k}.
//!
//! ```bash
//! cargo run --example theorem_sm_plus_one
//! ```

use configurable::constructions::{sm_plus_one, theorem_copies};
use configurable::{decide, find_anchors, tuple_of, verify, NumericalSemigroup, SearchProblem};

fn main() -> configurable::Result<()> {
    let fano = decide(&SearchProblem::new(7, 7, 3, 3)).witness.expect("Fano");
    let lifted = sm_plus_one(&find_anchors(&fano)?)?;
    let t = tuple_of(&lifted);
    println!("s = {}, result {:?}, verify: {}", theorem_copies(3, 3), t, verify(&lifted));
    let inner = NumericalSemigroup::from_generators(&[7, t.d])?;
    println!("<7, {}>: frobenius {}, genus {}", t.d, inner.frobenius(), inner.genus());

    // (3,4): the affine-plane dual (12,9,3,4) has m = 3 and s = 12.
    let base = decide(&SearchProblem::for_scale(3, 3, 4)).witness.expect("(12,9,3,4)");
    let lifted = sm_plus_one(&find_anchors(&base)?)?;
    println!("(3,4): {:?}", tuple_of(&lifted));
    Ok(())
}
