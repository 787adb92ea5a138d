//! Certify the Fano plane found by the search oracle, then break it.
//!
//! ```bash
//! cargo run --example verify_fano
//! ```

use configurable::graph::configuration_girth;
use configurable::{decide, tuple_of, verify, Configuration, SearchProblem};

fn main() {
    let verdict = decide(&SearchProblem::new(7, 7, 3, 3));
    let fano = verdict.witness.expect("the Fano plane exists");
    println!("witness: {}", fano.to_json());
    println!("verify: {}", verify(&fano));
    println!("tuple: {:?}", tuple_of(&fano));
    println!("girth of the incidence graph: {:?}", configuration_girth(&fano));

    // Drop one incidence: a point and a line lose a degree.
    let mut incidences = fano.incidences().to_vec();
    let (p, l) = incidences.remove(0);
    let broken = Configuration::new(7, 7, 3, 3, incidences);
    println!("after removing x{}--y{}:\n{}", p + 1, l + 1, verify(&broken));

    // K_{2,2} is a 4-cycle.
    let k22 = Configuration::new(2, 2, 2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    println!("K_2,2:\n{}", verify(&k22));
}
