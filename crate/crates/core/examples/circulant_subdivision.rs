//! The r = 2 route of §3: a circulant k-regular graph on b vertices,
//! subdivided into a (kb/2, b, 2, k)-configuration.
//!
//! ```bash
//! cargo run --example circulant_subdivision
//! ```

use configurable::constructions::{circulant_regular, collapse_subdivision, subdivision_configuration};
use configurable::{d2k, tuple_of, verify};

fn main() -> configurable::Result<()> {
    let graph = circulant_regular(4, 10)?;
    println!("circulant(4, 10): {} edges", graph.edge_count());
    let config = subdivision_configuration(graph.graph())?;
    println!("subdivision: {:?}, verify: {}", tuple_of(&config), verify(&config));
    let back = collapse_subdivision(&config)?;
    println!("collapsed back to {} vertices, {} edges", back.vertex_count(), back.edge_count());

    // Which scale factors does the pipeline reach for k = 5?
    let s = d2k(5)?;
    for d in 0..=10 {
        let b = 2 * d;
        let reached = circulant_regular(5, b).is_ok();
        println!("k=5 d={d:2}: pipeline {reached:5}  d2k {}", s.is_member(d) || d == 0);
    }
    match circulant_regular(3, 5) {
        Err(e) => println!("circulant(3, 5): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
