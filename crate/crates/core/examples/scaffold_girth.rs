//! Regular graphs with girth at least 5 (the Sachs lemma scaffold).
//!
//! ```bash
//! cargo run --release --example scaffold_girth
//! ```

use configurable::constructions::{regular_graph_with_girth, ScaffoldOptions};

fn main() -> configurable::Result<()> {
    for n in [3, 4, 6, 8, 9, 12, 16] {
        let g = regular_graph_with_girth(n, &ScaffoldOptions::default())?;
        println!(
            "n={n:2}: {:5} vertices, {:6} edges, girth {:?}",
            g.vertex_count(),
            g.edge_count(),
            g.girth()
        );
    }
    let opts = ScaffoldOptions {
        girth: 6,
        seed: 7,
        ..ScaffoldOptions::default()
    };
    let g = regular_graph_with_girth(3, &opts)?;
    println!("cubic, girth >= 6, seed 7: {} vertices, girth {:?}", g.vertex_count(), g.girth());
    Ok(())
}
