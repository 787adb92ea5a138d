//! The exhaustive search oracle: verdicts, budgets, pruning and workers.
//!
//! ```bash
//! cargo run --release --example search_oracle
//! ```

use configurable::{decide, minimal_element, SearchOptions, SearchProblem};

fn main() {
    for (v, b, r, k) in [(7, 7, 3, 3), (6, 6, 3, 3), (8, 8, 3, 3), (12, 9, 3, 4), (13, 13, 4, 4), (2, 2, 1, 1)] {
        let verdict = decide(&SearchProblem::new(v, b, r, k));
        println!(
            "({v},{b},{r},{k}): {:?} after {} nodes{}",
            verdict.kind,
            verdict.nodes,
            verdict.reason.map(|r| format!(" ({r})")).unwrap_or_default()
        );
    }

    let problem = SearchProblem::new(13, 13, 4, 4);
    let plain = decide(&problem.clone().with_options(SearchOptions { symmetry: false, ..Default::default() }));
    let parallel = decide(&problem.with_options(SearchOptions { workers: 4, ..Default::default() }));
    println!("(13,13,4,4) without symmetry pruning: {} nodes; with 4 workers: {} nodes", plain.nodes, parallel.nodes);

    let tight = decide(&SearchProblem::new(31, 31, 6, 6).with_options(SearchOptions {
        node_budget: Some(100),
        ..Default::default()
    }));
    println!("(31,31,6,6) with 100 nodes: {:?}", tight.kind);

    let m = minimal_element(3, 3, 10, &SearchOptions::default());
    println!(
        "least element of D_3,3 up to 10: {:?}, absent {:?}, proven minimal {}",
        m.found.as_ref().map(|f| f.0),
        m.absent,
        m.is_proven_minimal()
    );
}
