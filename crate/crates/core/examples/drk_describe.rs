//! Descriptions of D_{r,k}: finite set, closed forms, or bounds.
//!
//! ```bash
//! cargo run --release --example drk_describe
//! ```

use configurable::{drk_describe, DrkBudget};

fn main() -> configurable::Result<()> {
    let budget = DrkBudget::default();
    for (r, k) in [(1, 5), (2, 3), (5, 2), (3, 3), (3, 5), (4, 4), (4, 5)] {
        let desc = drk_describe(r, k, &budget)?;
        let doc = desc.to_document(&[]);
        println!(
            "D_{r},{k}: {:?} generators {:?} finite set {:?} lower bound {} witnesses {:?}",
            doc.kind,
            doc.generators,
            doc.finite_set,
            doc.outer_lower_bound,
            desc.witnesses.iter().map(|w| (w.d, w.source)).collect::<Vec<_>>()
        );
        for note in &desc.notes {
            println!("    note: {note}");
        }
    }
    Ok(())
}
