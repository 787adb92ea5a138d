//! The JSON document and DOT export of a configuration.
//!
//! ```bash
//! cargo run --example export_formats
//! ```

use configurable::constructions::{circulant_regular, subdivision_configuration};
use configurable::Configuration;

fn main() -> configurable::Result<()> {
    let k4 = subdivision_configuration(&configurable::SimpleGraph::complete(4))?;
    let json = k4.to_json();
    println!("{json}");
    assert_eq!(Configuration::from_json(&json)?, k4);
    println!("{}", k4.to_dot());
    let hexagon = subdivision_configuration(circulant_regular(2, 6)?.graph())?;
    println!("{}", hexagon.to_json());
    Ok(())
}
