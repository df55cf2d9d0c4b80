//! Graphical arrangements from an edge list; the characteristic
//! polynomial is the chromatic polynomial.
//!
//!     cargo run --example graphs [graph.edges]

use tuttekit::families::{build_family, chromatic_polynomial, FamilySpec, Graph};
use tuttekit::tutte::{char_poly, tutte_delcon, DelconOptions};

fn main() -> tuttekit::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/hexagon.edges").into()
    });
    let text = std::fs::read_to_string(&path).map_err(|e| tuttekit::Error::Io(e.to_string()))?;
    let g = Graph::parse(&text)?;
    let a = build_family(&FamilySpec::Graphical(g.clone()))?;
    println!("chromatic:      {}", chromatic_polynomial(&g));
    println!("characteristic: {}", char_poly(&a)?);
    println!(
        "tutte:          {}",
        tutte_delcon(&a, DelconOptions::default())?.tutte
    );
    Ok(())
}
