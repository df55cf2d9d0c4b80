//! Built-in families with their characteristic polynomials and region
//! counts.
//!
//!     cargo run --example families

use tuttekit::families::{build_family, FamilySpec, Graph};
use tuttekit::tutte::{char_poly, scalar_invariants, tutte_subset};

fn main() -> tuttekit::Result<()> {
    let specs = [
        FamilySpec::Coordinate { n: 3 },
        FamilySpec::Braid { n: 4 },
        FamilySpec::Bc { n: 3 },
        FamilySpec::Dn { n: 3 },
        FamilySpec::Catalan { n: 3 },
        FamilySpec::Shi { n: 3 },
        FamilySpec::Threshold { n: 4 },
        FamilySpec::Generic { n: 5, d: 3 },
        FamilySpec::AllLinear { p: 2, n: 3 },
        FamilySpec::Graphical(Graph::cycle(5)),
    ];
    for spec in &specs {
        let a = build_family(spec)?;
        let t = tutte_subset(&a)?;
        let inv = scalar_invariants(&t, a.dim(), a.is_central_arrangement())?;
        println!("{spec:<24} n = {:>2}  chi = {}", a.len(), char_poly(&a)?);
        println!(
            "{:<24} regions {}, bounded {}",
            "", inv.regions, inv.bounded_regions
        );
    }
    Ok(())
}
