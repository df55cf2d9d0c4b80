//! Closed forms from exponential generating functions, compared with the
//! engines.
//!
//!     cargo run --example oracles

use tuttekit::families::{build_family, oracle_coboundary, FamilySpec};
use tuttekit::tutte::{coboundary_transform, tutte_subset};

fn main() -> tuttekit::Result<()> {
    for spec in [
        FamilySpec::Braid { n: 4 },
        FamilySpec::Bc { n: 3 },
        FamilySpec::Threshold { n: 4 },
        FamilySpec::AllLinear { p: 3, n: 2 },
    ] {
        let oracle = oracle_coboundary(&spec)?;
        let t = tutte_subset(&build_family(&spec)?)?;
        let engine = coboundary_transform(&t.tutte, t.rank)?;
        let poly = oracle
            .as_poly()
            .expect("coboundary oracles are polynomials");
        println!(
            "{spec}: {} ({})",
            poly,
            if *poly == engine {
                "matches"
            } else {
                "MISMATCH"
            }
        );
    }
    Ok(())
}
