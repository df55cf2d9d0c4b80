//! Replacing each hyperplane by parallel copies.
//!
//!     cargo run --example thickening

use tuttekit::families::{build_family, thicken, thicken_identity_check, FamilySpec};
use tuttekit::tutte::{coboundary_transform, tutte_subset};

fn main() -> tuttekit::Result<()> {
    let a = build_family(&FamilySpec::Braid { n: 3 })?;
    for k in 1..=3 {
        let t = tutte_subset(&thicken(&a, k)?)?;
        println!(
            "k = {k}: coboundary {}",
            coboundary_transform(&t.tutte, t.rank)?
        );
    }
    let report = thicken_identity_check(&a, &[2, 1, 3])?;
    println!(
        "mixed multiplicities {:?}: passed {}",
        report.multiplicities,
        report.passed()
    );
    Ok(())
}
