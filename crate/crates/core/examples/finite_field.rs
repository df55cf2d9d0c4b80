//! Coboundary polynomial by counting points over several finite fields.
//!
//!     cargo run --release --example finite_field

use tuttekit::families::{build_family, FamilySpec};
use tuttekit::finite_field::{coboundary_ffm, FfmOptions};
use tuttekit::tutte::tutte_from_coboundary;

fn main() -> tuttekit::Result<()> {
    let a = build_family(&FamilySpec::Shi { n: 3 })?;
    let res = coboundary_ffm(&a, &FfmOptions::default())?;
    println!("Shi arrangement, n = 3");
    for prof in &res.profiles {
        println!(
            "  p = {:>2}: points on exactly k hyperplanes {:?}",
            prof.p, prof.counts
        );
    }
    println!("coboundary: {}", res.coboundary);
    println!(
        "tutte:      {}",
        tutte_from_coboundary(&res.coboundary, res.rank)?
    );
    Ok(())
}
