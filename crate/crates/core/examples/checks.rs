//! Cross-checks of every engine and identity on one arrangement.
//!
//!     cargo run --release --example checks

use tuttekit::checks::{check_arrangement, check_family, CheckOptions};
use tuttekit::families::{pencil_coloop, FamilySpec};

fn main() -> tuttekit::Result<()> {
    let opts = CheckOptions::default();
    print!("{}", check_arrangement(&pencil_coloop(), &opts));
    let report = check_family(&FamilySpec::Catalan { n: 3 }, &opts)?;
    print!("{report}");
    println!("{} failures", report.failures().count());
    Ok(())
}
