//! The multivariate Tutte polynomial and its specializations.
//!
//!     cargo run --example multivariate

use tuttekit::families::pencil_coloop;
use tuttekit::multivariate::{check_thickening, multivariate_tutte};
use tuttekit::tutte::tutte_subset;

fn main() -> tuttekit::Result<()> {
    let a = pencil_coloop();
    let z = multivariate_tutte(&a)?;
    println!("Z = {}", z.poly);
    println!("equal weights: {}", z.uniform()?);
    z.check_uniform(&tutte_subset(&a)?)?;
    // hyperplane 0 doubled, hyperplane 3 removed
    println!(
        "thickened by [2, 1, 1, 0]: {}",
        check_thickening(&a, &[2, 1, 1, 0])?
    );
    Ok(())
}
