//! The same Tutte polynomial from the three direct engines.
//!
//!     cargo run --example tutte_engines

use tuttekit::families::pencil_coloop;
use tuttekit::tutte::{tutte_activity, tutte_delcon, tutte_subset, DelconOptions};

fn main() -> tuttekit::Result<()> {
    let a = pencil_coloop();
    println!(
        "{} hyperplanes in dimension {}, rank {}",
        a.len(),
        a.dim(),
        a.rank()
    );

    let subset = tutte_subset(&a)?;
    println!("subset expansion:     {}", subset.tutte);

    let delcon = tutte_delcon(&a, DelconOptions::default())?;
    println!("deletion-contraction: {}", delcon.tutte);

    // internal and external activity of each basis, in a chosen order
    let order = vec![3, 2, 1, 0];
    let (act, cert) = tutte_activity(&a, &order)?;
    println!("basis activities:     {}", act.tutte);
    for b in &cert.entries {
        println!(
            "  basis {:?}: internal {}, external {}",
            b.basis, b.internal, b.external
        );
    }
    Ok(())
}
