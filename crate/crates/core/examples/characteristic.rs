//! Characteristic polynomial and region counts of an affine arrangement.
//!
//!     cargo run --example characteristic [path.json]

use tuttekit::tutte::{char_poly, scalar_invariants, tutte_subset};
use tuttekit::Arrangement;

fn main() -> tuttekit::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/data/affine_lines.json"
        )
        .into()
    });
    let a = Arrangement::read_json(&path)?;
    let chi = char_poly(&a)?;
    println!("chi(q) = {chi}");

    let t = tutte_subset(&a)?;
    let inv = scalar_invariants(&t, a.dim(), a.is_central_arrangement())?;
    for (key, value) in inv.to_record() {
        println!("{key}: {value}");
    }
    Ok(())
}
