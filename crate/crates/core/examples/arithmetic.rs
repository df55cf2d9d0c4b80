//! Arithmetic Tutte polynomial of an integer vector configuration.
//!
//!     cargo run --example arithmetic [vectors.txt]

use tuttekit::arithmetic::{arithmetic_tutte, torsion_exponent, VectorConfig};

fn main() -> tuttekit::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/data/tilted_square.txt"
        )
        .into()
    });
    let text = std::fs::read_to_string(&path).map_err(|e| tuttekit::Error::Io(e.to_string()))?;
    let c = VectorConfig::parse(&text)?;
    let m = arithmetic_tutte(&c)?;
    println!("M(x, y) = {}", m.poly);
    println!("arithmetic characteristic: {}", m.characteristic());
    println!("torsion exponent: {}", torsion_exponent(&c));
    for s in [vec![0], vec![0, 1]] {
        if s.iter().all(|&i| i < c.len()) {
            println!("multiplicity of {s:?}: {}", c.multiplicity(&s));
        }
    }
    Ok(())
}
