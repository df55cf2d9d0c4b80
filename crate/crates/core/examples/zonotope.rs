//! Volume and lattice points of a zonotope, read off the arithmetic Tutte
//! polynomial and checked by direct enumeration.
//!
//!     cargo run --example zonotope

use tuttekit::arithmetic::{
    arithmetic_tutte, brute_force_zonotope, zonotope_evaluations, VectorConfig,
};

fn main() -> tuttekit::Result<()> {
    let c = VectorConfig::from_ints(2, &[vec![2, 0], vec![0, 1], vec![1, 1]])?;
    let ev = zonotope_evaluations(&arithmetic_tutte(&c)?);
    println!(
        "volume {}, lattice points {}, interior {}",
        ev.volume, ev.lattice_points, ev.interior_points
    );
    println!("Ehrhart polynomial {}", ev.ehrhart);
    let direct = brute_force_zonotope(&c)?;
    println!("by enumeration: {direct:?}");
    Ok(())
}
