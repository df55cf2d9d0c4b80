//! Points of a toric arrangement over F_{q+1}^*.
//!
//!     cargo run --example toric

use tuttekit::arithmetic::{
    arithmetic_tutte, toric_identity_check, toric_point_profile, VectorConfig,
};

fn main() -> tuttekit::Result<()> {
    let c = VectorConfig::from_ints(2, &[vec![1, 1], vec![1, -1]])?;
    let m = arithmetic_tutte(&c)?;
    println!("compact regions of the complement: {}", m.toric_regions());
    println!("Poincaré polynomial: {}", m.toric_poincare());
    for q in [2, 4, 6, 10] {
        let prof = toric_point_profile(&c, q, 1 << 24, true)?;
        let verdict = match toric_identity_check(&m, &prof) {
            Ok(()) => "holds".to_string(),
            Err(e) => e.to_string(),
        };
        println!("q = {q:>2}: {:<16} {verdict}", prof.csv_row());
    }
    Ok(())
}
