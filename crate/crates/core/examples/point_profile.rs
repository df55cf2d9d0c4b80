//! Reduction of a rational arrangement mod p and its point profile, serial
//! and parallel.
//!
//!     cargo run --release --example point_profile [p]

use std::time::Instant;

use tuttekit::families::pencil_coloop;
use tuttekit::finite_field::{point_profile, reduce_mod_p, ReductionMode};

fn main() -> tuttekit::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let a = pencil_coloop();
    let m = reduce_mod_p(&a, p, ReductionMode::Verified)?;

    let start = Instant::now();
    let serial = point_profile(&m, 1 << 32, false)?;
    let t_serial = start.elapsed();
    let start = Instant::now();
    let parallel = point_profile(&m, 1 << 32, true)?;
    let t_parallel = start.elapsed();

    assert_eq!(serial, parallel);
    println!("p = {p}: {}", serial.csv_row());
    println!("as a polynomial in t: {}", serial.polynomial("t"));
    println!("serial {t_serial:?}, parallel {t_parallel:?}");
    Ok(())
}
