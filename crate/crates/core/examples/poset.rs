//! The intersection poset with its Möbius function.
//!
//!     cargo run --example poset

use tuttekit::families::{build_family, FamilySpec};

fn main() -> tuttekit::Result<()> {
    let a = build_family(&FamilySpec::Braid { n: 4 })?;
    let poset = a.intersection_poset()?;
    println!("{} flats, by rank {:?}", poset.len(), poset.rank_sizes());
    println!("Möbius sums by rank {:?}", poset.mobius_by_rank());
    for (i, f) in poset
        .flats()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.rank == 2)
    {
        println!(
            "  {:?} dim {} mobius {}",
            f.hyperplanes,
            f.dim,
            poset.mobius(i)
        );
    }
    assert!(poset.check_mobius_recursion().is_none());
    Ok(())
}
