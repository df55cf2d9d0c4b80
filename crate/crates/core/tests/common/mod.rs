#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tuttekit::algebra::{rat, MultiPoly};
use tuttekit::Arrangement;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_n` hyperplanes in dimension `1..=max_d` with entries in
/// `[-3, 3]`. About half are central; a zero normal becomes a loop.
pub fn random_arrangement(rng: &mut ChaCha8Rng, max_n: usize, max_d: usize) -> Arrangement {
    let d = rng.gen_range(1..=max_d);
    let n = rng.gen_range(0..=max_n);
    let central = rng.gen_bool(0.5);
    let rows: Vec<(Vec<i64>, i64)> = (0..n)
        .map(|_| {
            let normal: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
            let offset = if central || normal.iter().all(|&c| c == 0) {
                0
            } else {
                rng.gen_range(-2..=2)
            };
            (normal, offset)
        })
        .collect();
    Arrangement::from_int_rows(d, &rows).unwrap()
}

/// `Π (q - r)` over the roots.
pub fn product_of_roots(roots: impl IntoIterator<Item = i64>) -> MultiPoly {
    let q = MultiPoly::var("q");
    roots
        .into_iter()
        .fold(MultiPoly::one(), |acc, r| {
            &acc * &(&q - &MultiPoly::constant(rat(r)))
        })
        .in_vars(&["q"])
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
