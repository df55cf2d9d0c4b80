use num_bigint::BigInt;

use super::{expand_shifted, Engine, TutteResult};
use crate::arrangement::Arrangement;
use crate::error::Result;

/// Sum over central subsets `B` of `(x-1)^{r-r(B)} (y-1)^{|B|-r(B)}`.
pub fn tutte_subset(a: &Arrangement) -> Result<TutteResult> {
    let table = a.semimatroid()?;
    let n = a.len();
    let r = table.rank();
    let mut counts = vec![vec![0u64; n + 1]; r + 1];
    for (mask, rb) in table.central() {
        counts[r - rb][mask.count_ones() as usize - rb] += 1;
    }
    let counts: Vec<Vec<BigInt>> = counts
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    Ok(TutteResult {
        tutte: expand_shifted(&counts),
        rank: r,
        n,
        engine: Engine::Subset,
    })
}
