use std::collections::HashMap;

use super::{Engine, TutteResult};
use crate::algebra::MultiPoly;
use crate::arrangement::{Arrangement, HyperplaneKind, SubsetRanks};
use crate::error::Result;

/// Largest arrangement whose subset table is used as a cache key.
const MEMO_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, Default)]
pub struct DelconOptions {
    /// Cache results keyed by the subset-rank table (for up to 16
    /// hyperplanes).
    pub memoize: bool,
}

/// Deletion–contraction: strip loops (factor `y`) and coloops (factor `x`),
/// then split on the last ordinary hyperplane.
pub fn tutte_delcon(a: &Arrangement, opts: DelconOptions) -> Result<TutteResult> {
    let mut memo = HashMap::new();
    let t = go(a.clone(), opts, &mut memo)?;
    Ok(TutteResult {
        tutte: t.in_vars(&["x", "y"]),
        rank: a.rank(),
        n: a.len(),
        engine: Engine::Delcon,
    })
}

fn go(
    mut a: Arrangement,
    opts: DelconOptions,
    memo: &mut HashMap<SubsetRanks, MultiPoly>,
) -> Result<MultiPoly> {
    let x = MultiPoly::var("x");
    let y = MultiPoly::var("y");
    let mut factor = MultiPoly::one();
    let pivot = loop {
        if a.is_empty() {
            return Ok(factor);
        }
        let mut ordinary = None;
        let mut stripped = false;
        for h in (0..a.len()).rev() {
            match a.classify(h)? {
                HyperplaneKind::Loop => {
                    factor = &factor * &y;
                    a = a.delete(h)?;
                    stripped = true;
                    break;
                }
                HyperplaneKind::Coloop => {
                    factor = &factor * &x;
                    a = a.delete(h)?;
                    stripped = true;
                    break;
                }
                HyperplaneKind::Ordinary => {
                    ordinary.get_or_insert(h);
                }
            }
        }
        if !stripped {
            break ordinary.expect("nonempty arrangement without loops or coloops");
        }
    };

    let key = if opts.memoize && a.len() <= MEMO_MAX_N {
        Some(a.semimatroid()?)
    } else {
        None
    };
    if let Some(t) = key.as_ref().and_then(|k| memo.get(k)) {
        return Ok(&factor * t);
    }
    let del = go(a.delete(pivot)?, opts, memo)?;
    let con = go(a.contract(pivot)?, opts, memo)?;
    let t = &del + &con;
    if let Some(k) = key {
        memo.insert(k, t.clone());
    }
    Ok(&factor * &t)
}
