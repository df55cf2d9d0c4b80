use super::{Engine, TutteResult};
use crate::algebra::{rat, MultiPoly};
use crate::arrangement::{indices_of, Arrangement};
use crate::error::{Error, Result};
use crate::linalg::combinations;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisActivity {
    /// Hyperplane indices of the basis, increasing.
    pub basis: Vec<usize>,
    pub internal: usize,
    pub external: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityCertificate {
    pub order: Vec<usize>,
    pub entries: Vec<BasisActivity>,
}

impl ActivityCertificate {
    /// `Σ_B x^{i(B)} y^{e(B)}`.
    pub fn polynomial(&self) -> MultiPoly {
        MultiPoly::from_terms(
            &["x", "y"],
            self.entries
                .iter()
                .map(|b| (vec![b.internal as u32, b.external as u32], rat(1))),
        )
    }
}

/// Tutte polynomial from internal and external activities of bases, with
/// respect to the linear order `order` (position `k` holds the `k`-th
/// smallest hyperplane).
pub fn tutte_activity(
    a: &Arrangement,
    order: &[usize],
) -> Result<(TutteResult, ActivityCertificate)> {
    let n = a.len();
    let mut pos = vec![usize::MAX; n];
    for (k, &h) in order.iter().enumerate() {
        if h >= n || pos[h] != usize::MAX {
            return Err(Error::IndexOutOfRange { index: h, len: n });
        }
        pos[h] = k;
    }
    if order.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: order.len(),
        });
    }
    let table = a.semimatroid()?;
    let r = table.rank();
    let below = |h: usize| -> u64 {
        (0..n)
            .filter(|&g| pos[g] < pos[h])
            .fold(0, |m, g| m | 1 << g)
    };
    let above = |h: usize| -> u64 {
        (0..n)
            .filter(|&g| pos[g] > pos[h])
            .fold(0, |m, g| m | 1 << g)
    };

    let mut entries = Vec::new();
    for basis in combinations(n, r) {
        let bmask = basis.iter().fold(0u64, |m, &i| m | 1 << i);
        if table.get(bmask) != Some(r) {
            continue;
        }
        let mut external = 0;
        for h in (0..n).filter(|h| bmask >> h & 1 == 0) {
            if table.get(bmask | 1 << h).is_none() {
                continue;
            }
            let upper = bmask & above(h);
            if table.get(upper | 1 << h) == table.get(upper) {
                external += 1;
            }
        }
        let mut internal = 0;
        for &h in &basis {
            let rest = bmask & !(1u64 << h);
            // (B - H) ∪ A_{<H} need not be central; its rank is that of its
            // normals
            let set = rest | below(h);
            if a.normal_rank(indices_of(set)) == r - 1 {
                internal += 1;
            }
        }
        entries.push(BasisActivity {
            basis,
            internal,
            external,
        });
    }
    let cert = ActivityCertificate {
        order: order.to_vec(),
        entries,
    };
    let res = TutteResult {
        tutte: cert.polynomial(),
        rank: r,
        n,
        engine: Engine::Activity,
    };
    Ok((res, cert))
}
