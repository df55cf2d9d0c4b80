//! Named arrangement families and closed-form oracles for them.

mod graph;
mod oracle;
mod thicken;

pub use graph::{chromatic_polynomial, Graph};
pub use oracle::{
    oracle_bipartite, oracle_char, oracle_coboundary, oracle_regions, oracle_tutte, OracleKind,
    OracleResult, OracleValue,
};
pub use thicken::{thicken, thicken_identity_check, thickened_tutte_formula, ThickenReport};

use std::fmt;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::{self, combinations};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `x_i = 0` in `k^n`.
    Coordinate { n: usize },
    /// `x_i = x_j` for `i < j` in `k^n`.
    Braid { n: usize },
    /// `x_i = x_j` per edge; a self-loop gives the degenerate hyperplane.
    Graphical(Graph),
    /// `x_i - x_j`, then `x_i + x_j`, then `x_i`.
    Bc { n: usize },
    /// `x_i - x_j`, then `x_i + x_j`.
    Dn { n: usize },
    /// `n` central hyperplanes in general position in `k^d`.
    Generic { n: usize, d: usize },
    /// `x_i - x_j ∈ {-1, 0, 1}` in `k^n`, pairs outermost.
    Catalan { n: usize },
    /// `x_i - x_j ∈ {0, 1}` in `k^n`, pairs outermost.
    Shi { n: usize },
    /// `x_i + x_j = 0` in `k^n`.
    Threshold { n: usize },
    /// Every linear hyperplane of `F_p^n`.
    AllLinear { p: u64, n: usize },
    /// Each hyperplane of the base repeated `k` times.
    Thickened { base: Box<FamilySpec>, k: usize },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Coordinate { .. } => "coordinate",
            FamilySpec::Braid { .. } => "braid",
            FamilySpec::Graphical(_) => "graphical",
            FamilySpec::Bc { .. } => "bc",
            FamilySpec::Dn { .. } => "dn",
            FamilySpec::Generic { .. } => "generic",
            FamilySpec::Catalan { .. } => "catalan",
            FamilySpec::Shi { .. } => "shi",
            FamilySpec::Threshold { .. } => "threshold",
            FamilySpec::AllLinear { .. } => "all_linear",
            FamilySpec::Thickened { .. } => "thickened",
        }
    }

    /// Ambient dimension of the built arrangement.
    pub fn dim(&self) -> usize {
        match self {
            FamilySpec::Coordinate { n }
            | FamilySpec::Braid { n }
            | FamilySpec::Bc { n }
            | FamilySpec::Dn { n }
            | FamilySpec::Catalan { n }
            | FamilySpec::Shi { n }
            | FamilySpec::Threshold { n }
            | FamilySpec::AllLinear { n, .. } => *n,
            FamilySpec::Graphical(g) => g.vertices,
            FamilySpec::Generic { d, .. } => *d,
            FamilySpec::Thickened { base, .. } => base.dim(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self {
            FamilySpec::Graphical(g) => g.validate(),
            FamilySpec::Generic { n, d } if *n == 0 || *d == 0 => {
                bad("generic needs n, d >= 1".into())
            }
            FamilySpec::AllLinear { p, n } => {
                if !linalg::is_prime(*p) {
                    Err(Error::NotPrime(*p))
                } else if *n == 0 {
                    bad("all_linear needs n >= 1".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::Thickened { k: 0, .. } => bad("thickening needs k >= 1".into()),
            FamilySpec::Thickened { base, .. } => base.validate(),
            other if other.dim() == 0 => bad(format!("{} needs n >= 1", other.tag())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Graphical(g) => write!(
                f,
                "graphical({} vertices, {} edges)",
                g.vertices,
                g.edges.len()
            ),
            FamilySpec::Generic { n, d } => write!(f, "generic({n},{d})"),
            FamilySpec::AllLinear { p, n } => write!(f, "all_linear({p},{n})"),
            FamilySpec::Thickened { base, k } => write!(f, "thickened({base},{k})"),
            other => write!(f, "{}({})", other.tag(), other.dim()),
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn pair(n: usize, i: usize, j: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = sign;
    v
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn rows_of(spec: &FamilySpec) -> Vec<(Vec<i64>, i64)> {
    match spec {
        FamilySpec::Coordinate { n } => (0..*n).map(|i| (unit(*n, i), 0)).collect(),
        FamilySpec::Braid { n } => pairs(*n).map(|(i, j)| (pair(*n, i, j, -1), 0)).collect(),
        FamilySpec::Bc { n } | FamilySpec::Dn { n } => {
            let mut rows: Vec<_> = pairs(*n).map(|(i, j)| (pair(*n, i, j, -1), 0)).collect();
            rows.extend(pairs(*n).map(|(i, j)| (pair(*n, i, j, 1), 0)));
            if matches!(spec, FamilySpec::Bc { .. }) {
                rows.extend((0..*n).map(|i| (unit(*n, i), 0)));
            }
            rows
        }
        FamilySpec::Catalan { n } => pairs(*n)
            .flat_map(|(i, j)| [-1, 0, 1].map(|c| (pair(*n, i, j, -1), c)))
            .collect(),
        FamilySpec::Shi { n } => pairs(*n)
            .flat_map(|(i, j)| [0, 1].map(|c| (pair(*n, i, j, -1), c)))
            .collect(),
        FamilySpec::Threshold { n } => pairs(*n).map(|(i, j)| (pair(*n, i, j, 1), 0)).collect(),
        FamilySpec::Graphical(g) => g
            .edges
            .iter()
            .map(|&(i, j)| {
                if i == j {
                    (vec![0; g.vertices], 0)
                } else {
                    (pair(g.vertices, i.min(j), i.max(j), -1), 0)
                }
            })
            .collect(),
        _ => unreachable!("rows_of called on {spec}"),
    }
}

/// Normals `(1, t, t^2, ..., t^{d-1})` at `t = shift+1, ..., shift+n`.
fn vandermonde(n: usize, d: usize, shift: i64) -> Vec<(Vec<i64>, i64)> {
    (1..=n as i64)
        .map(|i| {
            let t = i + shift;
            ((0..d as u32).map(|k| t.pow(k)).collect(), 0)
        })
        .collect()
}

/// Every `min(n, d)` of the hyperplanes are independent.
pub fn is_generic(a: &Arrangement) -> bool {
    let m = a.len().min(a.dim());
    combinations(a.len(), m)
        .iter()
        .all(|s| a.rank_of(s).map_or(false, |r| r == m))
}

fn all_linear(p: u64, n: usize) -> Result<Arrangement> {
    // normals with first nonzero entry 1, in lexicographic order
    let mut rows = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for idx in 0..p.pow(free as u32) {
            let mut v = vec![0i64; n];
            v[lead] = 1;
            let mut r = idx;
            for c in v[lead + 1..].iter_mut().rev() {
                *c = (r % p) as i64;
                r /= p;
            }
            rows.push((v, 0));
        }
    }
    Arrangement::over_prime(p, n, &rows)
}

/// Planes `x = 0`, `y = 0`, `x = y` through the `z`-axis and the plane
/// `z = 0` in `Q^3`. The three pencil planes form the only dependent
/// triple and `z = 0` is a coloop; `T = x^3 + x^2 + xy`.
pub fn pencil_coloop() -> Arrangement {
    Arrangement::from_int_rows(
        3,
        &[
            (vec![1, 0, 0], 0),
            (vec![0, 1, 0], 0),
            (vec![1, -1, 0], 0),
            (vec![0, 0, 1], 0),
        ],
    )
    .expect("valid rows")
    .with_label("pencil_coloop")
}

/// The arrangement described by `spec`, with a label naming it.
pub fn build_family(spec: &FamilySpec) -> Result<Arrangement> {
    spec.validate()?;
    let a = match spec {
        FamilySpec::Generic { n, d } => {
            let mut shift = 0;
            loop {
                let a = Arrangement::from_int_rows(*d, &vandermonde(*n, *d, shift))?;
                if is_generic(&a) {
                    break a;
                }
                shift += *n as i64;
                if shift > 64 * *n as i64 {
                    return Err(Error::InvalidFamily(format!(
                        "no generic configuration found for {spec}"
                    )));
                }
            }
        }
        FamilySpec::AllLinear { p, n } => all_linear(*p, *n)?,
        FamilySpec::Thickened { base, k } => thicken(&build_family(base)?, *k)?,
        other => Arrangement::from_int_rows(other.dim(), &rows_of(other))?,
    };
    Ok(a.with_label(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;
    use crate::tutte::{char_poly, tutte_subset};
    use num_bigint::BigInt;

    #[test]
    fn small_constructions() {
        let b = build_family(&FamilySpec::Braid { n: 3 }).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(
            b.hyperplane(0),
            &Hyperplane::from_ints(&[1, -1, 0], 0).unwrap()
        );
        let s = build_family(&FamilySpec::Shi { n: 3 }).unwrap();
        assert_eq!((s.len(), s.dim()), (6, 3));
        assert_eq!(
            s.hyperplane(1),
            &Hyperplane::from_ints(&[1, -1, 0], 1).unwrap()
        );
        let al = build_family(&FamilySpec::AllLinear { p: 2, n: 2 }).unwrap();
        assert_eq!(al.len(), 3);
        assert_eq!(
            build_family(&FamilySpec::AllLinear { p: 3, n: 2 })
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            build_family(&FamilySpec::AllLinear { p: 2, n: 3 })
                .unwrap()
                .len(),
            7
        );
        assert_eq!(build_family(&FamilySpec::Bc { n: 2 }).unwrap().len(), 4);
        assert_eq!(build_family(&FamilySpec::Dn { n: 3 }).unwrap().len(), 6);
        assert_eq!(
            build_family(&FamilySpec::Catalan { n: 3 }).unwrap().len(),
            9
        );
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            build_family(&FamilySpec::AllLinear { p: 4, n: 2 }),
            Err(Error::NotPrime(4))
        ));
        assert!(build_family(&FamilySpec::Braid { n: 0 }).is_err());
        let base = Box::new(FamilySpec::Braid { n: 3 });
        assert!(build_family(&FamilySpec::Thickened { base, k: 0 }).is_err());
    }

    #[test]
    fn generic_is_generic_and_central() {
        for (n, d) in [(4, 2), (5, 2), (5, 3), (3, 4)] {
            let a = build_family(&FamilySpec::Generic { n, d }).unwrap();
            assert!(a.is_central_arrangement());
            assert!(is_generic(&a));
        }
    }

    #[test]
    fn braid_and_shi_characteristic() {
        let chi = char_poly(&build_family(&FamilySpec::Braid { n: 3 }).unwrap()).unwrap();
        assert_eq!(chi.to_text(), "q^3 - 3*q^2 + 2*q");
        let shi = build_family(&FamilySpec::Shi { n: 3 }).unwrap();
        assert_eq!(char_poly(&shi).unwrap().to_text(), "q^3 - 6*q^2 + 9*q");
        assert_eq!(tutte_subset(&shi).unwrap().num_bases(), BigInt::from(12));
    }
}
