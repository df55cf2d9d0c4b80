//! Arithmetic Tutte polynomials of integer vector configurations, zonotope
//! evaluations and toric point counts.

mod toric;
mod zonotope;

pub use toric::{toric_identity_check, toric_point_profile, ToricProfile};
pub use zonotope::{brute_force_zonotope, ZonotopeCount};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{rat, MultiPoly, Rational};
use crate::arrangement::{indices_of, Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::linalg::{self, combinations, GroundField};
use crate::tutte::expand_shifted;

pub const MAX_VECTORS: usize = 24;

/// Integer vectors in `Z^d`, the columns of a `d x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfig {
    dim: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl VectorConfig {
    pub fn new(dim: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        Ok(VectorConfig { dim, vectors })
    }

    pub fn from_ints(dim: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Text format: the dimension on the first line, then one vector per
    /// line as whitespace- or comma-separated integers. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, first) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty vector file".into()))?;
        let first = first.strip_prefix("dim").unwrap_or(first).trim();
        let dim: usize = first
            .parse()
            .map_err(|_| Error::Parse(format!("line 1: expected the dimension, got `{first}`")))?;
        let mut vectors = Vec::new();
        for (no, line) in lines {
            let row = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("line {no}: bad integer `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != dim {
                return Err(Error::Parse(format!(
                    "line {no}: expected {dim} entries, got {}",
                    row.len()
                )));
            }
            vectors.push(row);
        }
        Self::new(dim, vectors)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.dim);
        for v in &self.vectors {
            let row: Vec<String> = v.iter().map(BigInt::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn rank_of(&self, subset: &[usize]) -> usize {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| self.vectors[i].clone()).collect();
        linalg::rank(GroundField::Rational, &rows, self.dim)
    }

    pub fn rank(&self) -> usize {
        self.rank_of(&(0..self.len()).collect::<Vec<_>>())
    }

    /// The central arrangement `{x : a · x = 0}` over the rationals.
    pub fn linear_arrangement(&self) -> Result<Arrangement> {
        let hs = self
            .vectors
            .iter()
            .map(|v| {
                let normal = v
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect();
                if v.iter().all(Zero::is_zero) {
                    Ok(Hyperplane::degenerate(self.dim))
                } else {
                    Hyperplane::new(normal, Rational::zero())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::rational(self.dim, hs)
    }

    /// Each vector multiplied by `k`.
    pub fn scaled(&self, k: i64) -> VectorConfig {
        VectorConfig {
            dim: self.dim,
            vectors: self
                .vectors
                .iter()
                .map(|v| v.iter().map(|c| c * k).collect())
                .collect(),
        }
    }

    /// The `d x |B|` matrix with the vectors of `B` as columns.
    fn columns(&self, subset: &[usize]) -> Vec<Vec<BigInt>> {
        (0..self.dim)
            .map(|row| {
                subset
                    .iter()
                    .map(|&i| self.vectors[i][row].clone())
                    .collect()
            })
            .collect()
    }

    /// `m(B)`: gcd of the `r(B) x r(B)` minors of the matrix with columns `B`.
    pub fn multiplicity(&self, subset: &[usize]) -> BigInt {
        let r = self.rank_of(subset);
        if r == 0 {
            return BigInt::one();
        }
        let m = self.columns(subset);
        let mut g = BigInt::zero();
        for rows in combinations(self.dim, r) {
            for cols in combinations(subset.len(), r) {
                g = g.gcd(&linalg::minor(&m, &rows, &cols));
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    /// `m(B)` as the product of the invariant factors of the same matrix.
    pub fn multiplicity_smith(&self, subset: &[usize]) -> BigInt {
        linalg::smith_invariants(&self.columns(subset))
            .iter()
            .fold(BigInt::one(), |a, f| a * f)
    }
}

impl fmt::Display for VectorConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .vectors
            .iter()
            .map(|v| {
                format!(
                    "({})",
                    v.iter()
                        .map(BigInt::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "{{{}}}", vs.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticTutte {
    /// Polynomial in `x`, `y`.
    pub poly: MultiPoly,
    pub rank: usize,
    pub dim: usize,
    pub n: usize,
}

/// `Σ_B m(B) (x-1)^{r-r(B)} (y-1)^{|B|-r(B)}` over all subsets.
pub fn arithmetic_tutte(c: &VectorConfig) -> Result<ArithmeticTutte> {
    let n = c.len();
    if n > MAX_VECTORS {
        return Err(Error::TooManyHyperplanes(n));
    }
    let r = c.rank();
    let mut counts = vec![vec![BigInt::zero(); n + 1]; r + 1];
    for mask in 0..(1u64 << n) {
        let b = indices_of(mask);
        let rb = c.rank_of(&b);
        counts[r - rb][b.len() - rb] += c.multiplicity_smith(&b);
    }
    Ok(ArithmeticTutte {
        poly: expand_shifted(&counts).in_vars(&["x", "y"]),
        rank: r,
        dim: c.dim(),
        n,
    })
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Replaces `x^i y^j` by `f(i) * g(j)`, a polynomial in `q`.
fn transform(
    m: &MultiPoly,
    f: impl Fn(u32) -> MultiPoly,
    g: impl Fn(u32) -> MultiPoly,
) -> MultiPoly {
    let mut out = MultiPoly::zero_in(&["q"]);
    for (e, c) in m.in_vars(&["x", "y"]).terms() {
        out = &out + &(&f(e[0]) * &g(e[1])).scale(c);
    }
    out.in_vars(&["q"])
}

fn q() -> MultiPoly {
    MultiPoly::var("q")
}

impl ArithmeticTutte {
    pub fn eval(&self, x: i64, y: i64) -> BigInt {
        self.poly
            .eval_scalar(&[("x", rat(x)), ("y", rat(y))])
            .expect("polynomial in x and y")
            .to_integer()
    }

    /// `(-1)^r q^{d-r} M(1-q, 0)`.
    pub fn characteristic(&self) -> MultiPoly {
        let one_minus_q = &MultiPoly::one() - &q();
        let zero_y = |j: u32| {
            if j == 0 {
                MultiPoly::one()
            } else {
                MultiPoly::zero()
            }
        };
        let m = transform(&self.poly, |i| one_minus_q.pow(i), zero_y);
        (&m * &q().pow((self.dim - self.rank) as u32)).scale(&sign(self.rank))
    }

    /// `q^r M(1 + 1/q, 1)`, the Ehrhart polynomial of the zonotope.
    pub fn ehrhart(&self) -> MultiPoly {
        let r = self.rank as u32;
        let q1 = &q() + &MultiPoly::one();
        transform(
            &self.poly,
            |i| &q1.pow(i) * &q().pow(r - i),
            |_| MultiPoly::one(),
        )
    }

    /// `q^r M(2 + 1/q, 0)`, the Poincaré polynomial of the complement of
    /// the toric arrangement in `(C^*)^d`.
    pub fn toric_poincare(&self) -> MultiPoly {
        let r = self.rank as u32;
        let q2 = &q().scale(&rat(2)) + &MultiPoly::one();
        let zero_y = |j: u32| {
            if j == 0 {
                MultiPoly::one()
            } else {
                MultiPoly::zero()
            }
        };
        transform(&self.poly, |i| &q2.pow(i) * &q().pow(r - i), zero_y)
    }

    /// `M(1, 0)`, the number of regions of the toric arrangement in the
    /// compact torus.
    pub fn toric_regions(&self) -> BigInt {
        self.eval(1, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopeEvaluations {
    /// `M(1,1)`.
    pub volume: BigInt,
    /// `M(2,1)`.
    pub lattice_points: BigInt,
    /// `M(0,1)`.
    pub interior_points: BigInt,
    /// `q^r M(1 + 1/q, 1)`.
    pub ehrhart: MultiPoly,
}

pub fn zonotope_evaluations(m: &ArithmeticTutte) -> ZonotopeEvaluations {
    ZonotopeEvaluations {
        volume: m.eval(1, 1),
        lattice_points: m.eval(2, 1),
        interior_points: m.eval(0, 1),
        ehrhart: m.ehrhart(),
    }
}

/// Least common multiple of every nonzero invariant factor of every
/// subset; the toric identity is guaranteed when it divides `q`.
pub fn torsion_exponent(c: &VectorConfig) -> BigInt {
    let mut l = BigInt::one();
    for mask in 0..(1u64 << c.len()) {
        let b = indices_of(mask);
        if b.is_empty() {
            continue;
        }
        for f in linalg::smith_invariants(&c.columns(&b)) {
            l = l.lcm(&f.abs());
        }
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tutte::tutte_subset;
    use proptest::prelude::*;

    fn cfg(d: usize, v: &[Vec<i64>]) -> VectorConfig {
        VectorConfig::from_ints(d, v).unwrap()
    }

    #[test]
    fn multiplicities() {
        let c = cfg(
            2,
            &[vec![2, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1]],
        );
        assert_eq!(c.multiplicity(&[0]), BigInt::from(2));
        assert_eq!(c.multiplicity(&[1, 2]), BigInt::from(1));
        assert_eq!(c.multiplicity(&[3, 4]), BigInt::from(2));
        assert_eq!(c.multiplicity(&[]), BigInt::from(1));
        assert_eq!(c.multiplicity_smith(&[3, 4]), BigInt::from(2));
    }

    #[test]
    fn small_arithmetic_tutte() {
        let m = arithmetic_tutte(&cfg(2, &[vec![1, 1], vec![1, -1]])).unwrap();
        assert_eq!(m.poly.to_text(), "x^2 + 1");
        let m = arithmetic_tutte(&cfg(2, &[vec![2, 0], vec![0, 1]])).unwrap();
        assert_eq!(m.poly.to_text(), "x^2 + x");
        let z = zonotope_evaluations(&m);
        assert_eq!(
            (z.volume, z.lattice_points, z.interior_points),
            (2.into(), 6.into(), 0.into())
        );
        assert_eq!(z.ehrhart.to_text(), "2*q^2 + 3*q + 1");
        let cube =
            arithmetic_tutte(&cfg(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap();
        let z = zonotope_evaluations(&cube);
        assert_eq!(
            (z.volume, z.lattice_points, z.interior_points),
            (1.into(), 8.into(), 0.into())
        );
        assert_eq!(z.ehrhart, (&q() + &MultiPoly::one()).pow(3));
    }

    #[test]
    fn characteristic_counts_torus_complement() {
        let m = arithmetic_tutte(&cfg(2, &[vec![1, 1], vec![1, -1]])).unwrap();
        assert_eq!(m.characteristic().to_text(), "q^2 - 2*q + 2");
        assert_eq!(m.toric_regions(), BigInt::from(2));
    }

    #[test]
    fn parse_round_trip() {
        let c = VectorConfig::parse("# two vectors\n2\n1 1\n1,-1\n").unwrap();
        assert_eq!(c, cfg(2, &[vec![1, 1], vec![1, -1]]));
        assert_eq!(VectorConfig::parse(&c.to_text()).unwrap(), c);
        assert!(VectorConfig::parse("2\n1 2 3\n").is_err());
        assert!(VectorConfig::parse("").is_err());
        assert_eq!(VectorConfig::parse("dim 1\n3\n").unwrap().len(), 1);
    }

    fn configs() -> impl Strategy<Value = VectorConfig> {
        (1usize..=3).prop_flat_map(|d| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, d), 0..=5)
                .prop_map(move |v| VectorConfig::from_ints(d, &v).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn smith_matches_minors(c in configs()) {
            for mask in 0..(1u64 << c.len()) {
                let b = indices_of(mask);
                prop_assert_eq!(c.multiplicity(&b), c.multiplicity_smith(&b));
            }
        }

        #[test]
        fn unimodular_configurations_give_the_tutte_polynomial(
            c in (1usize..=3).prop_flat_map(|d| {
                prop::collection::vec(prop::collection::vec(-1i64..=1, d), 0..=5)
                    .prop_map(move |v| VectorConfig::from_ints(d, &v).unwrap())
            })
        ) {
            let m = arithmetic_tutte(&c).unwrap();
            let all_one = (0..(1u64 << c.len())).all(|mask| c.multiplicity(&indices_of(mask)).is_one());
            if all_one {
                let t = tutte_subset(&c.linear_arrangement().unwrap()).unwrap();
                prop_assert_eq!(m.poly, t.tutte);
            }
        }
    }
}
