//! Values computed from closed formulas and generating functions, without
//! building the arrangement.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{FamilySpec, Graph};
use crate::algebra::{deformed_exp, q_factorial, rat, MultiPoly, Rational, TruncatedSeries};
use crate::error::{Error, Result};
use crate::tutte::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    CharPoly,
    Coboundary,
    Tutte,
    RegionCounts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleValue {
    Poly(MultiPoly),
    Regions {
        regions: Option<BigInt>,
        bounded: Option<BigInt>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub kind: OracleKind,
    pub value: OracleValue,
    /// Which formula produced the value.
    pub source: &'static str,
}

impl OracleResult {
    fn poly(kind: OracleKind, p: MultiPoly, source: &'static str) -> Self {
        OracleResult {
            kind,
            value: OracleValue::Poly(p),
            source,
        }
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        match &self.value {
            OracleValue::Poly(p) => Some(p),
            OracleValue::Regions { .. } => None,
        }
    }
}

fn q() -> MultiPoly {
    MultiPoly::var("q")
}

/// `Π (q - c)` over the given roots.
fn linear_product(roots: impl IntoIterator<Item = BigInt>) -> MultiPoly {
    roots.into_iter().fold(MultiPoly::one(), |acc, c| {
        &acc * &(&q() - &MultiPoly::constant(Rational::from_integer(c)))
    })
}

fn ints(r: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
    r.into_iter().map(BigInt::from).collect()
}

/// Characteristic polynomial from its factored form.
pub fn oracle_char(spec: &FamilySpec) -> Result<OracleResult> {
    if let FamilySpec::Graphical(g) = spec {
        if same_edges(g, &Graph::complete(g.vertices)) {
            return oracle_char(&FamilySpec::Braid { n: g.vertices });
        }
    }
    let n = spec.dim() as i64;
    let (p, source) = match spec {
        FamilySpec::Coordinate { .. } => (
            linear_product(ints((0..n).map(|_| 1))),
            "coordinate product",
        ),
        FamilySpec::Braid { .. } => (linear_product(ints(0..n)), "falling factorial"),
        FamilySpec::Bc { .. } => (
            linear_product(ints((1..=n).map(|i| 2 * i - 1))),
            "odd factors",
        ),
        FamilySpec::Dn { .. } => {
            let mut roots = ints((1..n).map(|i| 2 * i - 1));
            roots.push(BigInt::from(n - 1));
            (linear_product(roots), "odd factors with last root n-1")
        }
        FamilySpec::Catalan { .. } => {
            let mut roots = vec![BigInt::from(0)];
            roots.extend(ints(n + 1..=2 * n - 1));
            (linear_product(roots), "shifted falling factorial")
        }
        FamilySpec::Shi { .. } => {
            let mut roots = vec![BigInt::from(0)];
            roots.extend(ints((1..n).map(|_| n)));
            (linear_product(roots), "q(q-n)^(n-1)")
        }
        FamilySpec::AllLinear { p, .. } => {
            let p = BigInt::from(*p);
            (
                linear_product((0..n as u32).map(|i| p.pow(i))),
                "q-analogue product",
            )
        }
        FamilySpec::Generic { n, d } if n <= d => (
            linear_product(ints((0..*n).map(|_| 1))),
            "coordinate product",
        ),
        // the intersection poset does not see multiplicities
        FamilySpec::Thickened { base, .. } => return oracle_char(base),
        other => return Err(Error::NoClosedForm(other.tag().into())),
    };
    Ok(OracleResult::poly(
        OracleKind::CharPoly,
        p.in_vars(&["q"]),
        source,
    ))
}

/// Tutte polynomial of a generic central arrangement.
pub fn oracle_tutte(spec: &FamilySpec) -> Result<OracleResult> {
    let (p, source) = match spec {
        FamilySpec::Coordinate { n } => (MultiPoly::var("x").pow(*n as u32), "product of coloops"),
        FamilySpec::Generic { n, d } if n <= d => {
            (MultiPoly::var("x").pow(*n as u32), "product of coloops")
        }
        FamilySpec::Generic { n, d } => {
            let (n, d) = (*n, *d);
            let mut terms = Vec::new();
            for i in 1..=d {
                terms.push((
                    vec![i as u32, 0],
                    Rational::from_integer(binomial(n - i - 1, n - d - 1)),
                ));
            }
            for j in 1..=n - d {
                terms.push((
                    vec![0, j as u32],
                    Rational::from_integer(binomial(n - j - 1, d - 1)),
                ));
            }
            (
                MultiPoly::from_terms(&["x", "y"], terms),
                "uniform matroid binomials",
            )
        }
        other => return Err(Error::NoClosedForm(other.tag().into())),
    };
    Ok(OracleResult::poly(
        OracleKind::Tutte,
        p.in_vars(&["x", "y"]),
        source,
    ))
}

/// Region and bounded region counts from their closed forms.
pub fn oracle_regions(spec: &FamilySpec) -> Result<OracleResult> {
    if let FamilySpec::Graphical(g) = spec {
        if same_edges(g, &Graph::complete(g.vertices)) {
            return oracle_regions(&FamilySpec::Braid { n: g.vertices });
        }
    }
    let n = spec.dim() as u32;
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |a, i| a * i);
    let catalan = |k: u32| fact(2 * k) / (fact(k) * fact(k + 1));
    let pow = |b: u32, e: u32| BigInt::from(b).pow(e);
    let (regions, bounded, source) = match spec {
        FamilySpec::Coordinate { .. } => (Some(pow(2, n)), None, "orthants"),
        FamilySpec::Braid { .. } => (Some(fact(n)), None, "Coxeter group order"),
        FamilySpec::Bc { .. } => (Some(pow(2, n) * fact(n)), None, "Coxeter group order"),
        FamilySpec::Dn { .. } if n >= 2 => {
            (Some(pow(2, n - 1) * fact(n)), None, "Coxeter group order")
        }
        FamilySpec::Catalan { .. } => (
            Some(fact(n) * catalan(n)),
            Some(fact(n) * catalan(n - 1)),
            "Catalan numbers",
        ),
        FamilySpec::Shi { .. } => (
            Some(pow(n + 1, n - 1)),
            Some(pow(n - 1, n - 1)),
            "parking functions",
        ),
        other => return Err(Error::NoClosedForm(other.tag().into())),
    };
    Ok(OracleResult {
        kind: OracleKind::RegionCounts,
        value: OracleValue::Regions { regions, bounded },
        source,
    })
}

fn xx() -> MultiPoly {
    MultiPoly::var("X")
}

fn yy() -> MultiPoly {
    MultiPoly::var("Y")
}

fn factorial(k: usize) -> Rational {
    (1..=k).fold(Rational::one(), |a, i| a * rat(i as i64))
}

/// `k!` times the coefficient of `Z^k`.
fn egf_coeff(s: &TruncatedSeries, k: usize) -> MultiPoly {
    s.coeff(k).scale(&factorial(k))
}

/// The series coefficient is the point count `X^{d-r} χ̄`; strip `X^{d-r}`.
fn strip_corank(p: MultiPoly, corank: usize) -> Result<OracleResult> {
    let cb = p.div_var_power("X", corank as u32)?;
    Ok(OracleResult::poly(
        OracleKind::Coboundary,
        cb.in_vars(&["X", "Y"]),
        "generating function",
    ))
}

/// Coboundary polynomial in `X`, `Y`, extracted from the family's
/// generating function.
pub fn oracle_coboundary(spec: &FamilySpec) -> Result<OracleResult> {
    let n = spec.dim();
    let half = (&xx() - &MultiPoly::one()).scale(&Rational::new(1.into(), 2.into()));
    match spec {
        FamilySpec::Coordinate { n } => Ok(OracleResult::poly(
            OracleKind::Coboundary,
            (&(&xx() + &yy()) - &MultiPoly::one())
                .pow(*n as u32)
                .in_vars(&["X", "Y"]),
            "(X+Y-1)^n",
        )),
        FamilySpec::Braid { .. } => {
            let s = deformed_exp(n, &MultiPoly::one(), &yy()).pow(&xx())?;
            strip_corank(egf_coeff(&s, n), 1)
        }
        FamilySpec::Bc { .. } | FamilySpec::Dn { .. } => {
            let first = deformed_exp(n, &MultiPoly::int(2), &yy()).pow(&half)?;
            let second = if matches!(spec, FamilySpec::Bc { .. }) {
                deformed_exp(n, &yy(), &yy().pow(2))
            } else {
                deformed_exp(n, &MultiPoly::one(), &yy().pow(2))
            };
            let corank = usize::from(n == 1 && matches!(spec, FamilySpec::Dn { .. }));
            strip_corank(egf_coeff(&first.mul(&second), n), corank)
        }
        FamilySpec::Threshold { .. } => {
            let base = TruncatedSeries::from_fn(n, |k| {
                (0..=k).fold(MultiPoly::zero(), |acc, r| {
                    let c = Rational::one() / (factorial(r) * factorial(k - r));
                    &acc + &yy().pow((r * (k - r)) as u32).scale(&c)
                })
            });
            let s = base
                .pow(&half)?
                .mul(&deformed_exp(n, &MultiPoly::one(), &yy()));
            strip_corank(egf_coeff(&s, n), usize::from(n <= 2))
        }
        FamilySpec::AllLinear { p: prime, .. } => {
            let p = rat(*prime as i64);
            // (u;p)_inf / (Xu;p)_inf = Σ_k Π_{i<k} (X - p^i) u^k / (p;p)_k
            let ratio = TruncatedSeries::from_fn(n, |k| {
                let mut prod = MultiPoly::one();
                let mut pk = Rational::one();
                for _ in 0..k {
                    prod = &prod * &(&xx() - &MultiPoly::constant(pk.clone()));
                    pk *= &p;
                }
                prod.scale(&(Rational::one() / q_factorial(&p, k)))
            });
            let tail = TruncatedSeries::from_fn(n, |m| {
                let mut e = 0u32;
                let mut pk = 1u32;
                for _ in 0..m {
                    e += pk;
                    pk *= *prime as u32;
                }
                yy().pow(e).scale(&(Rational::one() / q_factorial(&p, m)))
            });
            let c = ratio.mul(&tail).coeff(n).scale(&q_factorial(&p, n));
            Ok(OracleResult::poly(
                OracleKind::Coboundary,
                c.in_vars(&["X", "Y"]),
                "p-exponential generating function",
            ))
        }
        FamilySpec::Thickened { base, k } => {
            let b = oracle_coboundary(base)?;
            let cb = b.as_poly().unwrap().substitute("Y", &yy().pow(*k as u32))?;
            Ok(OracleResult::poly(
                OracleKind::Coboundary,
                cb.in_vars(&["X", "Y"]),
                "Y -> Y^k",
            ))
        }
        FamilySpec::Graphical(g) => {
            let v = g.vertices;
            if same_edges(g, &Graph::complete(v)) {
                return oracle_coboundary(&FamilySpec::Braid { n: v });
            }
            match (1..v).find(|&m| same_edges(g, &Graph::complete_bipartite(m, v - m))) {
                Some(m) => oracle_bipartite(m, v - m),
                None => Err(Error::NoClosedForm("graphical".into())),
            }
        }
        other => Err(Error::NoClosedForm(other.tag().into())),
    }
}

/// Equal edge multisets, ignoring orientation and order.
fn same_edges(g: &Graph, h: &Graph) -> bool {
    let norm = |g: &Graph| {
        let mut e: Vec<_> = g.edges.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
        e.sort();
        e
    };
    g.vertices == h.vertices && norm(g) == norm(h)
}

/// Coboundary polynomial of the graphical arrangement of `K_{m,n}` from
/// the two-variable exponential generating function.
pub fn oracle_bipartite(m: usize, n: usize) -> Result<OracleResult> {
    if m + n == 0 {
        return Err(Error::InvalidFamily("K_{0,0} has no vertices".into()));
    }
    // grade by total degree: Z1 = s z1, Z2 = s z2
    let order = m + n;
    let z1 = MultiPoly::var("z1");
    let z2 = MultiPoly::var("z2");
    let base = TruncatedSeries::from_fn(order, |k| {
        (0..=k).fold(MultiPoly::zero(), |acc, a| {
            let b = k - a;
            let c = Rational::one() / (factorial(a) * factorial(b));
            let t = &(&z1.pow(a as u32) * &z2.pow(b as u32)) * &yy().pow((a * b) as u32);
            &acc + &t.scale(&c)
        })
    });
    let s = base.pow(&xx())?;
    let c = s
        .coeff(order)
        .coeff_of("z1", m as u32)
        .coeff_of("z2", n as u32)
        .scale(&(factorial(m) * factorial(n)));
    let corank = if m > 0 && n > 0 { 1 } else { m + n };
    strip_corank(c, corank)
}
