//! Point counts on the torus `(F_{q+1}^*)^d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::{ArithmeticTutte, VectorConfig};
use crate::algebra::{rat, MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::linalg::{is_prime, mul_mod, pow_mod};

/// `counts[k]` is the number of torus points on exactly `k` of the
/// hypertori `{t : t^a = 1}`, counted with multiplicity over the vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricProfile {
    pub q: u64,
    pub counts: Vec<u64>,
}

impl ToricProfile {
    pub fn polynomial(&self, var: &str) -> MultiPoly {
        let coeffs: Vec<Rational> = self
            .counts
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        MultiPoly::from_univariate(var, &coeffs).in_vars(&[var])
    }

    pub fn csv_row(&self) -> String {
        let mut s = self.q.to_string();
        for c in &self.counts {
            s.push(',');
            s.push_str(&c.to_string());
        }
        s
    }
}

/// Enumerates `(F_{q+1}^*)^d`; `q + 1` must be prime. Exponents are taken
/// mod `q`, which handles negative entries.
pub fn toric_point_profile(
    c: &VectorConfig,
    q: u64,
    budget: u64,
    parallel: bool,
) -> Result<ToricProfile> {
    let p = q + 1;
    if q == 0 || !is_prime(p) || p >= 1 << 31 {
        return Err(Error::NotPrime(p));
    }
    let d = c.dim();
    let required = (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let n = c.len();
    let qb = BigInt::from(q);
    let exps: Vec<Vec<u64>> = c
        .vectors()
        .iter()
        .map(|v| {
            v.iter()
                .map(|a| a.mod_floor(&qb).to_u64().unwrap())
                .collect()
        })
        .collect();
    // powers[i][x] = (x+1)^i for every exponent that occurs
    let max_e = exps.iter().flatten().copied().max().unwrap_or(0) as usize;
    let powers: Vec<Vec<u64>> = (0..=max_e)
        .map(|e| (1..=q).map(|x| pow_mod(x, e as u64, p)).collect())
        .collect();

    let slice = |first: u64| -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        if d == 0 {
            // the single point lies on every hypertorus
            counts[n] = 1;
            return counts;
        }
        let mut digits = vec![0usize; d];
        digits[0] = first as usize;
        loop {
            let h = exps
                .iter()
                .filter(|a| {
                    a.iter()
                        .zip(&digits)
                        .fold(1u64, |acc, (&e, &x)| mul_mod(acc, powers[e as usize][x], p))
                        == 1
                })
                .count();
            counts[h] += 1;
            let mut k = d;
            loop {
                if k <= 1 {
                    return counts;
                }
                k -= 1;
                digits[k] += 1;
                if (digits[k] as u64) < q {
                    break;
                }
                digits[k] = 0;
            }
        }
    };
    let firsts: Vec<u64> = if d == 0 { vec![0] } else { (0..q).collect() };
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let counts = if parallel {
        firsts
            .par_iter()
            .map(|&f| slice(f))
            .reduce(|| vec![0; n + 1], merge)
    } else {
        firsts.iter().map(|&f| slice(f)).fold(vec![0; n + 1], merge)
    };
    debug_assert_eq!(counts.iter().map(|&c| c as u128).sum::<u128>(), required);
    Ok(ToricProfile { q, counts })
}

/// Checks `Σ c_k t^k = (t-1)^r q^{d-r} M((q+t-1)/(t-1), t)` and
/// `c_0 = (-1)^r q^{d-r} M(1-q, 0)`.
pub fn toric_identity_check(m: &ArithmeticTutte, prof: &ToricProfile) -> Result<()> {
    let t = MultiPoly::var("t");
    let one = MultiPoly::one();
    let qq = MultiPoly::constant(rat(prof.q as i64));
    let num = &(&qq + &t) - &one;
    let tm1 = &t - &one;
    let r = m.rank as u32;
    let mut rhs = MultiPoly::zero_in(&["t"]);
    for (e, c) in m.poly.in_vars(&["x", "y"]).terms() {
        let (i, j) = (e[0], e[1]);
        let term = &(&num.pow(i) * &tm1.pow(r - i)) * &t.pow(j);
        rhs = &rhs + &term.scale(c);
    }
    let rhs = rhs.scale(&Rational::from_integer(
        BigInt::from(prof.q).pow((m.dim - m.rank) as u32),
    ));
    let lhs = prof.polynomial("t");
    if lhs != rhs {
        return Err(Error::IdentityFailure(format!(
            "toric point count {lhs} differs from {rhs} at q = {}",
            prof.q
        )));
    }
    let c0 = m
        .characteristic()
        .eval_scalar(&[("q", rat(prof.q as i64))])?;
    if c0 != Rational::from_integer(prof.counts[0].into()) {
        return Err(Error::IdentityFailure(format!(
            "complement has {} points, arithmetic characteristic polynomial gives {c0}",
            prof.counts[0]
        )));
    }
    if prof.counts.iter().all(Zero::is_zero) {
        return Err(Error::IdentityFailure("empty profile".into()));
    }
    Ok(())
}
