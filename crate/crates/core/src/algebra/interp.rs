//! Exact Newton interpolation with polynomial-valued samples.

use std::collections::HashSet;

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

/// Reconstructs the unique polynomial of degree at most `degree_bound` in
/// `var` through the samples `(abscissa, value)`; values may be polynomials
/// in other variables. The first `degree_bound + 1` samples determine the
/// interpolant and every further sample must agree with it.
pub fn interpolate(
    var: &str,
    samples: &[(Rational, MultiPoly)],
    degree_bound: usize,
) -> Result<MultiPoly> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(Error::NotEnoughSamples {
            needed,
            got: samples.len(),
        });
    }
    let mut seen = HashSet::new();
    for (a, _) in samples {
        if !seen.insert(a.clone()) {
            return Err(Error::DuplicateAbscissa(a.to_string()));
        }
    }

    let xs: Vec<&Rational> = samples[..needed].iter().map(|(a, _)| a).collect();
    // divided differences, in place
    let mut table: Vec<MultiPoly> = samples[..needed].iter().map(|(_, v)| v.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            let denom = xs[i] - xs[i - level];
            let diff = &table[i] - &table[i - 1];
            table[i] = diff.scale(&(Rational::from_integer(1.into()) / denom));
        }
    }

    let x = MultiPoly::var(var);
    let mut result = MultiPoly::zero();
    let mut basis = MultiPoly::one();
    for (k, coeff) in table.iter().enumerate() {
        result = &result + &(coeff * &basis);
        if k + 1 < needed {
            basis = &basis * &(&x - &MultiPoly::constant(xs[k].clone()));
        }
    }
    let result = result.with_vars(&[var]);

    for (a, v) in &samples[needed..] {
        let at = result.evaluate(&[(var, a.clone())])?;
        if !(&at - v).is_zero() {
            return Err(Error::InconsistentSample(a.to_string()));
        }
    }
    Ok(result)
}

/// `(a; p)_n = (1 - a)(1 - p a)...(1 - p^{n-1} a)`.
pub fn q_pochhammer(a: &MultiPoly, p: &Rational, n: i64) -> Result<MultiPoly> {
    if n < 0 {
        return Err(Error::NegativeLength(n));
    }
    let mut out = MultiPoly::one();
    let mut pk = Rational::from_integer(1.into());
    for _ in 0..n {
        out = &out * &(&MultiPoly::one() - &a.scale(&pk));
        pk *= p;
    }
    Ok(out)
}

/// `(p; p)_n` as a number.
pub fn q_factorial(p: &Rational, n: usize) -> Rational {
    let mut out = Rational::from_integer(1.into());
    let mut pk = p.clone();
    for _ in 0..n {
        out *= Rational::from_integer(1.into()) - &pk;
        pk *= p;
    }
    out
}
