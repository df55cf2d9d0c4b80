//! Truncated power series in one grading variable with polynomial
//! coefficients.

use num_traits::One;

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `Z^k`, for `k = 0..=order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn new(order: usize, mut coeffs: Vec<MultiPoly>) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        coeffs.truncate(order + 1);
        Self { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> MultiPoly) -> Self {
        Self {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![MultiPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |k| &self.coeffs[k] + &other.coeffs[k])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |k| &self.coeffs[k] - &other.coeffs[k])
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |n| {
            let mut acc = MultiPoly::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || other.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &other.coeffs[n - k]);
            }
            acc
        })
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        Self::from_fn(self.order, |k| &self.coeffs[k] * c)
    }

    /// `log(A)` for a series with constant term exactly 1, by the recurrence
    /// `n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != MultiPoly::one() {
            return Err(Error::SeriesConstant("1"));
        }
        let mut l: Vec<MultiPoly> = vec![MultiPoly::zero(); self.order + 1];
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].scale(&Rational::from_integer(n.into()));
            for k in 1..n {
                if l[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                let t = (&l[k] * &self.coeffs[n - k]).scale(&Rational::from_integer(k.into()));
                acc = &acc - &t;
            }
            l[n] = acc.scale(&(Rational::one() / Rational::from_integer(n.into())));
        }
        Ok(Self::new(self.order, l))
    }

    /// `exp(D)` for a series with zero constant term, by
    /// `n E_n = sum_{k=1}^{n} k D_k E_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesConstant("0"));
        }
        let mut e: Vec<MultiPoly> = vec![MultiPoly::zero(); self.order + 1];
        e[0] = MultiPoly::one();
        for n in 1..=self.order {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || e[n - k].is_zero() {
                    continue;
                }
                let t = (&self.coeffs[k] * &e[n - k]).scale(&Rational::from_integer(k.into()));
                acc = &acc + &t;
            }
            e[n] = acc.scale(&(Rational::one() / Rational::from_integer(n.into())));
        }
        Ok(Self::new(self.order, e))
    }

    /// `A^C := exp(C log A)` for a base with constant term 1 and an arbitrary
    /// polynomial exponent.
    pub fn pow(&self, exponent: &MultiPoly) -> Result<Self> {
        let l = self.log()?;
        l.scale(exponent).exp()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order), self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }
}

/// `Σ_n α^n β^{n choose 2} Z^n / n!` truncated at `order`.
pub fn deformed_exp(order: usize, alpha: &MultiPoly, beta: &MultiPoly) -> TruncatedSeries {
    let mut fact = Rational::one();
    TruncatedSeries::from_fn(order, |n| {
        if n > 0 {
            fact *= Rational::from_integer(n.into());
        }
        let choose2 = (n * n.saturating_sub(1) / 2) as u32;
        (&alpha.pow(n as u32) * &beta.pow(choose2)).scale(&(Rational::one() / fact.clone()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{rat, ratio};

    fn x() -> MultiPoly {
        MultiPoly::var("X")
    }

    #[test]
    fn binomial_series() {
        let base = TruncatedSeries::new(2, vec![MultiPoly::one(), MultiPoly::one()]);
        let s = base.pow(&x()).unwrap();
        assert_eq!(s.coeff(0), &MultiPoly::one());
        assert_eq!(s.coeff(1), &x());
        let expected = (&x() * &(&x() - &MultiPoly::one())).scale(&ratio(1, 2));
        assert_eq!(s.coeff(2), &expected);
    }

    #[test]
    fn zeroth_power_is_one() {
        let y = MultiPoly::var("Y");
        let f = deformed_exp(4, &MultiPoly::one(), &y);
        assert_eq!(f.pow(&MultiPoly::zero()).unwrap(), TruncatedSeries::one(4));
    }

    #[test]
    fn deformed_exp_at_y_one_gives_x_cubed() {
        // F(Z,1)^X = e^{XZ}; 3! [Z^3] = X^3
        let f = deformed_exp(3, &MultiPoly::one(), &MultiPoly::var("Y"));
        let s = f.pow(&x()).unwrap();
        let c3 = s
            .coeff(3)
            .scale(&rat(6))
            .evaluate(&[("Y", rat(1))])
            .unwrap();
        assert_eq!(c3, x().pow(3));
    }

    #[test]
    fn constant_term_errors() {
        let bad = TruncatedSeries::new(2, vec![MultiPoly::int(2)]);
        assert_eq!(bad.log().unwrap_err(), Error::SeriesConstant("1"));
        assert_eq!(bad.exp().unwrap_err(), Error::SeriesConstant("0"));
    }

    #[test]
    fn log_exp_round_trip() {
        let y = MultiPoly::var("Y");
        let f = deformed_exp(5, &MultiPoly::int(2), &y);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }
}
