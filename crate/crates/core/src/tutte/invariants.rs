use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{char_poly_whitney, TutteResult};
use crate::algebra::{rat, MultiPoly, Rational};
use crate::error::{Error, Result};

/// Numeric invariants read off `χ` and `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarInvariants {
    /// Regions of the real complement, `(-1)^d χ(-1)`.
    pub regions: BigInt,
    /// Bounded regions of the essentialization, `(-1)^r χ(1)`.
    pub bounded_regions: BigInt,
    /// Poincaré polynomial of the complex complement, `(-q)^d χ(-1/q)`.
    pub poincare: MultiPoly,
    /// `χ(q)`, also the size of the complement over `F_q`.
    pub characteristic: MultiPoly,
    /// `T(1,0)`: regions meeting a generic affine hyperplane in a bounded set.
    pub generic_section_bounded: BigInt,
    /// Coefficient of `x` (and of `y`) in `T`; reported for central
    /// arrangements with at least two hyperplanes.
    pub beta: Option<BigInt>,
}

impl ScalarInvariants {
    /// Flat `key = value` record.
    pub fn to_record(&self) -> Vec<(&'static str, String)> {
        vec![
            ("regions", self.regions.to_string()),
            ("bounded_regions", self.bounded_regions.to_string()),
            ("poincare", self.poincare.to_text()),
            ("characteristic", self.characteristic.to_text()),
            (
                "generic_section_bounded",
                self.generic_section_bounded.to_string(),
            ),
            (
                "beta",
                self.beta
                    .as_ref()
                    .map_or("n/a".to_string(), BigInt::to_string),
            ),
        ]
    }
}

fn int(v: Rational) -> BigInt {
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// Invariants of an arrangement of dimension `dim` from its Tutte
/// polynomial. `central` decides whether the beta invariant applies.
pub fn scalar_invariants(t: &TutteResult, dim: usize, central: bool) -> Result<ScalarInvariants> {
    let chi = char_poly_whitney(t, dim)?;
    let sign = |k: usize| if k % 2 == 0 { rat(1) } else { rat(-1) };
    let regions = int(sign(dim) * chi.eval_scalar(&[("q", rat(-1))])?);
    let bounded_regions = int(sign(t.rank) * chi.eval_scalar(&[("q", rat(1))])?);

    let mut poincare = MultiPoly::zero_in(&["q"]);
    for (k, c) in chi.univariate_coeffs("q")?.iter().enumerate() {
        // c q^k  ->  (-q)^d c (-1/q)^k = (-1)^{d+k} c q^{d-k}
        let term = MultiPoly::monomial(&["q"], &[(dim - k) as u32], c * sign(dim + k));
        poincare = &poincare + &term;
    }

    let generic_section_bounded = int(t.tutte.eval_scalar(&[("x", rat(1)), ("y", rat(0))])?);
    let beta = if central && t.n >= 2 {
        let bx = t.tutte.coefficient(&[("x", 1)]);
        let by = t.tutte.coefficient(&[("y", 1)]);
        if bx != by {
            return Err(Error::IdentityFailure(format!(
                "coefficients of x ({bx}) and y ({by}) differ"
            )));
        }
        Some(int(bx))
    } else {
        None
    };
    Ok(ScalarInvariants {
        regions,
        bounded_regions,
        poincare,
        characteristic: chi,
        generic_section_bounded,
        beta,
    })
}

/// Sign and shape of the coefficients of `χ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiShape {
    /// Unsigned coefficients `a_0, a_1, ...` from the leading term down to
    /// the last nonzero one.
    pub magnitudes: Vec<String>,
    pub violations: Vec<String>,
}

impl ChiShape {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks alternating signs, unimodality and log-concavity of `χ`.
pub fn validate_chi_shape(chi: &MultiPoly) -> Result<ChiShape> {
    let coeffs = chi.univariate_coeffs("q")?;
    let mut violations = Vec::new();
    if chi.is_zero() {
        return Ok(ChiShape {
            magnitudes: Vec::new(),
            violations,
        });
    }
    let top = coeffs.len() - 1;
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let mut a: Vec<BigInt> = Vec::new();
    for (i, k) in (low..=top).rev().enumerate() {
        let c = &coeffs[k];
        if !c.is_integer() {
            violations.push(format!("coefficient of q^{k} is not an integer"));
        }
        let signed = if i % 2 == 0 { c.clone() } else { -c.clone() };
        if signed.is_negative() {
            violations.push(format!("sign of q^{k} breaks alternation"));
        }
        a.push(c.abs().to_integer());
    }
    let peak = a
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(&x.0)))
        .map(|(i, _)| i)
        .unwrap();
    for j in 1..a.len() {
        let ok = if j <= peak {
            a[j - 1] <= a[j]
        } else {
            a[j - 1] >= a[j]
        };
        if !ok {
            violations.push(format!("not unimodal at a_{j}"));
        }
    }
    for j in 1..a.len().saturating_sub(1) {
        if &a[j - 1] * &a[j + 1] > &a[j] * &a[j] {
            violations.push(format!("not log-concave at a_{j}"));
        }
    }
    Ok(ChiShape {
        magnitudes: a.iter().map(BigInt::to_string).collect(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tutte::testutil::*;
    use crate::tutte::{char_poly, tutte_subset};
    use proptest::prelude::*;

    #[test]
    fn pencil_coloop_invariants() {
        let a = pencil_coloop();
        let t = tutte_subset(&a).unwrap();
        let inv = scalar_invariants(&t, 3, true).unwrap();
        // χ = q^3 - 4q^2 + 5q - 2
        assert_eq!(inv.regions, BigInt::from(12));
        assert_eq!(inv.bounded_regions, BigInt::from(0));
        assert_eq!(inv.poincare.to_text(), "2*q^3 + 5*q^2 + 4*q + 1");
        assert_eq!(inv.generic_section_bounded, BigInt::from(2));
        assert_eq!(inv.beta, Some(BigInt::from(0)));
    }

    #[test]
    fn braid_regions() {
        let t = tutte_subset(&braid3()).unwrap();
        let inv = scalar_invariants(&t, 3, true).unwrap();
        assert_eq!(inv.regions, BigInt::from(6));
        assert_eq!(inv.beta, Some(BigInt::from(1)));
        assert_eq!(inv.generic_section_bounded, BigInt::from(2));
    }

    #[test]
    fn shapes() {
        let q = |c: &[i64]| {
            MultiPoly::from_univariate("q", &c.iter().map(|&v| rat(v)).collect::<Vec<_>>())
        };
        let s = validate_chi_shape(&q(&[-2, 5, -4, 1])).unwrap();
        assert!(s.passed());
        assert_eq!(s.magnitudes, vec!["1", "4", "5", "2"]);
        assert!(validate_chi_shape(&q(&[0, 2, -3, 1])).unwrap().passed());
        assert!(validate_chi_shape(&q(&[0, 0, 0, 0, 1])).unwrap().passed());
        assert!(!validate_chi_shape(&q(&[1, 1, 1])).unwrap().passed());
        // magnitudes 1, 1, 5 are neither unimodal nor log-concave
        assert!(!validate_chi_shape(&q(&[5, -1, 1])).unwrap().passed());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn every_characteristic_polynomial_has_the_right_shape(a in arrangements(7, 4)) {
            let chi = char_poly(&a).unwrap();
            let shape = validate_chi_shape(&chi).unwrap();
            prop_assert!(shape.passed(), "{:?} for {}", shape.violations, chi);
        }
    }
}
