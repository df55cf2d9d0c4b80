use crate::algebra::MultiPoly;
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::multivariate::check_thickening;
use crate::tutte::{coboundary_transform, tutte_subset};

/// Each hyperplane replaced by `k` copies of itself.
pub fn thicken(a: &Arrangement, k: usize) -> Result<Arrangement> {
    if k == 0 {
        return Err(Error::InvalidFamily("thickening needs k >= 1".into()));
    }
    a.thickened(&vec![k; a.len()])
}

/// `s^r T(A; (s - 1 + x)/s, y^k)` with `s = 1 + y + ... + y^{k-1}`,
/// expanded.
pub fn thickened_tutte_formula(t: &MultiPoly, r: usize, k: usize) -> Result<MultiPoly> {
    let x = MultiPoly::var("x");
    let y = MultiPoly::var("y");
    let s = (0..k as u32).fold(MultiPoly::zero(), |acc, i| &acc + &y.pow(i));
    let num = &(&s - &MultiPoly::one()) + &x;
    let mut out = MultiPoly::zero_in(&["x", "y"]);
    for (e, c) in t.in_vars(&["x", "y"]).terms() {
        let (i, j) = (e[0], e[1]);
        if i as usize > r {
            return Err(Error::NotPolynomial("x-degree exceeds the rank".into()));
        }
        let term = &(&num.pow(i) * &s.pow(r as u32 - i)) * &y.pow(j * k as u32);
        out = &out + &term.scale(c);
    }
    Ok(out.in_vars(&["x", "y"]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickenReport {
    pub multiplicities: Vec<usize>,
    /// Uniform thickening: Tutte formula and `Y -> Y^k` in the coboundary.
    pub uniform: Option<bool>,
    /// The thickening formula through the multivariate polynomial.
    pub multivariate: bool,
}

impl ThickenReport {
    pub fn passed(&self) -> bool {
        self.multivariate && self.uniform != Some(false)
    }
}

/// Verifies the thickening identities for multiplicity vector `mult`.
pub fn thicken_identity_check(a: &Arrangement, mult: &[usize]) -> Result<ThickenReport> {
    let base = tutte_subset(a)?;
    let uniform = match mult.first() {
        Some(&k) if k >= 1 && mult.iter().all(|&m| m == k) => {
            let thick = tutte_subset(&thicken(a, k)?)?;
            let formula = thickened_tutte_formula(&base.tutte, base.rank, k)?;
            let cb_thick = coboundary_transform(&thick.tutte, thick.rank)?;
            let cb_base = coboundary_transform(&base.tutte, base.rank)?
                .substitute("Y", &MultiPoly::var("Y").pow(k as u32))?;
            Some(thick.tutte == formula && cb_thick == cb_base)
        }
        _ => None,
    };
    let multivariate = match check_thickening(a, mult) {
        Ok(_) => true,
        Err(Error::IdentityFailure(_)) => false,
        Err(e) => return Err(e),
    };
    Ok(ThickenReport {
        multiplicities: mult.to_vec(),
        uniform,
        multivariate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tutte::testutil::*;

    #[test]
    fn coloop_doubled() {
        let a = Arrangement::from_int_rows(1, &[(vec![1], 0)]).unwrap();
        let t = tutte_subset(&thicken(&a, 2).unwrap()).unwrap().tutte;
        assert_eq!(t.to_text(), "x + y");
        assert_eq!(
            thickened_tutte_formula(&MultiPoly::var("x"), 1, 2).unwrap(),
            t
        );
    }

    #[test]
    fn identity_holds() {
        for k in 1..=3 {
            assert!(thicken_identity_check(&braid3(), &[k; 3]).unwrap().passed());
            assert!(thicken_identity_check(&pencil_coloop(), &[k; 4])
                .unwrap()
                .passed());
        }
        let r = thicken_identity_check(&pencil_coloop(), &[2, 1, 0, 3]).unwrap();
        assert_eq!(r.uniform, None);
        assert!(r.passed());
    }
}
