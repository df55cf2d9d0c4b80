//! Tutte, characteristic and coboundary polynomials by three structural
//! algorithms: subset expansion, deletion–contraction and basis activities.

mod activity;
mod charpoly;
mod delcon;
mod invariants;
mod subset;

pub use activity::{tutte_activity, ActivityCertificate, BasisActivity};
pub use charpoly::{
    char_poly, char_poly_checked, char_poly_from_coboundary, char_poly_whitney,
    coboundary_transform, tutte_from_coboundary,
};
pub use delcon::{tutte_delcon, DelconOptions};
pub use invariants::{scalar_invariants, validate_chi_shape, ChiShape, ScalarInvariants};
pub use subset::tutte_subset;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{MultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Subset,
    Delcon,
    Activity,
    FiniteField,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Subset => "subset",
            Engine::Delcon => "delcon",
            Engine::Activity => "activity",
            Engine::FiniteField => "finite-field",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteResult {
    /// Polynomial in `x`, `y`.
    pub tutte: MultiPoly,
    pub rank: usize,
    pub n: usize,
    pub engine: Engine,
}

impl TutteResult {
    /// `T(1,1)`, the number of bases.
    pub fn num_bases(&self) -> BigInt {
        self.tutte
            .eval_scalar(&[("x", Rational::one()), ("y", Rational::one())])
            .expect("tutte polynomial is in x and y")
            .to_integer()
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// `Σ counts[i][j] (x-1)^i (y-1)^j`, expanded.
pub(crate) fn expand_shifted(counts: &[Vec<BigInt>]) -> MultiPoly {
    let mut terms = Vec::new();
    for (i, row) in counts.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for a in 0..=i {
                for b in 0..=j {
                    let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
                    let v = c * binomial(i, a) * binomial(j, b) * sign;
                    terms.push((vec![a as u32, b as u32], Rational::from_integer(v)));
                }
            }
        }
    }
    MultiPoly::from_terms(&["x", "y"], terms)
}


#[cfg(test)]
mod tests {
    use super::testutil::*;
    use super::*;
    use crate::arrangement::{Arrangement, Hyperplane};
    use proptest::prelude::*;

    fn t(text: &str) -> MultiPoly {
        // tiny parser for test expectations written as sums of x^a*y^b
        let mut p = MultiPoly::zero_in(&["x", "y"]);
        for term in text.split(" + ") {
            let mut e = [0u32; 2];
            let mut c = 1i64;
            for f in term.split('*') {
                let (v, k) = f.split_once('^').unwrap_or((f, "1"));
                match v {
                    "x" => e[0] = k.parse().unwrap(),
                    "y" => e[1] = k.parse().unwrap(),
                    num => c = num.parse().unwrap(),
                }
            }
            p = &p + &MultiPoly::monomial(&["x", "y"], &e, crate::algebra::rat(c));
        }
        p
    }

    #[test]
    fn engines_on_pencil_coloop() {
        let a = pencil_coloop();
        let want = t("x^3 + x^2 + x*y");
        assert_eq!(tutte_subset(&a).unwrap().tutte, want);
        assert_eq!(
            tutte_delcon(&a, DelconOptions::default()).unwrap().tutte,
            want
        );
        let (res, cert) = tutte_activity(&a, &[0, 1, 2, 3]).unwrap();
        assert_eq!(res.tutte, want);
        assert_eq!(cert.entries.len(), 3);
        assert_eq!(res.num_bases(), BigInt::from(3));
        assert_eq!(want.to_text(), "x^3 + x^2 + x*y");
    }

    #[test]
    fn trivial_cases() {
        let empty = Arrangement::empty(2);
        assert_eq!(tutte_subset(&empty).unwrap().tutte, MultiPoly::one());
        let coloop = Arrangement::from_int_rows(1, &[(vec![1], 0)]).unwrap();
        let lp = Arrangement::rational(1, vec![Hyperplane::degenerate(1)]).unwrap();
        for a in [&coloop, &lp] {
            let s = tutte_subset(a).unwrap().tutte;
            assert_eq!(tutte_delcon(a, DelconOptions::default()).unwrap().tutte, s);
            assert_eq!(tutte_activity(a, &[0]).unwrap().0.tutte, s);
        }
        assert_eq!(tutte_subset(&coloop).unwrap().tutte, MultiPoly::var("x"));
        assert_eq!(tutte_subset(&lp).unwrap().tutte, MultiPoly::var("y"));
        let h2 = Arrangement::from_int_rows(2, &[(vec![1, 0], 0), (vec![0, 1], 0)]).unwrap();
        assert_eq!(tutte_subset(&h2).unwrap().tutte, t("x^2"));
        assert_eq!(
            tutte_activity(&braid3(), &[0, 1, 2]).unwrap().0.tutte,
            t("x^2 + x + y")
        );
    }

    /// A generalized Tutte–Grothendieck invariant evaluated by its own
    /// recursion, with the given constants.
    fn tg_invariant(a: &Arrangement, c: [i64; 4]) -> Rational {
        let [ka, kb, fc, fl] = c.map(crate::algebra::rat);
        fn go(a: &Arrangement, k: &[Rational; 4]) -> Rational {
            let n = a.len();
            if n == 0 {
                return Rational::one();
            }
            let h = n - 1;
            match a.classify(h).unwrap() {
                crate::arrangement::HyperplaneKind::Loop => &k[3] * go(&a.delete(h).unwrap(), k),
                crate::arrangement::HyperplaneKind::Coloop => {
                    &k[2] * go(&a.contract(h).unwrap(), k)
                }
                crate::arrangement::HyperplaneKind::Ordinary => {
                    &k[0] * go(&a.delete(h).unwrap(), k) + &k[1] * go(&a.contract(h).unwrap(), k)
                }
            }
        }
        go(a, &[ka, kb, fc, fl])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn engines_agree(a in arrangements(7, 4), seed in any::<u64>()) {
            let s = tutte_subset(&a).unwrap();
            let d = tutte_delcon(&a, DelconOptions::default()).unwrap();
            let m = tutte_delcon(&a, DelconOptions { memoize: true }).unwrap();
            prop_assert_eq!(&s.tutte, &d.tutte);
            prop_assert_eq!(&s.tutte, &m.tutte);
            let mut order: Vec<usize> = (0..a.len()).collect();
            let mut x = seed;
            for i in (1..order.len()).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (x >> 33) as usize % (i + 1));
            }
            let (act, cert) = tutte_activity(&a, &order).unwrap();
            prop_assert_eq!(&s.tutte, &act.tutte);
            prop_assert_eq!(&cert.polynomial(), &act.tutte);
            prop_assert_eq!(BigInt::from(cert.entries.len()), s.num_bases());
            prop_assert!(s.tutte.degree_in("x").unwrap_or(0) as usize <= s.rank);
        }

        #[test]
        fn deletion_contraction_identity(a in arrangements(6, 3)) {
            let t = tutte_subset(&a).unwrap().tutte;
            for h in 0..a.len() {
                if a.classify(h).unwrap() != crate::arrangement::HyperplaneKind::Ordinary {
                    continue;
                }
                let del = tutte_subset(&a.delete(h).unwrap()).unwrap().tutte;
                let con = tutte_subset(&a.contract(h).unwrap()).unwrap().tutte;
                prop_assert_eq!(&t, &(&del + &con));
            }
        }

        #[test]
        fn contraction_is_parameterization_independent(a in arrangements(6, 3)) {
            for h in 0..a.len() {
                let hp = a.hyperplane(h);
                let cols: Vec<usize> = (0..a.dim()).filter(|&c| !num_traits::Zero::is_zero(&hp.normal()[c])).collect();
                let Some(&first) = cols.first() else { continue };
                let reference = tutte_subset(&a.contract_with_pivot(h, first).unwrap()).unwrap().tutte;
                for &c in &cols[1..] {
                    let other = a.contract_with_pivot(h, c).unwrap();
                    prop_assert_eq!(&tutte_subset(&other).unwrap().tutte, &reference);
                    prop_assert_eq!(other.semimatroid().unwrap(), a.contract_with_pivot(h, first).unwrap().semimatroid().unwrap());
                }
            }
        }

        #[test]
        fn universality(a in arrangements(4, 3), c in [1i64..=3, 1i64..=3, -2i64..=3, -2i64..=3]) {
            // contraction of an affine arrangement may drop parallel
            // hyperplanes, which breaks the a^{n-r} bookkeeping unless a = 1;
            // the statement is checked on central arrangements
            let a = a.cone();
            let t = tutte_subset(&a).unwrap();
            let [ka, kb, fc, fl] = c.map(crate::algebra::rat);
            let n = t.n as u32;
            let r = t.rank as u32;
            let val = t.tutte.eval_scalar(&[("x", &fc / &kb), ("y", &fl / &ka)]).unwrap();
            let closed = num_traits::pow(ka, (n - r) as usize) * num_traits::pow(kb, r as usize) * val;
            prop_assert_eq!(closed, tg_invariant(&a, c));
        }
    }
}
