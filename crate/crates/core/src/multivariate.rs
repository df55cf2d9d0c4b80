//! The multivariate Tutte polynomial and the thickening identities it
//! controls.

use num_traits::One;

use crate::algebra::{rat, MultiPoly, Rational};
use crate::arrangement::{indices_of, Arrangement};
use crate::error::{Error, Result};
use crate::tutte::{tutte_subset, TutteResult};

/// Name of the weight variable of hyperplane `e` (0-based): `w1, w2, ...`.
pub fn weight_var(e: usize) -> String {
    format!("w{}", e + 1)
}

/// `q^r Z̃(A; q, w)`, stored with the denominators cleared: the
/// multivariate polynomial itself is `poly / q^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariateTutte {
    pub poly: MultiPoly,
    pub rank: usize,
    pub n: usize,
}

fn var_names(n: usize) -> Vec<String> {
    std::iter::once("q".to_string())
        .chain((0..n).map(weight_var))
        .collect()
}

/// Sum over central subsets `B` of `q^{r - r(B)} Π_{e ∈ B} w_e`.
pub fn multivariate_tutte(a: &Arrangement) -> Result<MultivariateTutte> {
    let table = a.semimatroid()?;
    let n = a.len();
    let r = table.rank();
    let names = var_names(n);
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let terms = table.central().map(|(mask, rb)| {
        let mut e = vec![0u32; n + 1];
        e[0] = (r - rb) as u32;
        for i in indices_of(mask) {
            e[i + 1] = 1;
        }
        (e, Rational::one())
    });
    Ok(MultivariateTutte {
        poly: MultiPoly::from_terms(&vars, terms),
        rank: r,
        n,
    })
}

impl MultivariateTutte {
    fn subs(&self, q: MultiPoly, weights: &[MultiPoly]) -> Result<MultiPoly> {
        let names = var_names(self.n);
        let mut subs: Vec<(&str, MultiPoly)> = vec![("q", q)];
        for (name, w) in names[1..].iter().zip(weights) {
            subs.push((name.as_str(), w.clone()));
        }
        self.poly.substitute_all(&subs)
    }

    /// All weights set to one variable `w`.
    pub fn uniform(&self) -> Result<MultiPoly> {
        let w = MultiPoly::var("w");
        Ok(self
            .subs(MultiPoly::var("q"), &vec![w; self.n])?
            .in_vars(&["q", "w"]))
    }

    /// Checks `q^r Z̃(q, w, ..., w) = w^r T(q/w + 1, w + 1)`, both sides
    /// cleared of denominators.
    pub fn check_uniform(&self, t: &TutteResult) -> Result<()> {
        if t.rank != self.rank {
            return Err(Error::IdentityFailure(format!(
                "rank {} vs {}",
                t.rank, self.rank
            )));
        }
        let q = MultiPoly::var("q");
        let w = MultiPoly::var("w");
        let one = MultiPoly::one();
        // c x^i y^j  ->  c (q + w)^i w^{r - i} (w + 1)^j
        let mut rhs = MultiPoly::zero_in(&["q", "w"]);
        for (e, c) in t.tutte.in_vars(&["x", "y"]).terms() {
            let (i, j) = (e[0], e[1]);
            if i as usize > self.rank {
                return Err(Error::NotPolynomial("x-degree exceeds the rank".into()));
            }
            let term = &(&(&q + &w).pow(i) * &w.pow(self.rank as u32 - i)) * &(&w + &one).pow(j);
            rhs = &rhs + &term.scale(c);
        }
        let lhs = self.uniform()?;
        if lhs != rhs {
            return Err(Error::IdentityFailure(format!(
                "uniform specialization {lhs} differs from {rhs}"
            )));
        }
        Ok(())
    }

    /// Tutte polynomial of the arrangement with hyperplane `e` repeated
    /// `mult[e]` times, as `(x-1)^{r(supp)} Z̃(A; (x-1)(y-1), y^{a_1}-1, ...)`.
    pub fn thickened_tutte(&self, supp_rank: usize, mult: &[usize]) -> Result<MultiPoly> {
        if mult.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: mult.len(),
            });
        }
        let x1 = &MultiPoly::var("x") - &MultiPoly::one();
        let y = MultiPoly::var("y");
        let y1 = &y - &MultiPoly::one();
        let weights: Vec<MultiPoly> = mult
            .iter()
            .map(|&k| &y.pow(k as u32) - &MultiPoly::one())
            .collect();
        let body = self.subs(&x1 * &y1, &weights)?;
        // body / Q^r with Q = (x-1)(y-1)
        let t = (&body * &x1.pow(supp_rank as u32))
            .div_linear_power("x", &rat(1), self.rank as u32)?
            .div_linear_power("y", &rat(1), self.rank as u32)?;
        Ok(t.in_vars(&["x", "y"]))
    }
}

/// Compares the thickened Tutte polynomial from the multivariate
/// polynomial with the one computed directly on the thickened arrangement.
pub fn check_thickening(a: &Arrangement, mult: &[usize]) -> Result<MultiPoly> {
    let z = multivariate_tutte(a)?;
    let thick = a.thickened(mult)?;
    let direct = tutte_subset(&thick)?.tutte;
    let via = z.thickened_tutte(thick.rank(), mult)?;
    if direct != via {
        return Err(Error::IdentityFailure(format!(
            "thickening by {mult:?}: direct {direct}, multivariate {via}"
        )));
    }
    Ok(direct)
}

/// All `a ∈ N^n` with `|a| <= max`.
fn compositions(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let used: usize = v.iter().sum();
            for k in 0..=max - used {
                let mut w = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// The generating function over all thickenings, checked up to total
/// degree `max` in the weights. Both sides are multiplied by
/// `Q^r = ((x-1)(y-1))^r` so that every coefficient is a polynomial.
pub fn check_thickening_series(a: &Arrangement, max: usize) -> Result<()> {
    let z = multivariate_tutte(a)?;
    let n = a.len();
    let r = z.rank as u32;
    let names: Vec<String> = (0..n).map(weight_var).collect();
    let wv: Vec<&str> = names.iter().map(String::as_str).collect();
    let x1 = &MultiPoly::var("x") - &MultiPoly::one();
    let y = MultiPoly::var("y");
    let y1 = &y - &MultiPoly::one();
    let max_deg = max as u32;

    let mut lhs = MultiPoly::zero();
    for mult in compositions(n, max) {
        let thick = a.thickened(&mult)?;
        let t = tutte_subset(&thick)?.tutte;
        let coeff = &(&t * &x1.pow(r - thick.rank() as u32)) * &y1.pow(r);
        let mono = mult
            .iter()
            .enumerate()
            .fold(MultiPoly::one(), |m, (e, &k)| {
                &m * &MultiPoly::var(&names[e]).pow(k as u32)
            });
        lhs = &lhs + &(&coeff * &mono);
    }

    // geometric series, truncated
    let geom = |w: &MultiPoly, ratio: &MultiPoly, from: u32| {
        (from..=max_deg).fold(MultiPoly::zero(), |acc, k| {
            &acc + &(&w.pow(k) * &ratio.pow(k - from))
        })
    };
    let weights: Vec<MultiPoly> = names
        .iter()
        .map(|nm| {
            let w = MultiPoly::var(nm);
            // (y-1) w / (1 - y w)
            &y1 * &geom(&w, &y, 1)
        })
        .collect();
    let mut rhs = z.subs(&x1 * &y1, &weights)?.truncate_degree(&wv, max_deg);
    for nm in &names {
        let w = MultiPoly::var(nm);
        rhs = rhs.mul_truncated(&geom(&w, &MultiPoly::one(), 0), &wv, max_deg);
    }
    if lhs != rhs {
        return Err(Error::IdentityFailure(
            "thickening generating function disagrees with the multivariate polynomial".into(),
        ));
    }
    Ok(())
}
