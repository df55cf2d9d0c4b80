use num_traits::One;

use super::TutteResult;
use crate::algebra::{rat, MultiPoly, Rational};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};

/// `Σ_F μ(F) q^{dim F}` over the intersection poset. An arrangement with a
/// loop has empty complement and characteristic polynomial 0.
pub fn char_poly(a: &Arrangement) -> Result<MultiPoly> {
    let poset = a.intersection_poset()?;
    if !poset.flats()[0].hyperplanes.is_empty() {
        return Ok(MultiPoly::zero_in(&["q"]));
    }
    let terms = poset
        .flats()
        .iter()
        .zip(poset.mobius_values())
        .map(|(f, &m)| (vec![f.dim as u32], rat(m)));
    Ok(MultiPoly::from_terms(&["q"], terms))
}

/// `(-1)^r q^{d-r} T(1-q, 0)`.
pub fn char_poly_whitney(t: &TutteResult, dim: usize) -> Result<MultiPoly> {
    let q = MultiPoly::var("q");
    let one_minus_q = &MultiPoly::one() - &q;
    let v = t
        .tutte
        .with_vars(&["x", "y"])
        .substitute_all(&[("x", one_minus_q), ("y", MultiPoly::zero())])?;
    let sign = if t.rank % 2 == 0 { rat(1) } else { rat(-1) };
    Ok((&v * &q.pow((dim - t.rank) as u32))
        .scale(&sign)
        .in_vars(&["q"]))
}

/// Möbius route, checked against the Whitney route through the subset
/// expansion.
pub fn char_poly_checked(a: &Arrangement) -> Result<MultiPoly> {
    let m = char_poly(a)?;
    let w = char_poly_whitney(&super::tutte_subset(a)?, a.dim())?;
    if m != w {
        return Err(Error::IdentityFailure(format!(
            "Möbius gives {m}, Tutte evaluation gives {w}"
        )));
    }
    Ok(m)
}

/// `(Y-1)^r T((X+Y-1)/(Y-1), Y)`, expanded as `Σ t_ij (X+Y-1)^i (Y-1)^{r-i} Y^j`.
pub fn coboundary_transform(t: &MultiPoly, r: usize) -> Result<MultiPoly> {
    let xx = MultiPoly::var("X");
    let yy = MultiPoly::var("Y");
    let one = MultiPoly::one();
    let xy1 = &(&xx + &yy) - &one;
    let y1 = &yy - &one;
    let mut out = MultiPoly::zero_in(&["X", "Y"]);
    let t = t.with_vars(&["x", "y"]);
    for (e, c) in t.in_vars(&["x", "y"]).terms() {
        let (i, j) = (e[0] as usize, e[1]);
        if i > r {
            return Err(Error::NotPolynomial(format!(
                "x-degree {i} exceeds rank {r}"
            )));
        }
        let term = &(&xy1.pow(i as u32) * &y1.pow((r - i) as u32)) * &yy.pow(j);
        out = &out + &term.scale(c);
    }
    Ok(out.in_vars(&["X", "Y"]))
}

/// Inverse of [`coboundary_transform`]: `χ̄((x-1)(y-1), y) / (y-1)^r`.
pub fn tutte_from_coboundary(cb: &MultiPoly, r: usize) -> Result<MultiPoly> {
    let x = MultiPoly::var("x");
    let y = MultiPoly::var("y");
    let one = MultiPoly::one();
    let sub = cb
        .with_vars(&["X", "Y"])
        .substitute_all(&[("X", &(&x - &one) * &(&y - &one)), ("Y", y.clone())])?;
    let t = sub.div_linear_power("y", &Rational::one(), r as u32)?;
    Ok(t.in_vars(&["x", "y"]))
}

/// `q^{d-r} χ̄(q, 0)`.
pub fn char_poly_from_coboundary(cb: &MultiPoly, r: usize, dim: usize) -> Result<MultiPoly> {
    let q = MultiPoly::var("q");
    let v = cb
        .with_vars(&["X", "Y"])
        .substitute_all(&[("X", q.clone()), ("Y", MultiPoly::zero())])?;
    Ok((&v * &q.pow((dim - r) as u32)).in_vars(&["q"]))
}
