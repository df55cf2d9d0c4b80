//! Affine hyperplane arrangements over the rationals or a prime field.
//!
//! Hyperplanes are stored in a canonical integer form: over the rationals
//! the row `(normal | offset)` is primitive with the first nonzero normal
//! entry positive; over `F_p` the entries are residues in `0..p` with the
//! first nonzero normal entry equal to 1. The degenerate hyperplane with
//! zero normal and zero offset (the whole ambient space) is allowed and is
//! a loop.

mod io;
mod poset;
mod semimatroid;

pub use io::{ArrangementFile, HyperplaneFile};
pub use poset::{Flat, IntersectionPoset};
pub use semimatroid::SubsetRanks;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, GroundField, RowStatus};

/// Subsets of hyperplanes are passed around as bitmasks.
pub const MAX_SUBSET_HYPERPLANES: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Hyperplane {
    /// Hyperplane `normal · x = offset` over the rationals.
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        let mut den = offset.denom().clone();
        for c in &normal {
            den = den.lcm(c.denom());
        }
        let scale = |c: &Rational| (c * Rational::from_integer(den.clone())).to_integer();
        let h = Hyperplane {
            normal: normal.iter().map(scale).collect(),
            offset: scale(&offset),
        };
        h.canonical(GroundField::Rational)
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Self> {
        Hyperplane {
            normal: normal.iter().map(|&x| BigInt::from(x)).collect(),
            offset: BigInt::from(offset),
        }
        .canonical(GroundField::Rational)
    }

    /// The degenerate hyperplane equal to the ambient space.
    pub fn degenerate(dim: usize) -> Self {
        Hyperplane {
            normal: vec![BigInt::zero(); dim],
            offset: BigInt::zero(),
        }
    }

    pub(crate) fn from_raw(normal: Vec<BigInt>, offset: BigInt) -> Self {
        Hyperplane { normal, offset }
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.normal.iter().all(Zero::is_zero) && self.offset.is_zero()
    }

    /// `(normal | offset)` as one integer row.
    pub fn augmented_row(&self) -> Vec<BigInt> {
        let mut r = self.normal.clone();
        r.push(self.offset.clone());
        r
    }

    pub(crate) fn canonical(mut self, field: GroundField) -> Result<Self> {
        match field {
            GroundField::Rational => {
                let lead = self.normal.iter().position(|c| !c.is_zero());
                let Some(lead) = lead else {
                    if self.offset.is_zero() {
                        return Ok(self);
                    }
                    return Err(Error::InvalidHyperplane);
                };
                let mut row = self.augmented_row();
                linalg::make_primitive(&mut row);
                if row[lead].is_negative() {
                    row.iter_mut().for_each(|x| *x = -&*x);
                }
                self.offset = row.pop().unwrap();
                self.normal = row;
                Ok(self)
            }
            GroundField::Prime(p) => {
                let pb = BigInt::from(p);
                let mut row: Vec<BigInt> = self
                    .augmented_row()
                    .iter()
                    .map(|x| x.mod_floor(&pb))
                    .collect();
                let d = row.len() - 1;
                let Some(lead) = row[..d].iter().position(|c| !c.is_zero()) else {
                    if row[d].is_zero() {
                        return Ok(Hyperplane::degenerate(d));
                    }
                    return Err(Error::InvalidHyperplane);
                };
                let inv = BigInt::from(linalg::mod_inv(
                    num_traits::ToPrimitive::to_u64(&row[lead]).unwrap(),
                    p,
                ));
                row.iter_mut()
                    .for_each(|x| *x = (&*x * &inv).mod_floor(&pb));
                self.offset = row.pop().unwrap();
                self.normal = row;
                Ok(self)
            }
        }
    }
}

/// Whether a hyperplane is a loop, a coloop or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperplaneKind {
    Loop,
    Coloop,
    Ordinary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    field: GroundField,
    hyperplanes: Vec<Hyperplane>,
    label: Option<String>,
}

impl Arrangement {
    pub fn new(dim: usize, field: GroundField, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if let GroundField::Prime(p) = field {
            if !linalg::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        let hyperplanes = hyperplanes
            .into_iter()
            .map(|h| {
                if h.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: h.dim(),
                    });
                }
                h.canonical(field)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim,
            field,
            hyperplanes,
            label: None,
        })
    }

    pub fn rational(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        Self::new(dim, GroundField::Rational, hyperplanes)
    }

    /// Rational arrangement from integer rows `(normal, offset)`.
    pub fn from_int_rows(dim: usize, rows: &[(Vec<i64>, i64)]) -> Result<Self> {
        let hs = rows
            .iter()
            .map(|(n, b)| {
                if n.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: n.len(),
                    });
                }
                Hyperplane::from_ints(n, *b)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::rational(dim, hs)
    }

    /// Arrangement over `F_p` from integer rows, reduced mod `p`.
    pub fn over_prime(p: u64, dim: usize, rows: &[(Vec<i64>, i64)]) -> Result<Self> {
        let hs = rows
            .iter()
            .map(|(n, b)| {
                Hyperplane::from_raw(
                    n.iter().map(|&x| BigInt::from(x)).collect(),
                    BigInt::from(*b),
                )
            })
            .collect();
        Self::new(dim, GroundField::Prime(p), hs)
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            field: GroundField::Rational,
            hyperplanes: Vec::new(),
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> GroundField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    fn check_indices(&self, subset: &[usize]) -> Result<()> {
        for &i in subset {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                });
            }
        }
        Ok(())
    }

    pub(crate) fn augmented_echelon(&self) -> Echelon {
        Echelon::new(self.field, self.dim + 1, true)
    }

    /// Whether the hyperplanes indexed by `subset` have a common point.
    pub fn is_central(&self, subset: &[usize]) -> Result<bool> {
        self.check_indices(subset)?;
        let mut e = self.augmented_echelon();
        for &i in subset {
            if e.push(&self.hyperplanes[i].augmented_row()) == RowStatus::Inconsistent {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_central_arrangement(&self) -> bool {
        let all: Vec<usize> = (0..self.len()).collect();
        self.is_central(&all).unwrap()
    }

    /// Codimension of the intersection of a central subset.
    pub fn rank_of(&self, subset: &[usize]) -> Result<usize> {
        self.check_indices(subset)?;
        let mut e = self.augmented_echelon();
        for &i in subset {
            if e.push(&self.hyperplanes[i].augmented_row()) == RowStatus::Inconsistent {
                return Err(Error::NonCentral);
            }
        }
        Ok(e.rank())
    }

    /// Rank of the normal vectors of `subset`. Agrees with [`rank_of`] on
    /// central subsets and is defined for every subset.
    ///
    /// [`rank_of`]: Arrangement::rank_of
    pub fn normal_rank(&self, subset: impl IntoIterator<Item = usize>) -> usize {
        let mut e = Echelon::new(self.field, self.dim, false);
        for i in subset {
            e.push(&self.hyperplanes[i].normal);
        }
        e.rank()
    }

    /// Rank of the arrangement: the largest rank of a central subset, which
    /// equals the rank of all normals.
    pub fn rank(&self) -> usize {
        self.normal_rank(0..self.len())
    }

    pub fn classify(&self, i: usize) -> Result<HyperplaneKind> {
        self.check_indices(&[i])?;
        if self.hyperplanes[i].is_degenerate() {
            return Ok(HyperplaneKind::Loop);
        }
        let without = self.normal_rank((0..self.len()).filter(|&j| j != i));
        Ok(if self.rank() == without + 1 {
            HyperplaneKind::Coloop
        } else {
            HyperplaneKind::Ordinary
        })
    }

    pub fn delete(&self, i: usize) -> Result<Arrangement> {
        self.check_indices(&[i])?;
        let mut out = self.clone();
        out.hyperplanes.remove(i);
        out.label = None;
        Ok(out)
    }

    /// Restriction of the other hyperplanes to hyperplane `i`, in the
    /// coordinates left after eliminating the first coordinate where `i`'s
    /// normal is nonzero. Hyperplanes containing `i` become loops; those
    /// disjoint from it are dropped.
    pub fn contract(&self, i: usize) -> Result<Arrangement> {
        self.check_indices(&[i])?;
        let col = self.hyperplanes[i]
            .normal
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ContractLoop)?;
        self.contract_with_pivot(i, col)
    }

    /// Same as [`contract`](Arrangement::contract) but eliminating coordinate
    /// `col`, which must carry a nonzero entry of the normal.
    pub fn contract_with_pivot(&self, i: usize, col: usize) -> Result<Arrangement> {
        self.check_indices(&[i])?;
        let h = &self.hyperplanes[i];
        if h.is_degenerate() {
            return Err(Error::ContractLoop);
        }
        if col >= self.dim || h.normal[col].is_zero() {
            return Err(Error::InvalidHyperplane);
        }
        let a = &h.normal;
        let aj = &a[col];
        let mut out = Vec::new();
        for (k, g) in self.hyperplanes.iter().enumerate() {
            if k == i {
                continue;
            }
            let cj = &g.normal[col];
            let normal: Vec<BigInt> = (0..self.dim)
                .filter(|&m| m != col)
                .map(|m| aj * &g.normal[m] - cj * &a[m])
                .collect();
            let offset = aj * &g.offset - cj * &h.offset;
            let candidate = Hyperplane::from_raw(normal, offset);
            match candidate.canonical(self.field) {
                Ok(c) => out.push(c),
                Err(Error::InvalidHyperplane) => {} // parallel to and disjoint from H
                Err(e) => return Err(e),
            }
        }
        Ok(Arrangement {
            dim: self.dim - 1,
            field: self.field,
            hyperplanes: out,
            label: None,
        })
    }

    /// Homogenization in one more dimension, with `x_{d+1} = 0` appended.
    pub fn cone(&self) -> Arrangement {
        let mut hs: Vec<Hyperplane> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut n = h.normal.clone();
                n.push(-&h.offset);
                Hyperplane::from_raw(n, BigInt::zero())
            })
            .collect();
        let mut last = vec![BigInt::zero(); self.dim + 1];
        last[self.dim] = BigInt::one();
        hs.push(Hyperplane::from_raw(last, BigInt::zero()));
        Arrangement::new(self.dim + 1, self.field, hs).expect("cone of a valid arrangement")
    }

    /// Quotient of a central arrangement by its common intersection.
    pub fn essentialize(&self) -> Result<Arrangement> {
        if !self.is_central_arrangement() {
            return Err(Error::NotCentral);
        }
        let mut e = Echelon::new(self.field, self.dim, false);
        for h in &self.hyperplanes {
            e.push(&h.normal);
        }
        // the row space restricts isomorphically onto the pivot coordinates,
        // so those coordinates parameterize the quotient
        let pivots = e.pivots();
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| {
                Hyperplane::from_raw(
                    pivots.iter().map(|&c| h.normal[c].clone()).collect(),
                    BigInt::zero(),
                )
            })
            .collect();
        Arrangement::new(pivots.len(), self.field, hs)
    }

    /// Each hyperplane `e` repeated `multiplicities[e]` times, in order.
    pub fn thickened(&self, multiplicities: &[usize]) -> Result<Arrangement> {
        if multiplicities.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: multiplicities.len(),
            });
        }
        let mut hs = Vec::new();
        for (h, &m) in self.hyperplanes.iter().zip(multiplicities) {
            hs.extend(std::iter::repeat(h.clone()).take(m));
        }
        Ok(Arrangement {
            dim: self.dim,
            field: self.field,
            hyperplanes: hs,
            label: None,
        })
    }

    /// Appends hyperplanes (canonicalized for this arrangement's field).
    pub fn extended(&self, extra: Vec<Hyperplane>) -> Result<Arrangement> {
        let mut hs = self.hyperplanes.clone();
        hs.extend(extra);
        Arrangement::new(self.dim, self.field, hs)
    }

    /// Sub-arrangement on the given indices, in that order.
    pub fn restrict_to(&self, subset: &[usize]) -> Result<Arrangement> {
        self.check_indices(subset)?;
        Ok(Arrangement {
            dim: self.dim,
            field: self.field,
            hyperplanes: subset
                .iter()
                .map(|&i| self.hyperplanes[i].clone())
                .collect(),
            label: None,
        })
    }

    /// Reorders hyperplanes: position `k` of the result holds `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Arrangement> {
        let mut seen = vec![false; self.len()];
        for &i in order {
            if i >= self.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                });
            }
        }
        if order.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: order.len(),
            });
        }
        self.restrict_to(order)
    }

    pub fn semimatroid(&self) -> Result<SubsetRanks> {
        SubsetRanks::build(self)
    }

    pub fn intersection_poset(&self) -> Result<IntersectionPoset> {
        IntersectionPoset::build(self)
    }
}

/// Bitmask with bit `i` set for each index `i` of `subset`.
pub fn mask_of(subset: &[usize]) -> u64 {
    subset.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

/// Indices of the set bits of `mask`, ascending.
pub fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    /// Lines t: x=0, u: y=0, v: x=y and plane w: z=0 in Q^3.
    pub(crate) fn pencil_coloop() -> Arrangement {
        Arrangement::from_int_rows(
            3,
            &[
                (vec![1, 0, 0], 0),
                (vec![0, 1, 0], 0),
                (vec![1, -1, 0], 0),
                (vec![0, 0, 1], 0),
            ],
        )
        .unwrap()
    }

    fn coordinate(n: usize) -> Arrangement {
        let rows: Vec<_> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                (v, 0)
            })
            .collect();
        Arrangement::from_int_rows(n, &rows).unwrap()
    }

    fn braid3() -> Arrangement {
        Arrangement::from_int_rows(
            3,
            &[
                (vec![1, -1, 0], 0),
                (vec![1, 0, -1], 0),
                (vec![0, 1, -1], 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn canonical_scaling() {
        let h = Hyperplane::new(vec![ratio(-2, 3), rat(4)], ratio(1, 3)).unwrap();
        assert_eq!(h.normal(), &[BigInt::from(2), BigInt::from(-12)]);
        assert_eq!(h.offset(), &BigInt::from(-1));
        assert_eq!(
            Hyperplane::from_ints(&[0, 0], 3).unwrap_err(),
            Error::InvalidHyperplane
        );
        assert!(Hyperplane::from_ints(&[0, 0], 0).unwrap().is_degenerate());
    }

    #[test]
    fn centrality() {
        let h3 = coordinate(3);
        assert!(h3.is_central(&[0, 1, 2]).unwrap());
        let par = Arrangement::from_int_rows(1, &[(vec![1], 0), (vec![1], 1)]).unwrap();
        assert!(!par.is_central(&[0, 1]).unwrap());
        assert!(pencil_coloop().is_central(&[0, 1, 2, 3]).unwrap());
        assert!(matches!(
            pencil_coloop().is_central(&[4]),
            Err(Error::IndexOutOfRange { index: 4, len: 4 })
        ));
        let with_loop = par.extended(vec![Hyperplane::degenerate(1)]).unwrap();
        assert!(with_loop.is_central(&[0, 2]).unwrap());
    }

    #[test]
    fn ranks() {
        let a = pencil_coloop();
        assert_eq!(a.rank_of(&[0, 1, 2]).unwrap(), 2);
        assert_eq!(a.rank_of(&[]).unwrap(), 0);
        assert_eq!(a.rank_of(&[0, 1, 3]).unwrap(), 3);
        let par = Arrangement::from_int_rows(1, &[(vec![1], 0), (vec![1], 1)]).unwrap();
        assert_eq!(par.rank_of(&[0, 1]).unwrap_err(), Error::NonCentral);
        assert_eq!(par.rank(), 1);
    }

    #[test]
    fn contraction_of_coordinate_lines() {
        let h2 = coordinate(2);
        let c = h2.contract(0).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.len(), 1);
        assert_eq!(c.hyperplane(0), &Hyperplane::from_ints(&[1], 0).unwrap());
    }

    #[test]
    fn double_contraction_creates_a_loop() {
        // contract u then v: the image of t is the whole ambient space
        let a = pencil_coloop();
        let au = a.contract(1).unwrap(); // t, v, w on u
        let auv = au.contract(1).unwrap(); // t, w on (u ∩ v)
        assert!(auv.hyperplane(0).is_degenerate());
        assert_eq!(auv.classify(0).unwrap(), HyperplaneKind::Loop);
        assert_eq!(auv.contract(0).unwrap_err(), Error::ContractLoop);
    }

    #[test]
    fn deleting_the_coloop() {
        let a = pencil_coloop();
        assert_eq!(a.classify(3).unwrap(), HyperplaneKind::Coloop);
        assert_eq!(a.delete(3).unwrap().rank(), 2);
        assert_eq!(braid3().classify(1).unwrap(), HyperplaneKind::Ordinary);
    }

    #[test]
    fn disjoint_hyperplanes_vanish_under_contraction() {
        let a = Arrangement::from_int_rows(2, &[(vec![1, 0], 0), (vec![1, 0], 1), (vec![0, 1], 0)])
            .unwrap();
        let c = a.contract(1).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn cone_of_a_point() {
        let a = Arrangement::from_int_rows(1, &[(vec![1], 1)]).unwrap();
        let c = a.cone();
        assert_eq!(c.dim(), 2);
        assert_eq!(
            c.hyperplane(0),
            &Hyperplane::from_ints(&[1, -1], 0).unwrap()
        );
        assert_eq!(c.hyperplane(1), &Hyperplane::from_ints(&[0, 1], 0).unwrap());
        assert_eq!(c.rank(), 2);
    }

    #[test]
    fn essentialization() {
        let e = braid3().essentialize().unwrap();
        assert_eq!(e.dim(), 2);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.len(), 3);
        let ess = pencil_coloop().essentialize().unwrap();
        assert_eq!(ess.dim(), 3);
        let par = Arrangement::from_int_rows(1, &[(vec![1], 0), (vec![1], 1)]).unwrap();
        assert_eq!(par.essentialize().unwrap_err(), Error::NotCentral);
        // translated central arrangement
        let shifted = Arrangement::from_int_rows(2, &[(vec![1, 0], 1), (vec![1, 0], 1)]).unwrap();
        let e = shifted.essentialize().unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(e.hyperplane(0).offset(), &BigInt::zero());
    }

    #[test]
    fn prime_field_arrangement() {
        let a = Arrangement::over_prime(2, 2, &[(vec![1, 0], 0), (vec![0, 1], 0), (vec![1, 1], 0)])
            .unwrap();
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rank_of(&[0, 1, 2]).unwrap(), 2);
        assert!(Arrangement::over_prime(4, 1, &[]).is_err());
        // 2x = 1 has no solution mod 2
        assert!(Arrangement::over_prime(2, 1, &[(vec![2], 1)]).is_err());
    }
}
