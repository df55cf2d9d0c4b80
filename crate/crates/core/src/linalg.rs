//! Exact linear algebra over the rationals (fraction-free, on integer rows)
//! and over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// The field an arrangement is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroundField {
    Rational,
    Prime(u64),
}

impl GroundField {
    pub fn is_rational(self) -> bool {
        matches!(self, GroundField::Rational)
    }
}

/// What happened when a row was offered to an [`Echelon`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Independent,
    Dependent,
    /// Only possible for augmented systems: the row reduced to `0 = c`
    /// with `c != 0`.
    Inconsistent,
}

#[derive(Clone, Debug)]
enum Rows {
    Int(Vec<(usize, Vec<BigInt>)>),
    Mod(u64, Vec<(usize, Vec<u64>)>),
}

/// Incrementally maintained echelon basis of a row space.
///
/// For augmented systems the last column holds the right-hand side; a row
/// whose leading entry lands there is reported as [`RowStatus::Inconsistent`]
/// and not stored.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Rows,
    augmented: bool,
    ncols: usize,
}

impl Echelon {
    pub fn new(field: GroundField, ncols: usize, augmented: bool) -> Self {
        let rows = match field {
            GroundField::Rational => Rows::Int(Vec::new()),
            GroundField::Prime(p) => Rows::Mod(p, Vec::new()),
        };
        Self {
            rows,
            augmented,
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        match &self.rows {
            Rows::Int(r) => r.len(),
            Rows::Mod(_, r) => r.len(),
        }
    }

    /// Pivot columns of the stored rows, sorted.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = match &self.rows {
            Rows::Int(r) => r.iter().map(|(c, _)| *c).collect(),
            Rows::Mod(_, r) => r.iter().map(|(c, _)| *c).collect(),
        };
        p.sort_unstable();
        p
    }

    fn classify(&self, lead: Option<usize>) -> RowStatus {
        match lead {
            None => RowStatus::Dependent,
            Some(c) if self.augmented && c + 1 == self.ncols => RowStatus::Inconsistent,
            Some(_) => RowStatus::Independent,
        }
    }

    /// Reduces `row` and reports its status without storing it.
    pub fn test(&self, row: &[BigInt]) -> RowStatus {
        match &self.rows {
            Rows::Int(rows) => {
                let v = reduce_int(rows, row);
                self.classify(v.iter().position(|x| !x.is_zero()))
            }
            Rows::Mod(p, rows) => {
                let v = reduce_mod(*p, rows, &to_mod(*p, row));
                self.classify(v.iter().position(|&x| x != 0))
            }
        }
    }

    /// Adds `row` if it is independent and consistent.
    pub fn push(&mut self, row: &[BigInt]) -> RowStatus {
        debug_assert_eq!(row.len(), self.ncols);
        let augmented = self.augmented;
        let ncols = self.ncols;
        let status_of = |lead: Option<usize>| match lead {
            None => RowStatus::Dependent,
            Some(c) if augmented && c + 1 == ncols => RowStatus::Inconsistent,
            Some(_) => RowStatus::Independent,
        };
        match &mut self.rows {
            Rows::Int(rows) => {
                let mut v = reduce_int(rows, row);
                let lead = v.iter().position(|x| !x.is_zero());
                let st = status_of(lead);
                if st == RowStatus::Independent {
                    let c = lead.unwrap();
                    make_primitive(&mut v);
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    rows.push((c, v));
                }
                st
            }
            Rows::Mod(p, rows) => {
                let p = *p;
                let mut v = reduce_mod(p, rows, &to_mod(p, row));
                let lead = v.iter().position(|&x| x != 0);
                let st = status_of(lead);
                if st == RowStatus::Independent {
                    let c = lead.unwrap();
                    let inv = mod_inv(v[c], p);
                    v.iter_mut().for_each(|x| *x = mul_mod(*x, inv, p));
                    rows.push((c, v));
                }
                st
            }
        }
    }
}

fn reduce_int(rows: &[(usize, Vec<BigInt>)], row: &[BigInt]) -> Vec<BigInt> {
    let mut v = row.to_vec();
    for (c, s) in rows {
        if v[*c].is_zero() {
            continue;
        }
        let g = s[*c].gcd(&v[*c]);
        let a = &s[*c] / &g;
        let b = &v[*c] / &g;
        for (x, y) in v.iter_mut().zip(s) {
            *x = &*x * &a - y * &b;
        }
        make_primitive(&mut v);
    }
    v
}

fn reduce_mod(p: u64, rows: &[(usize, Vec<u64>)], row: &[u64]) -> Vec<u64> {
    let mut v = row.to_vec();
    for (c, s) in rows {
        let f = v[*c];
        if f == 0 {
            continue;
        }
        for (x, y) in v.iter_mut().zip(s) {
            *x = sub_mod(*x, mul_mod(f, *y, p), p);
        }
    }
    v
}

/// Divides an integer vector by the gcd of its entries.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn to_mod(p: u64, row: &[BigInt]) -> Vec<u64> {
    let pb = BigInt::from(p);
    row.iter()
        .map(|x| x.mod_floor(&pb).to_u64().unwrap())
        .collect()
}

pub fn rank(field: GroundField, rows: &[Vec<BigInt>], ncols: usize) -> usize {
    let mut e = Echelon::new(field, ncols, false);
    for r in rows {
        e.push(r);
    }
    e.rank()
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo a prime.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut k = n + 1;
    while !is_prime(k) {
        k += 1;
    }
    k
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// `k x k` minor on the given rows and columns.
pub fn minor(m: &[Vec<BigInt>], rows: &[usize], cols: &[usize]) -> BigInt {
    let sub: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    bareiss_det(sub)
}

/// Nonzero invariant factors of an integer matrix (Smith normal form
/// diagonal), computed by integer row and column operations.
pub fn smith_invariants(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pick the smallest nonzero entry of the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[i][j] - &q * &a[t][j];
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &a[i][j] - &q * &a[i][t];
                    a[i][j] = v;
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                // divisibility condition: the pivot must divide the rest
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = &a[t][j] + &a[i][j];
                            a[t][j] = v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest nonzero entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn augmented_consistency() {
        // x = 0 and x = 1 are parallel
        let mut e = Echelon::new(GroundField::Rational, 2, true);
        assert_eq!(e.push(&ints(&[1, 0])), RowStatus::Independent);
        assert_eq!(e.push(&ints(&[1, 1])), RowStatus::Inconsistent);
        assert_eq!(e.push(&ints(&[2, 0])), RowStatus::Dependent);
        assert_eq!(e.push(&ints(&[0, 0])), RowStatus::Dependent);
        assert_eq!(e.rank(), 1);
    }

    #[test]
    fn modular_rank_drops() {
        let rows = vec![ints(&[1, -1]), ints(&[1, 1])];
        assert_eq!(rank(GroundField::Rational, &rows, 2), 2);
        assert_eq!(rank(GroundField::Prime(2), &rows, 2), 1);
        assert_eq!(rank(GroundField::Prime(3), &rows, 2), 2);
    }

    #[test]
    fn determinants() {
        let m = vec![ints(&[2, 3]), ints(&[1, -1])];
        assert_eq!(bareiss_det(m), BigInt::from(-5));
        let m = vec![ints(&[0, 1, 2]), ints(&[1, 0, 3]), ints(&[4, -3, 8])];
        assert_eq!(bareiss_det(m), BigInt::from(-2));
    }

    #[test]
    fn combination_enumeration() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn smith_diagonal() {
        // columns (1,1), (1,-1): lattice index 2
        let m = vec![ints(&[1, 1]), ints(&[1, -1])];
        assert_eq!(smith_invariants(&m), ints(&[1, 2]));
        let m = vec![ints(&[2, 4, 4]), ints(&[-6, 6, 12]), ints(&[10, -4, -16])];
        assert_eq!(smith_invariants(&m), ints(&[2, 6, 12]));
    }

    #[test]
    fn primes() {
        assert!(is_prime(97));
        assert!(!is_prime(91));
        assert_eq!(next_prime(7), 11);
        assert_eq!(mod_inv(3, 7), 5);
    }
}
