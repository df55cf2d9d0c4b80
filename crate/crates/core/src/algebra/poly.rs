//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`MultiPoly`] carries an ordered list of variable names and a map from
//! exponent vectors to nonzero coefficients. Binary operations on
//! polynomials with different variable lists work over the union of the
//! two lists (left operand's variables first), and equality ignores
//! declared-but-unused variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn var(name: &str) -> Self {
        let mut p = Self {
            vars: vec![name.to_string()],
            terms: BTreeMap::new(),
        };
        p.terms.insert(vec![1], Rational::one());
        p
    }

    /// Zero polynomial with the given declared variables.
    pub fn zero_in(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponent vectors are summed.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn monomial(vars: &[&str], exps: &[u32], coeff: Rational) -> Self {
        Self::from_terms(vars, [(exps.to_vec(), coeff)])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable used by `self`.
    fn aligned(&self, vars: &[String]) -> MultiPoly {
        if self.vars.as_slice() == vars {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut out = MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let j = map[i].expect("aligned: variable missing from target list");
                    ne[j] = k;
                }
            }
            out.terms.insert(ne, c.clone());
        }
        out
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut out = a.to_vec();
        for v in b {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    /// Declares extra variables (appended in order) without changing value.
    pub fn with_vars(&self, vars: &[&str]) -> MultiPoly {
        let extra: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let all = Self::union_vars(&self.vars, &extra);
        self.aligned(&all)
    }

    /// Puts the listed variables first, in the given order, followed by any
    /// other variables the polynomial uses. This fixes the printed term order.
    pub fn in_vars(&self, vars: &[&str]) -> MultiPoly {
        let mut all: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        for v in self.used_vars() {
            if !all.contains(&v) {
                all.push(v);
            }
        }
        self.aligned(&all)
    }

    /// Variables that occur with a positive exponent somewhere.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn add_ref(&self, other: &MultiPoly, sign: bool) -> MultiPoly {
        let vars = Self::union_vars(&self.vars, &other.vars);
        let mut out = self.aligned(&vars);
        let o = other.aligned(&vars);
        for (e, c) in o.terms {
            out.add_term(e, if sign { c } else { -c });
        }
        out
    }

    fn mul_ref(&self, other: &MultiPoly) -> MultiPoly {
        let vars = Self::union_vars(&self.vars, &other.vars);
        let a = self.aligned(&vars);
        let b = other.aligned(&vars);
        let mut out = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one().aligned(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces `var` by `value`. The variable must be declared on `self`.
    pub fn substitute(&self, var: &str, value: &MultiPoly) -> Result<MultiPoly> {
        let idx = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut rest_vars = self.vars.clone();
        rest_vars.remove(idx);
        let vars = Self::union_vars(&rest_vars, &value.vars);
        let value = value.aligned(&vars);
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one().aligned(&vars)];
        let mut out = MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        };
        // group terms by exponent of `var`
        let mut grouped: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut ne = e.clone();
            ne.remove(idx);
            let entry = grouped.entry(k).or_insert_with(|| MultiPoly {
                vars: rest_vars.clone(),
                terms: BTreeMap::new(),
            });
            entry.add_term(ne, c.clone());
        }
        for (k, coeff) in grouped {
            while powers.len() <= k as usize {
                let next = powers.last().unwrap() * &value;
                powers.push(next);
            }
            let term = &coeff.aligned(&vars) * &powers[k as usize];
            out = &out + &term;
        }
        Ok(out)
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_all(&self, subs: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        // rename targets to fresh names first so substitutions do not interact
        let mut cur = self.clone();
        let mut fresh = Vec::new();
        for (i, (v, _)) in subs.iter().enumerate() {
            let tmp = format!("\u{0}sub{i}");
            cur = cur.substitute(v, &MultiPoly::var(&tmp))?;
            fresh.push(tmp);
        }
        for (tmp, (_, val)) in fresh.iter().zip(subs) {
            cur = cur.substitute(tmp, val)?;
        }
        Ok(cur)
    }

    /// Substitutes rational constants; the remaining variables stay symbolic.
    /// Bindings for variables the polynomial does not declare are ignored.
    pub fn evaluate(&self, values: &[(&str, Rational)]) -> Result<MultiPoly> {
        let idx: Vec<(usize, &Rational)> = values
            .iter()
            .filter_map(|(v, c)| self.var_index(v).map(|i| (i, c)))
            .collect();
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let mut nc = c.clone();
            for (i, val) in &idx {
                let k = ne[*i];
                if k > 0 {
                    nc *= num_traits::pow(Rational::clone(val), k as usize);
                    ne[*i] = 0;
                }
            }
            out.add_term(ne, nc);
        }
        Ok(out)
    }

    /// Full evaluation; every used variable must be bound.
    pub fn eval_scalar(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let p = self.evaluate(values)?;
        if let Some(v) = p.used_vars().first() {
            return Err(Error::UnknownVariable(v.clone()));
        }
        Ok(p.constant_term())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&k| k == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Largest exponent of `var`, or `None` for the zero polynomial.
    /// Undeclared variables have degree 0.
    pub fn degree_in(&self, var: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max(),
            None => Some(0),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables
    /// (`var` stays declared with exponent 0).
    pub fn coeff_of(&self, var: &str, k: u32) -> MultiPoly {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        match self.var_index(var) {
            Some(i) => {
                for (e, c) in &self.terms {
                    if e[i] == k {
                        let mut ne = e.clone();
                        ne[i] = 0;
                        out.terms.insert(ne, c.clone());
                    }
                }
            }
            None if k == 0 => out.terms = self.terms.clone(),
            None => {}
        }
        out
    }

    /// Coefficient of the monomial given by `(var, exponent)` pairs; variables
    /// not listed must have exponent zero.
    pub fn coefficient(&self, mono: &[(&str, u32)]) -> Rational {
        let mut target = vec![0u32; self.vars.len()];
        for (v, k) in mono {
            match self.var_index(v) {
                Some(i) => target[i] = *k,
                None if *k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms
            .get(&target)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Dense coefficient list `c_0..c_deg` of a polynomial in `var` only.
    pub fn univariate_coeffs(&self, var: &str) -> Result<Vec<Rational>> {
        for v in self.used_vars() {
            if v != var {
                return Err(Error::UnknownVariable(v));
            }
        }
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        if let Some(i) = self.var_index(var) {
            for (e, c) in &self.terms {
                out[e[i] as usize] = c.clone();
            }
        } else {
            out[0] = self.constant_term();
        }
        Ok(out)
    }

    pub fn from_univariate(var: &str, coeffs: &[Rational]) -> MultiPoly {
        MultiPoly::from_terms(
            &[var],
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (vec![k as u32], c.clone())),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Keeps only terms whose total degree in `vars` is at most `max`.
    pub fn truncate_degree(&self, vars: &[&str], max: u32) -> MultiPoly {
        let idx: Vec<usize> = vars.iter().filter_map(|v| self.var_index(v)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| idx.iter().map(|&i| e[i]).sum::<u32>() <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product truncated to total degree `max` in `vars`.
    pub fn mul_truncated(&self, other: &MultiPoly, vars: &[&str], max: u32) -> MultiPoly {
        let a = self.truncate_degree(vars, max);
        let b = other.truncate_degree(vars, max);
        (&a * &b).truncate_degree(vars, max)
    }

    /// Exact division by `(var - root)^times`.
    pub fn div_linear_power(&self, var: &str, root: &Rational, times: u32) -> Result<MultiPoly> {
        if times == 0 || self.is_zero() {
            return Ok(self.clone());
        }
        let p = self.with_vars(&[var]);
        let x = MultiPoly::var(var);
        let shifted = p.substitute(var, &(&x + &MultiPoly::constant(root.clone())))?;
        let shifted = shifted.with_vars(&[var]);
        let i = shifted.var_index(var).unwrap();
        let mut out = MultiPoly {
            vars: shifted.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &shifted.terms {
            if e[i] < times {
                return Err(Error::NotPolynomial(format!(
                    "not divisible by ({var} - {root})^{times}"
                )));
            }
            let mut ne = e.clone();
            ne[i] -= times;
            out.terms.insert(ne, c.clone());
        }
        out.substitute(var, &(&x - &MultiPoly::constant(root.clone())))
            .map(|q| q.aligned(&p.vars))
    }

    /// Exact division by `var^times`.
    pub fn div_var_power(&self, var: &str, times: u32) -> Result<MultiPoly> {
        self.div_linear_power(var, &Rational::zero(), times)
    }

    /// Terms in printing order: graded lexicographic, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| grlex_desc(a, b));
        ts
    }

    /// Canonical text form, e.g. `x^3 + x^2 + x*y`.
    pub fn to_text(&self) -> String {
        self.render(&TextStyle)
    }

    pub fn to_latex(&self) -> String {
        self.render(&LatexStyle)
    }

    fn render(&self, style: &dyn Style) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| style.power(&self.vars[i], k))
                .collect();
            if mono.is_empty() {
                out.push_str(&style.coeff(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&style.coeff(&abs));
                    out.push_str(style.times());
                }
                out.push_str(&mono.join(style.times()));
            }
        }
        out
    }
}

/// Graded lexicographic order, largest first.
fn grlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

trait Style {
    fn coeff(&self, c: &Rational) -> String;
    fn power(&self, v: &str, k: u32) -> String;
    fn times(&self) -> &'static str;
}

struct TextStyle;
struct LatexStyle;

impl Style for TextStyle {
    fn coeff(&self, c: &Rational) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }
    fn power(&self, v: &str, k: u32) -> String {
        if k == 1 {
            v.to_string()
        } else {
            format!("{v}^{k}")
        }
    }
    fn times(&self) -> &'static str {
        "*"
    }
}

impl Style for LatexStyle {
    fn coeff(&self, c: &Rational) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
        }
    }
    fn power(&self, v: &str, k: u32) -> String {
        if k == 1 {
            v.to_string()
        } else {
            format!("{v}^{{{k}}}")
        }
    }
    fn times(&self) -> &'static str {
        " "
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let vars = Self::union_vars(&self.vars, &other.vars);
        self.aligned(&vars).terms == other.aligned(&vars).terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_ref(rhs, true)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_ref(rhs, false)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_ref(rhs)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        self.add_ref(&rhs, true)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self.add_ref(&rhs, false)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.mul_ref(&rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }
    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }

    #[test]
    fn tutte_subset_sum_collapses() {
        let xm = &x() - &c(1);
        let ym = &y() - &c(1);
        let sum = xm.pow(3) + c(4) * xm.pow(2) + c(6) * xm.clone() + c(3) + &xm * &ym + ym;
        assert_eq!(sum.to_text(), "x^3 + x^2 + x*y");
    }

    #[test]
    fn multiplicative_identity() {
        let p = &(&x() * &y()) - &c(7);
        assert_eq!(&p * &MultiPoly::one(), p);
    }

    #[test]
    fn substitution_matches_pointwise_evaluation() {
        let t = &(&x().pow(3) + &x().pow(2)) + &(&x() * &y());
        let q = MultiPoly::var("q");
        let s = t
            .substitute("x", &(&c(1) - &q))
            .unwrap()
            .substitute("y", &MultiPoly::zero())
            .unwrap();
        let expected = (&c(1) - &q).pow(3) + (&c(1) - &q).pow(2);
        assert_eq!(s, expected);
        for v in 0..4 {
            let lhs = s.eval_scalar(&[("q", rat(v))]).unwrap();
            let one_minus = rat(1 - v);
            let rhs = one_minus.clone() * one_minus.clone() * one_minus.clone()
                + one_minus.clone() * one_minus;
            assert_eq!(lhs, rhs);
        }
        assert_eq!(s.eval_scalar(&[("q", rat(2))]).unwrap(), rat(0));
    }

    #[test]
    fn unknown_variable_is_an_error() {
        let err = x().substitute("z", &c(1)).unwrap_err();
        assert_eq!(err, Error::UnknownVariable("z".into()));
    }

    #[test]
    fn rendering() {
        let q = MultiPoly::var("q");
        let p = &(&q.pow(3) - &(&c(3) * &q.pow(2))) + &(&c(2) * &q);
        assert_eq!(p.to_text(), "q^3 - 3*q^2 + 2*q");
        let h = &x().scale(&ratio(-1, 2)) + &c(3);
        assert_eq!(h.to_text(), "-1/2*x + 3");
        assert_eq!(h.to_latex(), "-\\frac{1}{2} x + 3");
        assert_eq!(MultiPoly::zero().to_text(), "0");
        assert_eq!((-&x()).to_text(), "-x");
    }

    #[test]
    fn equality_ignores_unused_variables() {
        assert_eq!(x().with_vars(&["y", "z"]), x());
        assert_ne!(x(), y());
    }

    #[test]
    fn exact_linear_division() {
        let p = (&x() - &c(1)).pow(3) * (&y() + &x());
        let q = p.div_linear_power("x", &rat(1), 3).unwrap();
        assert_eq!(q, &y() + &x());
        assert!(p.div_linear_power("x", &rat(1), 4).is_err());
    }

    #[test]
    fn coefficient_queries() {
        let p = &(&x().pow(2) * &y()) + &c(5);
        assert_eq!(p.coefficient(&[("x", 2), ("y", 1)]), rat(1));
        assert_eq!(p.coefficient(&[]), rat(5));
        assert_eq!(p.degree_in("x"), Some(2));
        assert_eq!(p.coeff_of("x", 2), y().with_vars(&["x"]));
    }
}
