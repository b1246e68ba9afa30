//! Sparse multivariate Laurent polynomials over an exact field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Exponent vector; entries may be negative.
pub type Exponents = Vec<i32>;

/// A finite sum of monomials `c * x^a`, `a` in `Z^nvars`, with no zero coefficient stored.
///
/// Terms are kept in a `BTreeMap`, so iteration is in lexicographic exponent
/// order and the last term is the lex-leading one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<K> {
    nvars: usize,
    terms: BTreeMap<Exponents, K>,
}

/// `exact_div` found a nonzero remainder.
#[derive(Clone, PartialEq)]
pub struct DivisibilityError<K> {
    pub remainder: LaurentPoly<K>,
}

impl<K: Scalar> fmt::Debug for DivisibilityError<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisibilityError {{ remainder: {} }}", self.remainder)
    }
}

impl<K: Scalar> From<DivisibilityError<K>> for Error {
    fn from(e: DivisibilityError<K>) -> Self {
        Error::Divisibility { remainder: e.remainder.to_string() }
    }
}

impl<K: Scalar> LaurentPoly<K> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, K::one())
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Exponents, c: K) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// `x_i` (0-based) with coefficient one.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, K::one())
    }

    /// Sums the given terms, merging duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, K)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, c)| e.iter().all(|&a| a == 0) && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &K)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponents, K)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> K {
        self.terms.get(exps).cloned().unwrap_or_else(K::zero)
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Exponents, &K)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: Exponents, c: K) {
        assert_eq!(exps.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(old) => {
                *old = old.clone() + c;
                if old.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), a.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum of the exponents; `None` for zero.
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect()))
    }

    /// Exact quotient `h` with `divisor * h = self` in the Laurent ring.
    ///
    /// Both operands are shifted to polynomials without monomial content, and
    /// divided with lex-leading terms; the quotient is confirmed by
    /// multiplying back before it is returned.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, DivisibilityError<K>> {
        assert_eq!(self.nvars, divisor.nvars, "variable count mismatch");
        if divisor.is_zero() {
            return Err(DivisibilityError { remainder: self.clone() });
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let g_shift: Vec<i32> = divisor.min_exponents().unwrap().iter().map(|a| -a).collect();
        let f_shift: Vec<i32> = self.min_exponents().unwrap().iter().map(|a| -a).collect();
        let g = divisor.shift(&g_shift);
        let mut rest = self.shift(&f_shift);
        let (g_lead_e, g_lead_c) = {
            let (e, c) = g.leading().unwrap();
            (e.clone(), c.clone())
        };
        let mut quotient = Self::zero(self.nvars);
        let mut remainder = Self::zero(self.nvars);
        while let Some((e, c)) = rest.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&g_lead_e).all(|(a, b)| a >= b) {
                let q_e: Exponents = e.iter().zip(&g_lead_e).map(|(a, b)| a - b).collect();
                let q_c = c / g_lead_c.clone();
                let term = Self::monomial(q_e, q_c);
                rest -= &(&g * &term);
                quotient += &term;
            } else {
                rest.terms.remove(&e);
                remainder.add_term(e, c);
            }
        }
        if !remainder.is_zero() {
            let back: Vec<i32> = f_shift.iter().map(|a| -a).collect();
            return Err(DivisibilityError { remainder: remainder.shift(&back) });
        }
        // x^f_shift * self = x^g_shift * divisor * quotient
        let net: Vec<i32> = g_shift.iter().zip(&f_shift).map(|(a, b)| a - b).collect();
        let h = quotient.shift(&net);
        let check = &(divisor * &h) - self;
        if !check.is_zero() {
            return Err(DivisibilityError { remainder: check });
        }
        Ok(h)
    }

    /// Substitutes `values[i]` for `x_i`. Every value must be nonzero.
    pub fn evaluate(&self, values: &[K]) -> Result<K> {
        if values.len() != self.nvars {
            return Err(Error::input(format!(
                "evaluation point has {} coordinates, polynomial has {} variables",
                values.len(),
                self.nvars
            )));
        }
        if values.iter().any(|v| v.is_zero()) {
            return Err(Error::input("cannot evaluate a Laurent polynomial at a zero coordinate"));
        }
        let mut total = K::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (v, &a) in values.iter().zip(e) {
                m = m * crate::scalar::pow(v, a as i64);
            }
            total = total + m;
        }
        Ok(total)
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> LaurentPoly<L> {
        LaurentPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Renders with the given variable names.
    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mut coeff = c.to_string();
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &a) in e.iter().enumerate() {
                let name = names.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("x{}", i + 1));
                match a {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{a}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&coeff);
            } else {
                if coeff != "1" {
                    factors.insert(0, coeff);
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl<K: Scalar> fmt::Display for LaurentPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nvars == 1 {
            f.write_str(&self.fmt_with(&["q"]))
        } else {
            f.write_str(&self.fmt_with(&[]))
        }
    }
}

impl<K: Scalar> fmt::Debug for LaurentPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<K: Scalar> AddAssign<&LaurentPoly<K>> for LaurentPoly<K> {
    fn add_assign(&mut self, rhs: &LaurentPoly<K>) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl<K: Scalar> SubAssign<&LaurentPoly<K>> for LaurentPoly<K> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<K>) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl<K: Scalar> Add for &LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn add(self, rhs: &LaurentPoly<K>) -> LaurentPoly<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Scalar> Sub for &LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn sub(self, rhs: &LaurentPoly<K>) -> LaurentPoly<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Scalar> Neg for &LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn neg(self) -> LaurentPoly<K> {
        self.scale(&-K::one())
    }
}

impl<K: Scalar> Mul for &LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn mul(self, rhs: &LaurentPoly<K>) -> LaurentPoly<K> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

/// Serialized term: `{"exponents": [...], "coeff": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exponents: Vec<i32>,
    pub coeff: String,
}

impl<K: Scalar + FromStr> LaurentPoly<K> {
    pub fn to_doc(&self) -> Vec<TermDoc> {
        self.terms.iter().map(|(e, c)| TermDoc { exponents: e.clone(), coeff: c.to_string() }).collect()
    }

    pub fn from_doc(nvars: usize, doc: &[TermDoc]) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for t in doc {
            if t.exponents.len() != nvars {
                return Err(Error::input(format!("term {:?} does not have {nvars} exponents", t.exponents)));
            }
            if t.coeff.contains('.') || t.coeff.contains('e') || t.coeff.contains('E') {
                return Err(Error::input(format!("coefficient {:?} is not of the form p/q", t.coeff)));
            }
            let c = t.coeff.parse::<K>().map_err(|_| Error::input(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(t.exponents.clone(), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn theta(e: &[i32]) -> LaurentPoly<Rational> {
        LaurentPoly::monomial(e.to_vec(), r(1))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &theta(&[1, 0]) - &theta(&[1, 0]);
        assert!(p.is_zero());
        assert_eq!(LaurentPoly::monomial(vec![3], r(0)).len(), 0);
    }

    #[test]
    fn exact_division_examples() {
        let one = LaurentPoly::<Rational>::one(2);
        let den = &one - &theta(&[-1, 1]);
        let f = &theta(&[1, 0]) - &theta(&[0, 1]);
        assert_eq!(f.exact_div(&den).unwrap(), theta(&[1, 0]));
        assert_eq!(f.exact_div(&one).unwrap(), f);
        let g = &one - &theta(&[-2, 2]);
        assert_eq!(g.exact_div(&den).unwrap(), &one + &theta(&[-1, 1]));
    }

    #[test]
    fn non_divisible_reports_remainder() {
        let one = LaurentPoly::<Rational>::one(2);
        let den = &one - &theta(&[-1, 1]);
        let f = &theta(&[1, 0]) + &theta(&[0, 1]);
        let err = f.exact_div(&den).unwrap_err();
        assert!(!err.remainder.is_zero());
        assert!(LaurentPoly::<Rational>::one(1).exact_div(&LaurentPoly::zero(1)).is_err());
    }

    #[test]
    fn evaluation_rejects_zero() {
        let p = &theta(&[-1, 0]) + &theta(&[0, 2]);
        assert_eq!(p.evaluate(&[r(2), r(3)]).unwrap(), Rational::new(19.into(), 2.into()));
        assert!(p.evaluate(&[r(0), r(1)]).is_err());
    }

    #[test]
    fn doc_round_trip() {
        let p = &theta(&[-1, 2]).scale(&Rational::new(3.into(), 4.into())) - &theta(&[0, 0]);
        let doc = p.to_doc();
        assert_eq!(doc[0].coeff, "3/4");
        assert_eq!(doc[1].coeff, "-1");
        assert_eq!(LaurentPoly::from_doc(2, &doc).unwrap(), p);
        let bad = vec![TermDoc { exponents: vec![0, 0], coeff: "0.5".into() }];
        assert!(LaurentPoly::<Rational>::from_doc(2, &bad).is_err());
    }

    #[test]
    fn works_over_machine_rationals() {
        type Small = num_rational::Ratio<i64>;
        let one = LaurentPoly::<Small>::one(1);
        let x = LaurentPoly::<Small>::var(1, 0);
        let f = &(&x * &x) - &one;
        assert_eq!(f.exact_div(&(&x - &one)).unwrap(), &x + &one);
    }
}
