use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::combinat::{symmetric_group, LaurentPoly, TermDoc, Weight, WeylElement, WeylGroup};
use crate::{Error, Poly, QPoly, Rational, Result};

/// Key of a normal-form basis element `theta_x T_w`.
pub type BasisKey = (Weight, WeylElement);

/// An element of the affine Hecke algebra in normal form `sum c(q) theta_x T_w`.
///
/// Keys are ordered by weight (lexicographic) then by the total order on `W`;
/// coefficients are nonzero Laurent polynomials in `q`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<BasisKey, QPoly>,
}

fn q_const(c: Rational) -> QPoly {
    QPoly::constant(1, c)
}

fn q_var() -> QPoly {
    QPoly::var(1, 0)
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &QPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Weight, w: &WeylElement) -> QPoly {
        self.terms.get(&(x.clone(), w.clone())).cloned().unwrap_or_else(|| QPoly::zero(1))
    }

    /// Single term `c * theta_x T_w`.
    pub fn term(x: Weight, w: WeylElement, c: QPoly) -> Self {
        let mut h = Self::zero(x.rank());
        h.add_term(x, w, c);
        h
    }

    pub fn add_term(&mut self, x: Weight, w: WeylElement, c: QPoly) {
        assert_eq!(x.rank(), self.n, "weight rank mismatch");
        assert_eq!(w.rank(), self.n, "Weyl element rank mismatch");
        if c.is_zero() {
            return;
        }
        let key = (x, w);
        match self.terms.get_mut(&key) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "rank mismatch");
        for ((x, w), c) in &other.terms {
            self.add_term(x.clone(), w.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q_const(-Rational::one())))
    }

    /// Multiplies every coefficient by a central scalar `c(q)`.
    pub fn scale(&self, c: &QPoly) -> Self {
        let mut out = Self::zero(self.n);
        for ((x, w), a) in &self.terms {
            out.add_term(x.clone(), w.clone(), a * c);
        }
        out
    }

    /// `theta_y * self`.
    pub fn theta_shift(&self, y: &Weight) -> Self {
        let mut out = Self::zero(self.n);
        for ((x, w), c) in &self.terms {
            out.add_term(x + y, w.clone(), c.clone());
        }
        out
    }

    /// Collects the `theta` part attached to each `T_w`, as a polynomial in
    /// `x_1..x_n, q` (the last slot is `q`).
    pub fn theta_parts(&self) -> BTreeMap<WeylElement, Poly> {
        let mut out: BTreeMap<WeylElement, Poly> = BTreeMap::new();
        for ((x, w), c) in &self.terms {
            let entry = out.entry(w.clone()).or_insert_with(|| Poly::zero(self.n + 1));
            for (e, a) in c.terms() {
                let mut exps = x.0.clone();
                exps.push(e[0]);
                entry.add_term(exps, a.clone());
            }
        }
        out
    }

    /// Serializable view.
    pub fn to_doc(&self) -> Vec<HeckeTermDoc> {
        self.terms
            .iter()
            .map(|((x, w), c)| HeckeTermDoc { x: x.0.clone(), w: w.one_line(), coeff: c.to_doc() })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HeckeTermDoc {
    pub x: Vec<i32>,
    pub w: Vec<usize>,
    pub coeff: Vec<TermDoc>,
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((x, w), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if !c.is_one() {
                factors.push(format!("({c})"));
            }
            if !x.is_zero() {
                factors.push(format!("θ{x}"));
            }
            if !w.is_identity() {
                factors.push(format!("T{w}"));
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join("·"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}

/// Which commutation rule the multiplication kernel uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutationRule {
    /// `T_s theta_z = theta_{s(z)} T_s + (1 - q) D_a(z)`.
    Bernstein,
    /// Same with the sign of the correction flipped. Only for mutation tests
    /// of the relation checker.
    Corrupted,
}

/// The affine Hecke algebra of `GL(n)` over `Q[q, q^{-1}]`, Bernstein presentation.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    n: usize,
    group: WeylGroup,
    rule: CommutationRule,
}

impl HeckeAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        Ok(HeckeAlgebra { n, group: symmetric_group(n)?, rule: CommutationRule::Bernstein })
    }

    /// An algebra whose multiplication deliberately violates the Bernstein relation.
    pub fn corrupted(n: usize) -> Result<Self> {
        Ok(HeckeAlgebra { rule: CommutationRule::Corrupted, ..Self::new(n)? })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn rule(&self) -> CommutationRule {
        self.rule
    }

    pub fn unit(&self) -> HeckeElement {
        HeckeElement::term(Weight::zero(self.n), WeylElement::identity(self.n), q_const(Rational::one()))
    }

    pub fn theta(&self, x: &Weight) -> Result<HeckeElement> {
        if x.rank() != self.n {
            return Err(Error::input(format!("weight {x} does not have rank {}", self.n)));
        }
        Ok(HeckeElement::term(x.clone(), WeylElement::identity(self.n), q_const(Rational::one())))
    }

    pub fn tee(&self, w: &WeylElement) -> Result<HeckeElement> {
        if w.rank() != self.n {
            return Err(Error::input(format!("{w} is not in S_{}", self.n)));
        }
        Ok(HeckeElement::term(Weight::zero(self.n), w.clone(), q_const(Rational::one())))
    }

    /// `T_{s_i}` for 1-based `i`.
    pub fn simple(&self, i: usize) -> Result<HeckeElement> {
        self.tee(&WeylElement::simple(self.n, i)?)
    }

    /// The central variable `q`.
    pub fn qvar(&self) -> HeckeElement {
        HeckeElement::term(Weight::zero(self.n), WeylElement::identity(self.n), q_var())
    }

    /// Embeds a Laurent polynomial in `x_1..x_n` as `sum c theta_x`.
    pub fn from_theta_poly(&self, f: &Poly) -> Result<HeckeElement> {
        if f.nvars() != self.n {
            return Err(Error::input("theta polynomial has the wrong number of variables"));
        }
        let mut h = HeckeElement::zero(self.n);
        for (e, c) in f.terms() {
            h.add_term(Weight(e.clone()), WeylElement::identity(self.n), q_const(c.clone()));
        }
        Ok(h)
    }

    /// `D_a(z) = (theta_{s(z)} - theta_z) / (1 - theta_{-a})` for the simple root `a = e_i - e_{i+1}`.
    pub fn divided_difference(&self, i: usize, z: &Weight) -> Result<Poly> {
        let n = self.n;
        let s = WeylElement::simple(n, i)?;
        let sz = s.act_on_weight(z)?;
        let num = &Poly::monomial(sz.0, Rational::one()) - &Poly::monomial(z.0.clone(), Rational::one());
        let mut neg_alpha = vec![0; n];
        neg_alpha[i - 1] = -1;
        neg_alpha[i] = 1;
        let den = &Poly::one(n) - &Poly::monomial(neg_alpha, Rational::one());
        num.exact_div(&den)
            .map_err(|e| Error::Invariant(format!("Bernstein divided difference not exact: remainder {}", e.remainder)))
    }

    /// `T_{s_i} * h`.
    pub fn left_mul_simple(&self, i: usize, h: &HeckeElement) -> Result<HeckeElement> {
        let n = self.n;
        let s = WeylElement::simple(n, i)?;
        let q = q_var();
        let one = q_const(Rational::one());
        let correction = match self.rule {
            CommutationRule::Bernstein => &one - &q,
            CommutationRule::Corrupted => &q - &one,
        };
        let mut out = HeckeElement::zero(n);
        for ((z, u), c) in h.terms() {
            let sz = s.act_on_weight(z)?;
            // theta_{s(z)} T_s T_u
            let su = s.compose(u);
            if u.left_ascent(i) {
                out.add_term(sz, su, c.clone());
            } else {
                out.add_term(sz.clone(), su, c * &q);
                out.add_term(sz, u.clone(), c * &(&q - &one));
            }
            // (1 - q) D(z) T_u
            let d = self.divided_difference(i, z)?;
            let cc = c * &correction;
            for (e, a) in d.terms() {
                out.add_term(Weight(e.clone()), u.clone(), cc.scale(a));
            }
        }
        Ok(out)
    }

    /// `T_w * h`, peeling the reduced word of `w` from the right.
    pub fn left_mul_tee(&self, w: &WeylElement, h: &HeckeElement) -> Result<HeckeElement> {
        let mut acc = h.clone();
        for &i in w.reduced_word().iter().rev() {
            acc = self.left_mul_simple(i, &acc)?;
        }
        Ok(acc)
    }

    /// Normal form of `a * b`.
    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        if a.rank() != self.n || b.rank() != self.n {
            return Err(Error::input("multiply: rank mismatch"));
        }
        let mut by_w: BTreeMap<&WeylElement, HeckeElement> = BTreeMap::new();
        for ((x, w), c) in a.terms() {
            by_w.entry(w).or_insert_with(|| HeckeElement::zero(self.n)).add_term(
                x.clone(),
                WeylElement::identity(self.n),
                c.clone(),
            );
        }
        let mut out = HeckeElement::zero(self.n);
        for (w, theta_part) in by_w {
            let tb = self.left_mul_tee(w, b)?;
            for ((x, _), c) in theta_part.terms() {
                out.add_assign(&tb.theta_shift(x).scale(c));
            }
        }
        Ok(out)
    }

    /// `a * b - b * a`.
    pub fn commutator(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        Ok(self.multiply(a, b)?.sub(&self.multiply(b, a)?))
    }
}

/// Specializes `q -> q0` in a Laurent polynomial of one variable.
pub(crate) fn specialize(c: &QPoly, q0: &Rational) -> Rational {
    c.evaluate(std::slice::from_ref(q0)).expect("q0 is nonzero")
}

/// Builds `c * theta_x T_w` from plain data.
pub fn basis_term(x: Weight, w: WeylElement, c: Rational) -> HeckeElement {
    HeckeElement::term(x, w, q_const(c))
}

/// Laurent polynomial in `q` from `(exponent, coefficient)` pairs.
pub fn qpoly(terms: &[(i32, i64)]) -> QPoly {
    LaurentPoly::from_terms(1, terms.iter().map(|&(e, c)| (vec![e], Rational::from_integer(c.into()))))
}
