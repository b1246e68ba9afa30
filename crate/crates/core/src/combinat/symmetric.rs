//! Semisimple points, centralizers, symmetric generators and the staircase
//! normal form of `Q[x^{+-1}]` modulo `(e_1 - c_1, ..., e_n - c_n)`.

use num_traits::{One, Signed, Zero};

use super::laurent::Exponents;
use super::weyl::{positive_roots, symmetric_group, Root, Weight, WeylElement, WeylGroup};
use crate::{Error, Poly, Rational, Result};

/// A point `(s, q0)` of `T x G_m` with an optional fixed square root of `q0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplePoint {
    s: Vec<Rational>,
    q0: Rational,
    sqrt_q: Option<Rational>,
}

impl SemisimplePoint {
    pub fn new(s: Vec<Rational>, q0: Rational, sqrt_q: Option<Rational>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::input("torus point must have at least one coordinate"));
        }
        if let Some(k) = s.iter().position(Zero::is_zero) {
            return Err(Error::input(format!("torus coordinate s_{} is zero", k + 1)));
        }
        if q0.is_zero() || q0.abs().is_one() {
            return Err(Error::input(format!("q0 = {q0} must not be 0, 1 or -1")));
        }
        if let Some(r) = &sqrt_q {
            if !r.is_positive() || r.clone() * r.clone() != q0 {
                return Err(Error::input(format!("sqrt_q = {r} is not the positive square root of q0 = {q0}")));
            }
        }
        Ok(SemisimplePoint { s, q0, sqrt_q })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(s: &[i64], q0: i64) -> Result<Self> {
        Self::new(
            s.iter().map(|&v| Rational::from_integer(v.into())).collect(),
            Rational::from_integer(q0.into()),
            None,
        )
    }

    pub fn with_sqrt_q(mut self, r: Rational) -> Result<Self> {
        self = Self::new(self.s, self.q0, Some(r))?;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self) -> &[Rational] {
        &self.s
    }

    pub fn q0(&self) -> &Rational {
        &self.q0
    }

    pub fn sqrt_q(&self) -> Option<&Rational> {
        self.sqrt_q.as_ref()
    }

    /// Block label of each coordinate: equal coordinates share a label,
    /// labels numbered by first occurrence.
    pub fn levels(&self) -> Vec<usize> {
        let mut seen: Vec<&Rational> = Vec::new();
        self.s
            .iter()
            .map(|v| match seen.iter().position(|u| *u == v) {
                Some(k) => k,
                None => {
                    seen.push(v);
                    seen.len() - 1
                }
            })
            .collect()
    }

    pub fn is_regular(&self) -> bool {
        let lv = self.levels();
        lv.iter().enumerate().all(|(k, &l)| l == k)
    }

    /// The point `w . s`.
    pub fn permuted(&self, w: &WeylElement) -> Vec<Rational> {
        let mut out = self.s.clone();
        for (j, v) in self.s.iter().enumerate() {
            out[w.apply(j)] = v.clone();
        }
        out
    }
}

/// The centralizer `W(s)` with its positive roots and minimal coset representatives of `W(s)\W`.
#[derive(Clone, Debug)]
pub struct Centralizer {
    pub group: WeylGroup,
    pub subgroup: Vec<WeylElement>,
    /// `Phi_s^+`: positive roots `(i, j)` with `s_i = s_j`.
    pub positive_roots: Vec<Root>,
    /// One representative `w` per coset `W(s) w`, characterized by `w^{-1}(Phi_s^+) ⊂ Phi^+`.
    pub coset_reps: Vec<WeylElement>,
}

pub fn centralizer_data(p: &SemisimplePoint) -> Result<Centralizer> {
    let n = p.rank();
    let group = symmetric_group(n)?;
    let s = p.s();
    let subgroup: Vec<WeylElement> =
        group.elements().iter().filter(|w| (0..n).all(|i| s[w.apply(i)] == s[i])).cloned().collect();
    let positive: Vec<Root> = positive_roots(n).into_iter().filter(|r| s[r.i] == s[r.j]).collect();
    let coset_reps: Vec<WeylElement> = group
        .elements()
        .iter()
        .filter(|w| {
            let inv = w.inverse();
            positive.iter().all(|r| inv.act_on_root(*r).is_positive())
        })
        .cloned()
        .collect();
    if coset_reps.len() * subgroup.len() != group.order() {
        return Err(Error::Invariant(format!(
            "{} coset representatives times |W(s)| = {} is not {}",
            coset_reps.len(),
            subgroup.len(),
            group.order()
        )));
    }
    Ok(Centralizer { group, subgroup, positive_roots: positive, coset_reps })
}

/// `e_k(x_1..x_n)` for `1 <= k <= n`; `e_0 = 1`.
pub fn elementary(n: usize, k: usize) -> Poly {
    assert!(k <= n);
    let mut p = Poly::zero(n);
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == k {
            let e: Exponents = (0..n).map(|i| ((mask >> i) & 1) as i32).collect();
            p.add_term(e, Rational::one());
        }
    }
    p
}

/// `[e_1, ..., e_n]`.
pub fn elementary_all(n: usize) -> Vec<Poly> {
    (1..=n).map(|k| elementary(n, k)).collect()
}

/// Sum of `theta_mu` over the distinct elements `mu` of the orbit `W . lambda`.
pub fn orbit_sum(lambda: &Weight) -> Result<Poly> {
    let n = lambda.rank();
    let g = symmetric_group(n)?;
    let mut p = Poly::zero(n);
    let mut seen = std::collections::BTreeSet::new();
    for w in g.elements() {
        let mu = w.act_on_weight(lambda)?;
        if seen.insert(mu.clone()) {
            p.add_term(mu.0, Rational::one());
        }
    }
    Ok(p)
}

/// Substitutes `s_i` for `x_i`, and `q0` for the trailing `q` slot when the
/// polynomial has `n + 1` variables.
pub fn evaluate(f: &Poly, p: &SemisimplePoint) -> Result<Rational> {
    let mut values = p.s().to_vec();
    if f.nvars() == values.len() + 1 {
        values.push(p.q0().clone());
    }
    f.evaluate(&values)
}

/// Staircase exponents `0 <= a_k <= n - k` (1-based `k`) in lexicographic order.
pub fn staircase_monomials(n: usize) -> Vec<Exponents> {
    let mut out: Vec<Exponents> = vec![vec![]];
    for k in 0..n {
        let bound = (n - 1 - k) as i32;
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=bound).map(move |a| {
                    let mut e = prefix.clone();
                    e.push(a);
                    e
                })
            })
            .collect();
    }
    out
}

pub fn is_staircase(e: &[i32]) -> bool {
    let n = e.len();
    e.iter().enumerate().all(|(k, &a)| a >= 0 && a <= (n - 1 - k) as i32)
}

/// Precomputed relation cascade for a fixed tuple `c = (c_1, ..., c_n)`.
///
/// `rules[k]` is the replacement for `x_k^{n-k}` (0-based `k`): a polynomial in
/// `x_0..x_k` whose `x_k`-degree is below `n - k`. It comes from
/// `r_k(x_k) = 0`, where `r_0(t) = prod (t - x_i)` specialized at `c` and
/// `r_{k+1}(t) = r_k(t) / (t - x_k)` by synthetic division.
#[derive(Clone, Debug)]
pub struct StaircaseReducer {
    n: usize,
    c: Vec<Rational>,
    rules: Vec<Poly>,
}

impl StaircaseReducer {
    pub fn new(c: &[Rational]) -> Result<Self> {
        let n = c.len();
        if n == 0 {
            return Err(Error::input("staircase reduction needs n >= 1"));
        }
        if c[n - 1].is_zero() {
            return Err(Error::input("c_n = 0: e_n must be invertible"));
        }
        // r(t) as coefficient list indexed by t-degree
        let mut r: Vec<Poly> = vec![Poly::zero(n); n + 1];
        for m in 0..=n {
            let cm = if m == 0 { Rational::one() } else { c[m - 1].clone() };
            let sign = if m % 2 == 0 { cm } else { -cm };
            r[n - m] = Poly::constant(n, sign);
        }
        let mut rules = Vec::with_capacity(n);
        for k in 0..n {
            let deg = r.len() - 1;
            debug_assert!(r[deg].is_one());
            // x_k^deg = -(sum_{m < deg} r_m x_k^m)
            let mut tail = Poly::zero(n);
            for (m, coeff) in r.iter().enumerate().take(deg) {
                let mut e = vec![0; n];
                e[k] = m as i32;
                tail -= &coeff.shift(&e);
            }
            rules.push(tail);
            if deg == 1 {
                break;
            }
            let xk = Poly::var(n, k);
            let mut next: Vec<Poly> = vec![Poly::zero(n); deg];
            next[deg - 1] = r[deg].clone();
            for m in (1..deg).rev() {
                next[m - 1] = &r[m] + &(&xk * &next[m]);
            }
            r = next;
        }
        Ok(StaircaseReducer { n, c: c.to_vec(), rules })
    }

    pub fn values(&self) -> &[Rational] {
        &self.c
    }

    /// The unique staircase-supported representative of `f`.
    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        let n = self.n;
        if f.nvars() != n {
            return Err(Error::input(format!(
                "staircase reduction expects {n} variables, got {} (no q slot allowed)",
                f.nvars()
            )));
        }
        // x^a with min exponent -m becomes x^{a + m(1..1)} / c_n^m
        let cn = &self.c[n - 1];
        let mut cur = Poly::zero(n);
        for (e, coeff) in f.terms() {
            let m = e.iter().copied().min().unwrap_or(0).min(0);
            if m < 0 {
                let shift = vec![-m; n];
                let factor = crate::scalar::pow(cn, m as i64);
                let e2: Exponents = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                cur.add_term(e2, coeff.clone() * factor);
            } else {
                cur.add_term(e.clone(), coeff.clone());
            }
        }
        for k in (0..n).rev() {
            let deg = (n - k) as i32;
            let Some(rule) = self.rules.get(k) else { continue };
            loop {
                let mut good = Poly::zero(n);
                let mut bad = Vec::new();
                for (e, coeff) in cur.into_terms() {
                    if e[k] >= deg {
                        bad.push((e, coeff));
                    } else {
                        good.add_term(e, coeff);
                    }
                }
                if bad.is_empty() {
                    cur = good;
                    break;
                }
                for (mut e, coeff) in bad {
                    e[k] -= deg;
                    good += &rule.shift(&e).scale(&coeff);
                }
                cur = good;
            }
        }
        debug_assert!(cur.terms().all(|(e, _)| is_staircase(e)));
        Ok(cur)
    }
}

/// One-shot staircase reduction; see [`StaircaseReducer`].
pub fn staircase_reduce(f: &Poly, c: &[Rational]) -> Result<Poly> {
    StaircaseReducer::new(c)?.reduce(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn point_validation() {
        assert!(SemisimplePoint::from_ints(&[1, 0], 4).is_err());
        assert!(SemisimplePoint::from_ints(&[1, 2], 1).is_err());
        assert!(SemisimplePoint::from_ints(&[1, 2], -1).is_err());
        assert!(SemisimplePoint::from_ints(&[1, 2], 0).is_err());
        let p = SemisimplePoint::from_ints(&[1, 2], 4).unwrap();
        assert!(p.clone().with_sqrt_q(r(2)).is_ok());
        assert!(p.clone().with_sqrt_q(r(-2)).is_err());
        assert!(p.with_sqrt_q(r(3)).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let c = centralizer_data(&SemisimplePoint::from_ints(&[1, 2, 4], 2).unwrap()).unwrap();
        assert_eq!(c.subgroup.len(), 1);
        assert_eq!(c.coset_reps.len(), 6);

        let c = centralizer_data(&SemisimplePoint::from_ints(&[5, 5], 2).unwrap()).unwrap();
        assert_eq!(c.subgroup.len(), 2);
        assert_eq!(c.coset_reps.len(), 1);
        assert!(c.coset_reps[0].is_identity());

        let c = centralizer_data(&SemisimplePoint::from_ints(&[1, 1, 2], 2).unwrap()).unwrap();
        assert_eq!(c.subgroup.len(), 2);
        let mut lengths: Vec<_> = c.coset_reps.iter().map(|w| w.length()).collect();
        lengths.sort();
        assert_eq!(lengths, vec![0, 1, 2]);
    }

    #[test]
    fn coset_reps_are_length_minimal() {
        for s in [[1, 2, 1], [3, 3, 3], [1, 2, 2], [2, 1, 2]] {
            let c = centralizer_data(&SemisimplePoint::from_ints(&s, 5).unwrap()).unwrap();
            for rep in &c.coset_reps {
                for u in &c.subgroup {
                    assert!(u.compose(rep).length() >= rep.length());
                }
            }
        }
    }

    #[test]
    fn generator_examples() {
        let p = SemisimplePoint::from_ints(&[1, 2], 4).unwrap();
        let e = elementary_all(2);
        assert_eq!(evaluate(&e[0], &p).unwrap(), r(3));
        assert_eq!(evaluate(&e[1], &p).unwrap(), r(2));
        let o = orbit_sum(&Weight(vec![2, 0])).unwrap();
        assert_eq!(o, &Poly::monomial(vec![2, 0], r(1)) + &Poly::monomial(vec![0, 2], r(1)));
        assert_eq!(evaluate(&o, &p).unwrap(), r(5));
        assert_eq!(evaluate(&Poly::one(2), &p).unwrap(), r(1));
        assert_eq!(orbit_sum(&Weight(vec![1, 1, 1])).unwrap().len(), 1);
    }

    #[test]
    fn staircase_examples() {
        let c = [r(3), r(2)];
        let x1sq = Poly::monomial(vec![2, 0], r(1));
        let expected = &Poly::monomial(vec![1, 0], r(3)) - &Poly::constant(2, r(2));
        assert_eq!(staircase_reduce(&x1sq, &c).unwrap(), expected);

        let inv = Poly::monomial(vec![-1, 0], r(1));
        let expected = &Poly::constant(2, Rational::new(3.into(), 2.into()))
            - &Poly::monomial(vec![1, 0], Rational::new(1.into(), 2.into()));
        assert_eq!(staircase_reduce(&inv, &c).unwrap(), expected);

        let x1 = Poly::var(2, 0);
        assert_eq!(staircase_reduce(&x1, &c).unwrap(), x1);
        assert!(staircase_reduce(&x1, &[r(3), r(0)]).is_err());
    }

    #[test]
    fn staircase_monomial_count() {
        for n in 1..=5 {
            let m = staircase_monomials(n);
            assert_eq!(m.len(), (1..=n).product::<usize>());
            assert!(m.iter().all(|e| is_staircase(e)));
        }
    }
}
