//! Small hand-built dg-algebras with known formality behaviour.

use std::collections::BTreeMap;

use super::algebra::DgAlgebra;
use super::errors::Axiom;
use crate::Rational;

/// What [`formality_zigzag`](super::formality_zigzag) must do on an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Certified,
    Invalid(Axiom),
    NotPure { degree: i32 },
    Spectral { degree: i32 },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub algebra: DgAlgebra<Rational>,
    pub r: Rational,
    pub expected: Expected,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn named(names: &[&str], degrees: &[i32]) -> DgAlgebra<Rational> {
    DgAlgebra::new(names.iter().map(|s| s.to_string()).collect(), degrees.to_vec(), 0)
}

/// `Λ[x] ⊗ Q[y]/(y^2)`, `|x| = 1`, `|y| = 2`, `d = 0`, `F = r^{deg}`.
pub fn exterior(r: &Rational) -> DgAlgebra<Rational> {
    let mut a = named(&["1", "x", "y", "xy"], &[0, 1, 2, 3]);
    a.set_product(1, 2, &[(3, q(1))]);
    a.set_product(2, 1, &[(3, q(1))]);
    a.set_degree_automorphism(r);
    a
}

/// `e, a, b` with `d(a) = b` and `F = scale` on `a` and `b`.
pub fn acyclic_pair(scale: &Rational) -> DgAlgebra<Rational> {
    let mut a = named(&["e", "a", "b"], &[0, 1, 2]);
    a.set_differential(1, &[(2, q(1))]);
    a.set_automorphism(&[(1, vec![(1, scale.clone())]), (2, vec![(2, scale.clone())])]);
    a
}

/// `{1, x}` with `|x| = 1`, `d = 0` and `F = id`.
pub fn impure_class() -> DgAlgebra<Rational> {
    let mut a = named(&["1", "x"], &[0, 1]);
    a.set_automorphism(&[]);
    a
}

/// `Q[x]/(x^2) ⊗ (a -> b)`: `|x| = 2`, `d(a) = b`, `d(xa) = xb`, with `F = r^2`
/// on `x` and `r^w` on the pair.
pub fn tensor(r: &Rational, w: i64) -> DgAlgebra<Rational> {
    let mut a = named(&["1", "x", "a", "b", "xa", "xb"], &[0, 2, 1, 2, 3, 4]);
    for (l, m, p) in [(1, 2, 4), (2, 1, 4), (1, 3, 5), (3, 1, 5)] {
        a.set_product(l, m, &[(p, q(1))]);
    }
    a.set_differential(2, &[(3, q(1))]);
    a.set_differential(4, &[(5, q(1))]);
    let p = |e: i64| crate::scalar::pow(r, e);
    a.set_automorphism(&[
        (1, vec![(1, p(2))]),
        (2, vec![(2, p(w))]),
        (3, vec![(3, p(w))]),
        (4, vec![(4, p(w + 2))]),
        (5, vec![(5, p(w + 2))]),
    ]);
    a
}

/// [`tensor`] with `d(xa)` dropped, which breaks the Leibniz rule on `(x, a)`.
pub fn leibniz_violation() -> DgAlgebra<Rational> {
    let mut a = tensor(&q(3), 2);
    a.set_differential(4, &[]);
    a
}

/// `Λ[t] ⊗ Q[s]/(s^2)` with `d(t) = s` and `F(t) = 8t`: pure for `r = 4`
/// but with eigenvalue `4^{3/2}` on `t`.
pub fn half_weight() -> DgAlgebra<Rational> {
    let mut a = named(&["1", "t", "s", "ts"], &[0, 1, 2, 3]);
    a.set_product(1, 2, &[(3, q(1))]);
    a.set_product(2, 1, &[(3, q(1))]);
    a.set_differential(1, &[(2, q(1))]);
    a.set_automorphism(&[(1, vec![(1, q(8))]), (2, vec![(2, q(8))]), (3, vec![(3, q(64))])]);
    a
}

/// `d(a) = b` next to a cocycle `x`, with `F(x) = 4x + b` not diagonal on the basis.
pub fn mixed_eigenbasis() -> DgAlgebra<Rational> {
    let mut a = named(&["1", "a", "x", "b"], &[0, 1, 2, 2]);
    a.set_differential(1, &[(3, q(1))]);
    a.set_automorphism(&[(1, vec![(1, q(2))]), (2, vec![(2, q(4)), (3, q(1))]), (3, vec![(3, q(2))])]);
    a
}

/// A square-zero algebra with the given graded dimensions (degree 0 holds
/// the unit), `F = r^k` in degree `k`, plus an acyclic pair `a -> b` of weight 1.
///
/// Its cohomology has exactly the requested graded dimensions.
pub fn square_zero_with_acyclic_pair(dims: &BTreeMap<i32, usize>, r: &Rational) -> DgAlgebra<Rational> {
    assert!(dims.get(&0).copied().unwrap_or(0) >= 1, "degree 0 must contain the unit");
    let mut names = vec!["1".to_string()];
    let mut degrees = vec![0];
    for (&k, &m) in dims {
        let start = if k == 0 { 1 } else { 0 };
        for c in start..m {
            names.push(format!("h{k}_{c}"));
            degrees.push(k);
        }
    }
    names.extend(["a".to_string(), "b".to_string()]);
    degrees.extend([1, 2]);
    let n = names.len();
    let mut a = DgAlgebra::new(names, degrees, 0);
    a.set_differential(n - 2, &[(n - 1, q(1))]);
    a.set_degree_automorphism(r);
    let f = a.automorphism.as_mut().unwrap();
    f[n - 2][n - 2] = r.clone();
    f[n - 1][n - 1] = r.clone();
    a
}

pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry { name: "exterior", algebra: exterior(&q(2)), r: q(2), expected: Expected::Certified },
        CorpusEntry { name: "acyclic-pair", algebra: acyclic_pair(&q(4)), r: q(4), expected: Expected::Certified },
        CorpusEntry {
            name: "impure-class",
            algebra: impure_class(),
            r: q(4),
            expected: Expected::NotPure { degree: 1 },
        },
        CorpusEntry {
            name: "leibniz-violation",
            algebra: leibniz_violation(),
            r: q(3),
            expected: Expected::Invalid(Axiom::Leibniz),
        },
        CorpusEntry {
            name: "half-weight",
            algebra: half_weight(),
            r: q(4),
            expected: Expected::Spectral { degree: 1 },
        },
        CorpusEntry { name: "mixed-eigenbasis", algebra: mixed_eigenbasis(), r: q(2), expected: Expected::Certified },
        CorpusEntry { name: "tensor", algebra: tensor(&q(3), 2), r: q(3), expected: Expected::Certified },
        CorpusEntry {
            name: "square-zero",
            algebra: square_zero_with_acyclic_pair(&BTreeMap::from([(0, 2), (2, 2)]), &q(2)),
            r: q(2),
            expected: Expected::Certified,
        },
    ]
}
