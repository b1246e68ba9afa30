//! The Weyl group `S_n` of `GL(n)` together with its action on weights and roots.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest rank for which the full group is enumerated.
pub const MAX_RANK: usize = 8;

/// A permutation of `{1..n}` with its inversion count and a reduced word.
///
/// Internally values are stored 0-based. Composition is `(w * v)(i) = w(v(i))`
/// and the simple reflection `s_i` swaps `i` and `i + 1` (1-based).
///
/// The `Ord` instance is the total order used for every deterministic listing:
/// first by length, then by one-line notation. It refines the Bruhat order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Box<[u8]>,
    length: usize,
    word: Box<[u8]>,
}

impl WeylElement {
    fn from_raw(perm: Vec<u8>) -> Self {
        let length = inversions(&perm);
        let word = reduced_word_of(&perm);
        debug_assert_eq!(word.len(), length);
        WeylElement { perm: perm.into_boxed_slice(), length, word: word.into_boxed_slice() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_raw((0..n as u8).collect())
    }

    /// The simple reflection `s_i` for `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::input(format!("simple reflection s_{i} does not exist for n = {n}")));
        }
        let mut p: Vec<u8> = (0..n as u8).collect();
        p.swap(i - 1, i);
        Ok(Self::from_raw(p))
    }

    /// Builds an element from 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::input("one-line notation must have between 1 and 255 entries"));
        }
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::input(format!("{one_line:?} is not a permutation of 1..{n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self::from_raw(one_line.iter().map(|&v| (v - 1) as u8).collect()))
    }

    /// Product of simple reflections `s_{i_1} ... s_{i_k}` (1-based indices).
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.compose(&Self::simple(n, i)?);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// A reduced word as 1-based simple reflection indices; `self = s_{w[0]} s_{w[1]} ...`.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize).collect()
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|&v| v as usize + 1).collect()
    }

    /// `w(i)` for a 0-based index.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in composition");
        Self::from_raw(other.perm.iter().map(|&i| self.perm[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.rank()];
        for (i, &v) in self.perm.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Self::from_raw(inv)
    }

    /// `s_i * self` has greater length than `self` (1-based `i`).
    pub fn left_ascent(&self, i: usize) -> bool {
        let pos = |v: usize| self.perm.iter().position(|&x| x as usize == v).unwrap();
        pos(i - 1) < pos(i)
    }

    /// Permutes coordinates: `(w . x)_{w(j)} = x_j`, equivalently `(w . x)_i = x_{w^{-1}(i)}`.
    pub fn act_on_weight(&self, x: &Weight) -> Result<Weight> {
        if x.rank() != self.rank() {
            return Err(Error::input(format!(
                "weight of rank {} cannot be acted on by an element of S_{}",
                x.rank(),
                self.rank()
            )));
        }
        let mut out = vec![0; x.rank()];
        for (j, &c) in x.0.iter().enumerate() {
            out[self.apply(j)] = c;
        }
        Ok(Weight(out))
    }

    /// `w(e_i - e_j) = e_{w(i)} - e_{w(j)}`.
    pub fn act_on_root(&self, r: Root) -> Root {
        Root::new(self.apply(r.i), self.apply(r.j))
    }

    /// Number of roots in `positive` sent to negative roots. With `positive`
    /// the full positive system this is the ordinary length; with the
    /// positive roots of a reflection subgroup it is the length there.
    pub fn length_relative_to(&self, positive: &[Root]) -> usize {
        positive.iter().filter(|r| !self.act_on_root(**r).is_positive()).count()
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length.cmp(&other.length).then_with(|| self.perm.cmp(&other.perm))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.one_line())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.one_line().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

fn inversions(p: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// Peels off the smallest right descent until the identity is reached.
fn reduced_word_of(p: &[u8]) -> Vec<u8> {
    let mut cur = p.to_vec();
    let mut peeled = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        peeled.push(i as u8 + 1);
    }
    peeled.reverse();
    peeled
}

/// Compares `u` and `w` in the total order refining the Bruhat order.
pub fn total_order_cmp(u: &WeylElement, w: &WeylElement) -> Ordering {
    u.cmp(w)
}

/// Bruhat order via the subword criterion on the stored reduced word of `w`.
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> Result<bool> {
    if u.rank() != w.rank() {
        return Err(Error::input("bruhat_leq: rank mismatch"));
    }
    if u.length > w.length {
        return Ok(false);
    }
    let n = w.rank();
    let mut reachable: HashSet<Vec<u8>> = HashSet::new();
    reachable.insert((0..n as u8).collect());
    for &letter in w.word.iter() {
        let i = letter as usize - 1;
        let extended: Vec<Vec<u8>> = reachable
            .iter()
            .map(|x| {
                let mut y = x.clone();
                y.swap(i, i + 1);
                y
            })
            .collect();
        reachable.extend(extended);
    }
    Ok(reachable.contains(&u.perm[..]))
}

/// An element of the weight lattice `X^* = Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// The coordinate vector `e_i` (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(v)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The root `e_i - e_j` of `GL(n)`, `i != j`, stored 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert_ne!(i, j);
        Root { i, j }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Root {
        Root::new(self.j, self.i)
    }

    /// `self + other` when the sum is again a root.
    pub fn sum(&self, other: &Root) -> Option<Root> {
        if self.j == other.i && self.i != other.j {
            Some(Root::new(self.i, other.j))
        } else if other.j == self.i && other.i != self.j {
            Some(Root::new(other.i, self.j))
        } else {
            None
        }
    }

    pub fn as_weight(&self, n: usize) -> Weight {
        let mut v = vec![0; n];
        v[self.i] = 1;
        v[self.j] = -1;
        Weight(v)
    }

    /// 1-based pair `[i, j]`.
    pub fn one_based(&self) -> [usize; 2] {
        [self.i + 1, self.j + 1]
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i + 1, self.j + 1)
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

/// All roots `e_i - e_j`, `i != j`, in lexicographic order.
pub fn all_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(Root::new(i, j));
            }
        }
    }
    out
}

pub fn positive_roots(n: usize) -> Vec<Root> {
    all_roots(n).into_iter().filter(Root::is_positive).collect()
}

/// The full symmetric group with lengths and reduced words precomputed.
#[derive(Clone)]
pub struct WeylGroup {
    n: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Box<[u8]>, usize>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}", self.n)
    }
}

/// Enumerates `S_n` in lexicographic one-line order.
pub fn symmetric_group(n: usize) -> Result<WeylGroup> {
    if n == 0 || n > MAX_RANK {
        return Err(Error::input(format!("rank n = {n} outside 1..={MAX_RANK}")));
    }
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut elements = Vec::new();
    loop {
        elements.push(WeylElement::from_raw(perm.clone()));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let index = elements.iter().enumerate().map(|(k, w)| (w.perm.clone(), k)).collect();
    Ok(WeylGroup { n, elements, index })
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

impl WeylGroup {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic one-line order.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().unwrap()
    }

    /// `N = n(n-1)/2`.
    pub fn max_length(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        (1..self.n).map(|i| WeylElement::simple(self.n, i).unwrap()).collect()
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.perm).copied()
    }

    /// `#{w : l(w) = m}` for `m = 0..=N`.
    pub fn length_distribution(&self) -> Vec<usize> {
        let mut dist = vec![0; self.max_length() + 1];
        for w in &self.elements {
            dist[w.length] += 1;
        }
        dist
    }

    /// Elements sorted by the total order (length, then one-line).
    pub fn elements_in_total_order(&self) -> Vec<WeylElement> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let g1 = symmetric_group(1).unwrap();
        assert_eq!(g1.order(), 1);
        assert_eq!(g1.max_length(), 0);

        let g2 = symmetric_group(2).unwrap();
        let lengths: Vec<_> = g2.elements().iter().map(|w| w.length()).collect();
        assert_eq!(lengths, vec![0, 1]);

        let g3 = symmetric_group(3).unwrap();
        assert_eq!(g3.order(), 6);
        assert_eq!(g3.length_distribution(), vec![1, 2, 2, 1]);
        assert_eq!(g3.longest().reduced_word(), vec![1, 2, 1]);
        assert_eq!(WeylElement::from_word(3, &[1, 2, 1]).unwrap(), *g3.longest());
    }

    #[test]
    fn rank_bounds() {
        assert!(symmetric_group(0).is_err());
        assert!(symmetric_group(9).is_err());
        assert_eq!(symmetric_group(5).unwrap().order(), 120);
    }

    #[test]
    fn reduced_words_compose_to_the_element() {
        let g = symmetric_group(4).unwrap();
        for w in g.elements() {
            assert_eq!(w.reduced_word().len(), w.length());
            assert_eq!(&WeylElement::from_word(4, &w.reduced_word()).unwrap(), w);
        }
    }

    #[test]
    fn weight_action_examples() {
        let e = WeylElement::identity(2);
        assert_eq!(e.act_on_weight(&Weight(vec![5, -2])).unwrap(), Weight(vec![5, -2]));
        let s1 = WeylElement::simple(2, 1).unwrap();
        assert_eq!(s1.act_on_weight(&Weight(vec![1, 0])).unwrap(), Weight(vec![0, 1]));
        let w0 = symmetric_group(3).unwrap().longest().clone();
        assert_eq!(w0.act_on_weight(&Weight(vec![2, 1, 0])).unwrap(), Weight(vec![0, 1, 2]));
        assert!(w0.act_on_weight(&Weight(vec![1, 2])).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let s1 = WeylElement::from_word(3, &[1]).unwrap();
        let s2 = WeylElement::from_word(3, &[2]).unwrap();
        let s1s2 = WeylElement::from_word(3, &[1, 2]).unwrap();
        assert!(bruhat_leq(&s1, &s1s2).unwrap());
        assert!(!bruhat_leq(&s1, &s2).unwrap());
        let g = symmetric_group(3).unwrap();
        for w in g.elements() {
            assert!(bruhat_leq(g.identity(), w).unwrap());
            assert!(bruhat_leq(w, g.longest()).unwrap());
        }
        assert!(bruhat_leq(&s1, &WeylElement::identity(2)).is_err());
    }

    #[test]
    fn root_sums() {
        let a = Root::new(0, 1);
        let b = Root::new(1, 2);
        assert_eq!(a.sum(&b), Some(Root::new(0, 2)));
        assert_eq!(b.sum(&a), Some(Root::new(0, 2)));
        assert_eq!(a.sum(&a.negate()), None);
        assert_eq!(a.sum(&Root::new(2, 3)), None);
    }
}
