use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::element::{specialize, HeckeAlgebra, HeckeElement};
use crate::combinat::{
    elementary_all, evaluate, staircase_monomials, Exponents, SemisimplePoint, StaircaseReducer, Weight, WeylElement,
};
use crate::{fmt_rational, Error, Poly, Rational, Result};

/// The character `chi_(s,q)` of the center: `e_i -> c_i = e_i(s)`, `q -> q0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter {
    pub point: SemisimplePoint,
    /// `c_1, ..., c_n`.
    pub values: Vec<Rational>,
    pub q0: Rational,
}

pub fn central_character(p: &SemisimplePoint) -> Result<CentralCharacter> {
    let values = elementary_all(p.rank()).iter().map(|e| evaluate(e, p)).collect::<Result<Vec<_>>>()?;
    if values.last().is_none_or(Zero::is_zero) {
        return Err(Error::Invariant("c_n vanished at a point with nonzero coordinates".into()));
    }
    Ok(CentralCharacter { point: p.clone(), values, q0: p.q0().clone() })
}

/// Basis vector `theta_a T_w` of the truncated algebra, `a` a staircase exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedBasis {
    pub a: Exponents,
    pub w: WeylElement,
}

/// `H^aff / (ker chi)`: structure constants on the basis staircase x `W`.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    character: CentralCharacter,
    basis: Vec<TruncatedBasis>,
    index: HashMap<TruncatedBasis, usize>,
    /// `products[i][j]` = sparse coordinates of `b_i b_j`, sorted by index.
    products: Vec<Vec<Vec<(usize, Rational)>>>,
    reducer: StaircaseReducer,
}

/// Builds the truncated algebra at `p` by multiplying every pair of basis
/// elements generically, specializing `q -> q0` and reducing the `theta` part
/// to staircase form.
pub fn truncated_algebra(p: &SemisimplePoint) -> Result<TruncatedAlgebra> {
    let n = p.rank();
    let algebra = HeckeAlgebra::new(n)?;
    let character = central_character(p)?;
    let reducer = StaircaseReducer::new(&character.values)?;
    let stairs = staircase_monomials(n);
    let elements = algebra.group().elements_in_total_order();
    let basis: Vec<TruncatedBasis> = stairs
        .iter()
        .flat_map(|a| elements.iter().map(move |w| TruncatedBasis { a: a.clone(), w: w.clone() }))
        .collect();
    let index: HashMap<TruncatedBasis, usize> = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();

    let mut t = TruncatedAlgebra { character, basis, index, products: Vec::new(), reducer };
    let gens: Vec<HeckeElement> = t.basis.iter().map(|b| t.lift(b)).collect();
    // T_w theta_b T_v does not depend on the left theta factor, so compute it once per (w, j)
    let mut tee_cache: HashMap<(WeylElement, usize), HeckeElement> = HashMap::new();
    let mut products = Vec::with_capacity(t.basis.len());
    for bi in &t.basis {
        let mut row = Vec::with_capacity(t.basis.len());
        for (j, gj) in gens.iter().enumerate() {
            let key = (bi.w.clone(), j);
            let tb = match tee_cache.get(&key) {
                Some(h) => h.clone(),
                None => {
                    let h = algebra.left_mul_tee(&bi.w, gj)?;
                    tee_cache.insert(key, h.clone());
                    h
                }
            };
            let prod = tb.theta_shift(&Weight(bi.a.clone()));
            row.push(t.project(&prod)?);
        }
        products.push(row);
    }
    t.products = products;
    Ok(t)
}

impl TruncatedAlgebra {
    pub fn character(&self) -> &CentralCharacter {
        &self.character
    }

    pub fn rank(&self) -> usize {
        self.character.point.rank()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TruncatedBasis] {
        &self.basis
    }

    pub fn index_of(&self, a: &[i32], w: &WeylElement) -> Option<usize> {
        self.index.get(&TruncatedBasis { a: a.to_vec(), w: w.clone() }).copied()
    }

    pub fn unit_index(&self) -> usize {
        let n = self.rank();
        self.index_of(&vec![0; n], &WeylElement::identity(n)).expect("unit is a basis element")
    }

    /// Sparse coordinates of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i][j]
    }

    fn lift(&self, b: &TruncatedBasis) -> HeckeElement {
        super::element::basis_term(Weight(b.a.clone()), b.w.clone(), Rational::one())
    }

    /// Image of a generic element in the truncated algebra, as sparse coordinates.
    pub fn project(&self, h: &HeckeElement) -> Result<Vec<(usize, Rational)>> {
        let n = self.rank();
        let q0 = &self.character.q0;
        let mut per_w: std::collections::BTreeMap<WeylElement, Poly> = std::collections::BTreeMap::new();
        for ((x, w), c) in h.terms() {
            let v = specialize(c, q0);
            per_w.entry(w.clone()).or_insert_with(|| Poly::zero(n)).add_term(x.0.clone(), v);
        }
        let mut out: Vec<(usize, Rational)> = Vec::new();
        for (w, f) in per_w {
            let reduced = self.reducer.reduce(&f)?;
            for (a, c) in reduced.terms() {
                let k = self
                    .index_of(a, &w)
                    .ok_or_else(|| Error::Invariant(format!("reduced exponent {a:?} is not a staircase monomial")))?;
                out.push((k, c.clone()));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }

    /// Dense coordinates of `u * v`.
    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dimension()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.products[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        crate::linalg::unit_vector(self.dimension(), i)
    }

    /// First basis index `i` with `1 * b_i != b_i` or `b_i * 1 != b_i`.
    pub fn check_unit(&self) -> std::result::Result<(), usize> {
        let u = self.unit_index();
        for i in 0..self.dimension() {
            let expected = [(i, Rational::one())];
            if self.products[u][i] != expected || self.products[i][u] != expected {
                return Err(i);
            }
        }
        Ok(())
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` for the given triples; returns the first failure.
    pub fn check_associativity(
        &self,
        triples: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> std::result::Result<(), (usize, usize, usize)> {
        for (i, j, k) in triples {
            let left = self.multiply(&self.sparse_to_dense(&self.products[i][j]), &self.basis_vector(k));
            let right = self.multiply(&self.basis_vector(i), &self.sparse_to_dense(&self.products[j][k]));
            if left != right {
                return Err((i, j, k));
            }
        }
        Ok(())
    }

    /// Exhaustive associativity check over all basis triples.
    pub fn check_associativity_all(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let d = self.dimension();
        self.check_associativity((0..d).flat_map(move |i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k)))))
    }

    pub fn sparse_to_dense(&self, v: &[(usize, Rational)]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dimension()];
        for (k, c) in v {
            out[*k] = c.clone();
        }
        out
    }

    pub fn to_doc(&self) -> TruncatedAlgebraDoc {
        let mut structure = Vec::new();
        for (i, row) in self.products.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                for (k, c) in entry {
                    structure.push((i, j, *k, fmt_rational(c)));
                }
            }
        }
        TruncatedAlgebraDoc {
            n: self.rank(),
            s: self.character.point.s().iter().map(fmt_rational).collect(),
            q0: fmt_rational(&self.character.q0),
            dimension: self.dimension(),
            basis: self.basis.iter().map(|b| BasisDoc { a: b.a.clone(), w: b.w.one_line() }).collect(),
            structure,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisDoc {
    pub a: Vec<i32>,
    pub w: Vec<usize>,
}

/// JSON form. `structure` lists `[i, j, k, "c"]`: the coefficient of `b_k` in `b_i b_j`.
#[derive(Clone, Debug, Serialize)]
pub struct TruncatedAlgebraDoc {
    pub n: usize,
    pub s: Vec<String>,
    pub q0: String,
    pub dimension: usize,
    pub basis: Vec<BasisDoc>,
    pub structure: Vec<(usize, usize, usize, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn character_examples() {
        let c = central_character(&SemisimplePoint::from_ints(&[1, 2], 4).unwrap()).unwrap();
        assert_eq!(c.values, vec![r(3), r(2)]);
        assert_eq!(c.q0, r(4));
        let c = central_character(&SemisimplePoint::from_ints(&[1, 1], 9).unwrap()).unwrap();
        assert_eq!(c.values, vec![r(2), r(1)]);
    }

    #[test]
    fn rank_two_truncation() {
        let p = SemisimplePoint::from_ints(&[1, 2], 4).unwrap();
        let t = truncated_algebra(&p).unwrap();
        assert_eq!(t.dimension(), 4);
        assert!(t.check_unit().is_ok());
        assert!(t.check_associativity_all().is_ok());

        let theta20 = super::super::element::basis_term(Weight(vec![2, 0]), WeylElement::identity(2), r(1));
        let img = t.project(&theta20).unwrap();
        let e = WeylElement::identity(2);
        let x1 = t.index_of(&[1, 0], &e).unwrap();
        let one = t.index_of(&[0, 0], &e).unwrap();
        let mut expected = vec![(one, r(-2)), (x1, r(3))];
        expected.sort_by_key(|(k, _)| *k);
        assert_eq!(img, expected);
    }

    #[test]
    fn non_regular_rank_two() {
        let p = SemisimplePoint::from_ints(&[5, 5], 9).unwrap();
        let t = truncated_algebra(&p).unwrap();
        assert_eq!(t.dimension(), 4);
        assert!(t.check_associativity_all().is_ok());
    }

    #[test]
    fn doc_is_sorted_and_complete() {
        let p = SemisimplePoint::from_ints(&[1, 2], 4).unwrap();
        let doc = truncated_algebra(&p).unwrap().to_doc();
        assert_eq!(doc.basis.len(), 4);
        let mut sorted = doc.structure.clone();
        sorted.sort_by_key(|(i, j, k, _)| (*i, *j, *k));
        assert_eq!(sorted, doc.structure);
    }
}
