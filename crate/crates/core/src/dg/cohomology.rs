use std::collections::BTreeMap;

use super::algebra::DgAlgebra;
use crate::linalg;
use crate::scalar::Scalar;

/// Cocycles, coboundaries and chosen class representatives in one degree,
/// all as coordinate vectors on the full basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeCohomology<K> {
    pub degree: i32,
    pub cocycles: Vec<Vec<K>>,
    pub boundaries: Vec<Vec<K>>,
    pub representatives: Vec<Vec<K>>,
}

impl<K: Scalar> DegreeCohomology<K> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of the cocycle `v` on the representatives;
    /// `None` if `v` is not a cocycle of this degree.
    pub fn class_of(&self, v: &[K]) -> Option<Vec<K>> {
        let mut span = self.representatives.clone();
        span.extend(self.boundaries.iter().cloned());
        let c = linalg::solve_in_span(&span, v)?;
        Some(c[..self.representatives.len()].to_vec())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cohomology<K> {
    /// One entry per degree occurring in the basis, ascending.
    pub degrees: Vec<DegreeCohomology<K>>,
}

impl<K: Scalar> Cohomology<K> {
    pub fn in_degree(&self, i: i32) -> Option<&DegreeCohomology<K>> {
        self.degrees.iter().find(|h| h.degree == i)
    }

    /// `i -> dim H^i` over the degrees where it is nonzero.
    pub fn graded_dims(&self) -> BTreeMap<i32, usize> {
        self.degrees.iter().filter(|h| h.dim() > 0).map(|h| (h.degree, h.dim())).collect()
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().map(DegreeCohomology::dim).sum()
    }

    pub fn class_of(&self, i: i32, v: &[K]) -> Option<Vec<K>> {
        match self.in_degree(i) {
            Some(h) => h.class_of(v),
            None => linalg::is_zero_vec(v).then(Vec::new),
        }
    }
}

/// Cohomology with representatives chosen greedily: first from the unit, then
/// from the echelon kernel basis of each `d_i`.
pub fn cohomology<K: Scalar>(a: &DgAlgebra<K>) -> Cohomology<K> {
    cohomology_preferring(a, &[a.unit_vector()])
}

/// As [`cohomology`], but the cocycles in `preferred` are tried before the
/// kernel basis when picking representatives.
pub fn cohomology_preferring<K: Scalar>(a: &DgAlgebra<K>, preferred: &[Vec<K>]) -> Cohomology<K> {
    let n = a.dim();
    let degrees = a
        .degree_list()
        .into_iter()
        .map(|i| {
            let idx = a.indices_in_degree(i);
            // columns: d of each basis element in degree i
            let m: linalg::Matrix<K> =
                (0..n).map(|c| idx.iter().map(|&k| a.differential[k][c].clone()).collect()).collect();
            let cocycles: Vec<Vec<K>> = linalg::kernel(&m, idx.len())
                .into_iter()
                .map(|local| {
                    let mut v = vec![K::zero(); n];
                    for (x, &k) in local.into_iter().zip(&idx) {
                        v[k] = x;
                    }
                    v
                })
                .collect();
            let images: Vec<Vec<K>> = a
                .indices_in_degree(i - 1)
                .into_iter()
                .map(|k| a.differential[k].clone())
                .filter(|v| !linalg::is_zero_vec(v))
                .collect();
            let boundaries = linalg::span_basis(&images);
            let mut candidates: Vec<Vec<K>> = preferred
                .iter()
                .filter(|v| !linalg::is_zero_vec(v) && a.is_homogeneous(v, i) && linalg::is_zero_vec(&a.d(v)))
                .cloned()
                .collect();
            candidates.extend(cocycles.iter().cloned());
            let representatives =
                linalg::extend_basis(&boundaries, &candidates).into_iter().map(|k| candidates[k].clone()).collect();
            DegreeCohomology { degree: i, cocycles, boundaries, representatives }
        })
        .collect();
    Cohomology { degrees }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn zero_differential_keeps_everything() {
        let a = DgAlgebra::<Rational>::new(names(&["1", "x", "y"]), vec![0, 1, 1], 0);
        let h = cohomology(&a);
        assert_eq!(h.graded_dims(), BTreeMap::from([(0, 1), (1, 2)]));
        assert_eq!(h.in_degree(0).unwrap().representatives[0], a.unit_vector());
    }

    #[test]
    fn acyclic_pair_leaves_unit() {
        let mut a = DgAlgebra::<Rational>::new(names(&["e", "a", "b"]), vec![0, 1, 2], 0);
        a.set_differential(1, &[(2, r(1))]);
        let h = cohomology(&a);
        assert_eq!(h.graded_dims(), BTreeMap::from([(0, 1)]));
        assert_eq!(h.class_of(2, &[r(0), r(0), r(5)]), Some(vec![]));
        assert_eq!(h.class_of(1, &[r(0), r(1), r(0)]), None);
    }

    #[test]
    fn direct_sum_adds_dims() {
        let mut a = DgAlgebra::<Rational>::new(names(&["e", "x", "a", "b"]), vec![0, 1, 1, 2], 0);
        a.set_differential(2, &[(3, r(1))]);
        assert_eq!(a.validate(), Ok(()));
        assert_eq!(cohomology(&a).graded_dims(), BTreeMap::from([(0, 1), (1, 1)]));
    }
}
