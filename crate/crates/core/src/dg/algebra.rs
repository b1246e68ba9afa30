use super::errors::{Axiom, ValidationError};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// A finite-dimensional dg-algebra on a named, homogeneous basis.
///
/// Linear maps are stored by images: `differential[a]` is the coordinate
/// vector of `d(e_a)`, and likewise for `automorphism`.
#[derive(Clone, Debug, PartialEq)]
pub struct DgAlgebra<K> {
    pub names: Vec<String>,
    pub degrees: Vec<i32>,
    pub unit: usize,
    /// `products[a][b]` = coordinates of `e_a e_b`.
    pub products: Vec<Vec<Vec<K>>>,
    pub differential: Matrix<K>,
    pub automorphism: Option<Matrix<K>>,
}

/// `sum_a v_a images[a]`.
pub fn apply_images<K: Scalar>(images: &[Vec<K>], v: &[K], target_dim: usize) -> Vec<K> {
    let mut out = vec![K::zero(); target_dim];
    for (c, img) in v.iter().zip(images) {
        linalg::axpy(&mut out, c, img);
    }
    out
}

/// Renders `v` as a combination of the given names, e.g. `"2 a - 1/2 b"`.
pub fn fmt_vector<K: Scalar>(names: &[String], v: &[K]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl<K: Scalar> DgAlgebra<K> {
    /// The algebra with the given basis, `e_unit` acting as unit, every other
    /// product zero, `d = 0` and no automorphism.
    pub fn new(names: Vec<String>, degrees: Vec<i32>, unit: usize) -> Self {
        let n = names.len();
        assert_eq!(n, degrees.len(), "one degree per basis element");
        assert!(unit < n, "unit index out of range");
        let mut products = vec![vec![vec![K::zero(); n]; n]; n];
        for b in 0..n {
            products[unit][b] = linalg::unit_vector(n, b);
            products[b][unit] = linalg::unit_vector(n, b);
        }
        DgAlgebra { names, degrees, unit, products, differential: linalg::zeros(n, n), automorphism: None }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Distinct degrees, ascending.
    pub fn degree_list(&self) -> Vec<i32> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn indices_in_degree(&self, i: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.degrees[a] == i).collect()
    }

    pub fn basis_vector(&self, a: usize) -> Vec<K> {
        linalg::unit_vector(self.dim(), a)
    }

    pub fn unit_vector(&self) -> Vec<K> {
        self.basis_vector(self.unit)
    }

    pub fn set_product(&mut self, a: usize, b: usize, terms: &[(usize, K)]) {
        self.products[a][b] = self.sparse(terms);
    }

    pub fn set_differential(&mut self, a: usize, terms: &[(usize, K)]) {
        self.differential[a] = self.sparse(terms);
    }

    /// Sets `F` to the given images; unlisted basis elements are fixed.
    pub fn set_automorphism(&mut self, images: &[(usize, Vec<(usize, K)>)]) {
        let mut m = linalg::identity(self.dim());
        for (a, terms) in images {
            m[*a] = self.sparse(terms);
        }
        self.automorphism = Some(m);
    }

    /// `F = r^{deg}` on every basis element.
    pub fn set_degree_automorphism(&mut self, r: &K) {
        let n = self.dim();
        let mut m = linalg::zeros(n, n);
        for a in 0..n {
            m[a][a] = crate::scalar::pow(r, self.degrees[a] as i64);
        }
        self.automorphism = Some(m);
    }

    fn sparse(&self, terms: &[(usize, K)]) -> Vec<K> {
        let mut v = vec![K::zero(); self.dim()];
        for (c, x) in terms {
            v[*c] = v[*c].clone() + x.clone();
        }
        v
    }

    pub fn mul(&self, u: &[K], v: &[K]) -> Vec<K> {
        let n = self.dim();
        let mut out = vec![K::zero(); n];
        for (a, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                linalg::axpy(&mut out, &(x.clone() * y.clone()), &self.products[a][b]);
            }
        }
        out
    }

    pub fn d(&self, v: &[K]) -> Vec<K> {
        apply_images(&self.differential, v, self.dim())
    }

    pub fn apply_f(&self, v: &[K]) -> Option<Vec<K>> {
        self.automorphism.as_ref().map(|f| apply_images(f, v, self.dim()))
    }

    pub fn fmt(&self, v: &[K]) -> String {
        fmt_vector(&self.names, v)
    }

    /// Whether `v` lies in degree `i`.
    pub fn is_homogeneous(&self, v: &[K], i: i32) -> bool {
        v.iter().zip(&self.degrees).all(|(x, &d)| x.is_zero() || d == i)
    }

    fn fail(&self, axiom: Axiom, witness: &[usize], detail: String) -> ValidationError {
        ValidationError { axiom, witness: witness.iter().map(|&a| self.names[a].clone()).collect(), detail }
    }

    /// Checks every axiom exactly, in the order of [`Axiom`], and reports the first failure.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let n = self.dim();
        let shape = |detail: String| ValidationError { axiom: Axiom::Shape, witness: Vec::new(), detail };
        if self.degrees.len() != n {
            return Err(shape(format!("{} names but {} degrees", n, self.degrees.len())));
        }
        if self.unit >= n {
            return Err(shape(format!("unit index {} out of range", self.unit)));
        }
        for a in 0..n {
            if self.names[..a].contains(&self.names[a]) {
                return Err(self.fail(Axiom::Shape, &[a], "duplicate basis name".into()));
            }
        }
        let square = |m: &Matrix<K>| m.len() == n && m.iter().all(|row| row.len() == n);
        if self.products.len() != n || !self.products.iter().all(square) {
            return Err(shape("product table is not n x n x n".into()));
        }
        if !square(&self.differential) {
            return Err(shape("differential is not n x n".into()));
        }
        if self.automorphism.as_ref().is_some_and(|f| !square(f)) {
            return Err(shape("automorphism is not n x n".into()));
        }

        if self.degrees[self.unit] != 0 {
            return Err(self.fail(
                Axiom::UnitDegree,
                &[self.unit],
                format!("unit has degree {}", self.degrees[self.unit]),
            ));
        }

        for a in 0..n {
            for b in 0..n {
                let want = self.degrees[a] + self.degrees[b];
                if !self.is_homogeneous(&self.products[a][b], want) {
                    return Err(self.fail(
                        Axiom::ProductDegree,
                        &[a, b],
                        format!("product {} is not homogeneous of degree {want}", self.fmt(&self.products[a][b])),
                    ));
                }
            }
        }

        for b in 0..n {
            let e = self.basis_vector(b);
            if self.products[self.unit][b] != e || self.products[b][self.unit] != e {
                return Err(self.fail(Axiom::UnitLaw, &[b], "unit does not act as identity".into()));
            }
        }

        for a in 0..n {
            for b in 0..n {
                let ab = &self.products[a][b];
                for c in 0..n {
                    let mut left = vec![K::zero(); n];
                    for (k, x) in ab.iter().enumerate() {
                        linalg::axpy(&mut left, x, &self.products[k][c]);
                    }
                    let mut right = vec![K::zero(); n];
                    for (k, x) in self.products[b][c].iter().enumerate() {
                        linalg::axpy(&mut right, x, &self.products[a][k]);
                    }
                    if left != right {
                        return Err(self.fail(
                            Axiom::Associativity,
                            &[a, b, c],
                            format!("(ab)c = {} but a(bc) = {}", self.fmt(&left), self.fmt(&right)),
                        ));
                    }
                }
            }
        }

        for a in 0..n {
            if !self.is_homogeneous(&self.differential[a], self.degrees[a] + 1) {
                return Err(self.fail(
                    Axiom::DifferentialDegree,
                    &[a],
                    format!("d = {} is not of degree {}", self.fmt(&self.differential[a]), self.degrees[a] + 1),
                ));
            }
        }

        for a in 0..n {
            let dd = self.d(&self.differential[a]);
            if !linalg::is_zero_vec(&dd) {
                return Err(self.fail(Axiom::DifferentialSquare, &[a], format!("d(d) = {}", self.fmt(&dd))));
            }
        }

        for a in 0..n {
            for b in 0..n {
                let lhs = self.d(&self.products[a][b]);
                let mut rhs = self.mul(&self.differential[a], &self.basis_vector(b));
                let sign = if self.degrees[a].rem_euclid(2) == 0 { K::one() } else { -K::one() };
                linalg::axpy(&mut rhs, &sign, &self.mul(&self.basis_vector(a), &self.differential[b]));
                if lhs != rhs {
                    return Err(self.fail(
                        Axiom::Leibniz,
                        &[a, b],
                        format!("d(ab) = {} but d(a)b ± a d(b) = {}", self.fmt(&lhs), self.fmt(&rhs)),
                    ));
                }
            }
        }

        if let Some(f) = &self.automorphism {
            for a in 0..n {
                if !self.is_homogeneous(&f[a], self.degrees[a]) {
                    return Err(self.fail(
                        Axiom::AutomorphismDegree,
                        &[a],
                        format!("F = {} changes degree", self.fmt(&f[a])),
                    ));
                }
            }
            if f[self.unit] != self.unit_vector() {
                return Err(self.fail(
                    Axiom::AutomorphismUnit,
                    &[self.unit],
                    format!("F(1) = {}", self.fmt(&f[self.unit])),
                ));
            }
            for a in 0..n {
                for b in 0..n {
                    let lhs = apply_images(f, &self.products[a][b], n);
                    let rhs = self.mul(&f[a], &f[b]);
                    if lhs != rhs {
                        return Err(self.fail(
                            Axiom::AutomorphismMultiplicative,
                            &[a, b],
                            format!("F(ab) = {} but F(a)F(b) = {}", self.fmt(&lhs), self.fmt(&rhs)),
                        ));
                    }
                }
            }
            for a in 0..n {
                let fd = apply_images(f, &self.differential[a], n);
                let df = self.d(&f[a]);
                if fd != df {
                    return Err(self.fail(
                        Axiom::AutomorphismCommutesWithD,
                        &[a],
                        format!("F(d) = {} but d(F) = {}", self.fmt(&fd), self.fmt(&df)),
                    ));
                }
            }
            if linalg::rank(f) < n {
                return Err(ValidationError {
                    axiom: Axiom::AutomorphismInvertible,
                    witness: Vec::new(),
                    detail: format!("F has rank {} < {n}", linalg::rank(f)),
                });
            }
        }
        Ok(())
    }
}
