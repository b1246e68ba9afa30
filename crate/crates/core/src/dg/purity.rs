use super::algebra::{fmt_vector, DgAlgebra};
use super::cohomology::{cohomology, Cohomology};
use super::errors::FormalityError;
use crate::linalg::{self, Matrix};
use crate::scalar::{pow, Scalar};
use crate::Result;

/// `A` rewritten on a basis of generalized `F`-eigenvectors, each with the
/// weight `j` of its eigenvalue `r^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct BigradedAlgebra<K> {
    pub algebra: DgAlgebra<K>,
    pub weights: Vec<i64>,
    /// `inclusion[a]` = coordinates in the original algebra of basis element `a`.
    pub inclusion: Matrix<K>,
    pub r: K,
    /// False when the original basis was already adapted and kept as is.
    pub basis_changed: bool,
}

impl<K: Scalar> BigradedAlgebra<K> {
    pub fn bidegree(&self, a: usize) -> (i32, i64) {
        (self.algebra.degrees[a], self.weights[a])
    }
}

fn check_parameter<K: Scalar>(r: &K) -> Result<(), FormalityError> {
    if r.is_zero() || r.abs().is_one() {
        return Err(FormalityError::BadParameter { r: r.to_string() });
    }
    Ok(())
}

/// Checks that `H^i(F)` is multiplication by `r^i` on every `H^i`.
pub fn purity_check<K: Scalar>(a: &DgAlgebra<K>, r: &K) -> Result<Cohomology<K>> {
    a.validate()?;
    check_parameter(r)?;
    if a.automorphism.is_none() {
        return Err(FormalityError::MissingAutomorphism.into());
    }
    let h = cohomology(a);
    for part in &h.degrees {
        let expected = pow(r, part.degree as i64);
        for (k, rep) in part.representatives.iter().enumerate() {
            let image = a.apply_f(rep).expect("automorphism present");
            let class =
                part.class_of(&image).ok_or_else(|| FormalityError::invariant("F of a cocycle is not a cocycle"))?;
            let want = linalg::scale_vec(&linalg::unit_vector(part.dim(), k), &expected);
            if class != want {
                let labels: Vec<String> = (0..part.dim()).map(|m| format!("[h{}_{m}]", part.degree)).collect();
                return Err(FormalityError::NotPure {
                    degree: part.degree,
                    representative: a.fmt(rep),
                    expected: expected.to_string(),
                    found: fmt_vector(&labels, &class),
                }
                .into());
            }
        }
    }
    Ok(h)
}

/// Largest `j` with `g^j <= bound`, for `g > 1` and `bound > 0`.
fn floor_log<K: Scalar>(g: &K, bound: &K) -> i64 {
    let mut j = 0;
    let mut p = K::one();
    if p <= *bound {
        loop {
            let next = p.clone() * g.clone();
            if next > *bound {
                return j;
            }
            p = next;
            j += 1;
        }
    }
    while p > *bound {
        p = p / g.clone();
        j -= 1;
    }
    j
}

/// The exponents `j` with `|r^j| <= |||M|||` and `|r^{-j}| <= |||M^{-1}|||`,
/// which contain every `j` with `r^j` an eigenvalue of `M`.
fn exponent_window<K: Scalar>(r: &K, norm: &K, inv_norm: &K) -> (i64, i64) {
    let a = r.abs();
    if a > K::one() {
        (-floor_log(&a, inv_norm), floor_log(&a, norm))
    } else {
        let g = K::one() / a;
        (-floor_log(&g, norm), floor_log(&g, inv_norm))
    }
}

fn mat_pow<K: Scalar>(m: &Matrix<K>, e: usize) -> Matrix<K> {
    let mut out = linalg::identity(m.len());
    for _ in 0..e {
        out = linalg::mat_mul(&out, m);
    }
    out
}

/// Purity check, then the generalized eigenspace decomposition of `F` in
/// every degree into eigenvalues `r^j`.
pub fn purity_check_and_bigrade<K: Scalar>(a: &DgAlgebra<K>, r: &K) -> Result<BigradedAlgebra<K>> {
    purity_check(a, r)?;
    let n = a.dim();
    let f = a.automorphism.as_ref().expect("checked by purity_check");

    // per degree: new basis vectors (full coordinates) with weights
    let mut changed = false;
    let mut blocks: Vec<(i32, Vec<(Vec<K>, i64)>)> = Vec::new();
    for i in a.degree_list() {
        let idx = a.indices_in_degree(i);
        let m = idx.len();
        // local matrix acting on column vectors: entry (row k, col l) = coefficient of e_k in F(e_l)
        let local: Matrix<K> = idx.iter().map(|&k| idx.iter().map(|&l| f[l][k].clone()).collect()).collect();
        let inv = linalg::inverse(&local).ok_or_else(|| FormalityError::invariant("F not invertible on a degree"))?;
        let (lo, hi) = exponent_window(r, &linalg::inf_norm(&local), &linalg::inf_norm(&inv));
        let mut spaces: Vec<(i64, Matrix<K>, Vec<Vec<K>>)> = Vec::new();
        let mut found = 0;
        for j in lo..=hi {
            let lambda = pow(r, j);
            let mut shifted = local.clone();
            for (k, row) in shifted.iter_mut().enumerate() {
                row[k] = row[k].clone() - lambda.clone();
            }
            let power = mat_pow(&shifted, m);
            let ker = linalg::kernel(&power, m);
            if !ker.is_empty() {
                found += ker.len();
                spaces.push((j, power, ker));
            }
        }
        let lift = |local_v: &[K]| {
            let mut v = vec![K::zero(); n];
            for (x, &k) in local_v.iter().zip(&idx) {
                v[k] = x.clone();
            }
            v
        };
        if found < m {
            let mut prod = linalg::identity(m);
            for (_, power, _) in &spaces {
                prod = linalg::mat_mul(power, &prod);
            }
            let columns = linalg::transpose(&prod, m);
            let residual = linalg::span_basis(&columns).iter().map(|v| a.fmt(&lift(v))).collect();
            return Err(FormalityError::Spectral { degree: i, window_low: lo, window_high: hi, residual }.into());
        }

        let weight_of =
            |l: usize| spaces.iter().find(|(_, power, _)| power.iter().all(|row| row[l].is_zero())).map(|(j, _, _)| *j);
        let kept: Option<Vec<i64>> = (0..m).map(weight_of).collect();
        let vectors: Vec<(Vec<K>, i64)> = match kept {
            Some(ws) => idx.iter().zip(ws).map(|(&k, j)| (a.basis_vector(k), j)).collect(),
            None => {
                changed = true;
                let mut out = Vec::new();
                for (j, _, ker) in &spaces {
                    let mut vs: Vec<Vec<K>> = ker.iter().map(|v| lift(v)).collect();
                    let unit = a.unit_vector();
                    if a.degrees[a.unit] == i && linalg::rank(&[vs.clone(), vec![unit.clone()]].concat()) == vs.len() {
                        let picks = linalg::extend_basis(std::slice::from_ref(&unit), &vs);
                        vs = std::iter::once(unit).chain(picks.into_iter().map(|p| vs[p].clone())).collect();
                    }
                    out.extend(vs.into_iter().map(|v| (v, *j)));
                }
                out
            }
        };
        blocks.push((i, vectors));
    }

    let (basis, weights): (Vec<Vec<K>>, Vec<i64>) = if changed {
        blocks.iter().flat_map(|(_, vs)| vs.iter().cloned()).unzip()
    } else {
        let mut w = vec![0; n];
        for (_, vs) in &blocks {
            for (v, j) in vs {
                let k = v.iter().position(|x| !x.is_zero()).expect("basis vector");
                w[k] = *j;
            }
        }
        ((0..n).map(|k| a.basis_vector(k)).collect(), w)
    };

    let algebra = if changed { rebase(a, &basis, &weights)? } else { a.clone() };
    let out = BigradedAlgebra { algebra, weights, inclusion: basis, r: r.clone(), basis_changed: changed };
    check_bigrading(&out)?;
    Ok(out)
}

/// The same algebra on the basis `basis` (given in old coordinates).
fn rebase<K: Scalar>(a: &DgAlgebra<K>, basis: &[Vec<K>], weights: &[i64]) -> Result<DgAlgebra<K>> {
    let n = a.dim();
    let p_std = linalg::transpose(&basis.to_vec(), n);
    let q = linalg::inverse(&p_std).ok_or_else(|| FormalityError::invariant("eigenbasis is not a basis"))?;
    let coords = |v: &[K]| linalg::mat_vec(&q, v);
    let degrees: Vec<i32> =
        basis.iter().map(|v| a.degrees[v.iter().position(|x| !x.is_zero()).expect("nonzero basis vector")]).collect();
    let mut counters = std::collections::BTreeMap::new();
    let names: Vec<String> = basis
        .iter()
        .zip(degrees.iter().zip(weights))
        .map(|(v, (i, j))| {
            let nz: Vec<usize> = (0..n).filter(|&k| !v[k].is_zero()).collect();
            if nz.len() == 1 && v[nz[0]].is_one() {
                return a.names[nz[0]].clone();
            }
            let c = counters.entry((*i, *j)).or_insert(0);
            *c += 1;
            format!("u{i}_{j}_{c}")
        })
        .collect();
    let unit = basis
        .iter()
        .position(|v| *v == a.unit_vector())
        .ok_or_else(|| FormalityError::invariant("unit is not an eigenbasis vector"))?;
    let products = basis.iter().map(|u| basis.iter().map(|v| coords(&a.mul(u, v))).collect()).collect();
    let differential = basis.iter().map(|u| coords(&a.d(u))).collect();
    let automorphism = basis.iter().map(|u| coords(&a.apply_f(u).expect("automorphism present"))).collect();
    Ok(DgAlgebra { names, degrees, unit, products, differential, automorphism: Some(automorphism) })
}

fn check_bigrading<K: Scalar>(b: &BigradedAlgebra<K>) -> Result<(), FormalityError> {
    let a = &b.algebra;
    let n = a.dim();
    let weight_ok = |v: &[K], j: i64| v.iter().zip(&b.weights).all(|(x, &w)| x.is_zero() || w == j);
    for x in 0..n {
        if !weight_ok(&a.differential[x], b.weights[x]) {
            return Err(FormalityError::invariant(format!("d does not preserve the weight of {}", a.names[x])));
        }
        for y in 0..n {
            if !weight_ok(&a.products[x][y], b.weights[x] + b.weights[y]) {
                return Err(FormalityError::invariant(format!(
                    "weights not additive on ({}, {})",
                    a.names[x], a.names[y]
                )));
            }
        }
    }
    Ok(())
}
