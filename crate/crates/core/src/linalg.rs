//! Dense exact linear algebra: reduced row echelon form, kernels, images, solves.
//!
//! Vectors are `Vec<K>`; a matrix is a list of rows. Pivots are always chosen
//! as the first nonzero entry in the leftmost usable column, so every output
//! is a deterministic function of the input.

use crate::scalar::Scalar;

pub type Matrix<K> = Vec<Vec<K>>;

pub fn zeros<K: Scalar>(rows: usize, cols: usize) -> Matrix<K> {
    vec![vec![K::zero(); cols]; rows]
}

pub fn identity<K: Scalar>(n: usize) -> Matrix<K> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = K::one();
    }
    m
}

pub fn unit_vector<K: Scalar>(n: usize, i: usize) -> Vec<K> {
    let mut v = vec![K::zero(); n];
    v[i] = K::one();
    v
}

pub fn is_zero_vec<K: Scalar>(v: &[K]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `v += c * w`
pub fn axpy<K: Scalar>(v: &mut [K], c: &K, w: &[K]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero() {
            *a = a.clone() + c.clone() * b.clone();
        }
    }
}

pub fn sub_vec<K: Scalar>(v: &[K], w: &[K]) -> Vec<K> {
    v.iter().zip(w).map(|(a, b)| a.clone() - b.clone()).collect()
}

pub fn scale_vec<K: Scalar>(v: &[K], c: &K) -> Vec<K> {
    v.iter().map(|a| a.clone() * c.clone()).collect()
}

pub fn mat_vec<K: Scalar>(m: &Matrix<K>, v: &[K]) -> Vec<K> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(K::zero(), |acc, (a, b)| {
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a.clone() * b.clone()
                }
            })
        })
        .collect()
}

pub fn mat_mul<K: Scalar>(a: &Matrix<K>, b: &Matrix<K>) -> Matrix<K> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if !x.is_zero() {
                axpy(&mut out[i], x, &b[k]);
            }
        }
    }
    out
}

pub fn transpose<K: Scalar>(m: &Matrix<K>, cols: usize) -> Matrix<K> {
    let mut out = zeros(cols, m.len());
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out[j][i] = x.clone();
        }
    }
    out
}

/// Row-reduces `m` in place to reduced row echelon form; returns pivot columns.
pub fn rref<K: Scalar>(m: &mut Matrix<K>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = K::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[r].clone();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = -m[i][c].clone();
                axpy(&mut m[i], &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the span of the given vectors.
pub fn rank<K: Scalar>(vectors: &[Vec<K>]) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : m v = 0}` for an `rows x cols` matrix, one vector per free column.
pub fn kernel<K: Scalar>(m: &Matrix<K>, cols: usize) -> Vec<Vec<K>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![K::zero(); cols];
            v[f] = K::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Reduced echelon basis of the span of the given vectors.
pub fn span_basis<K: Scalar>(vectors: &[Vec<K>]) -> Vec<Vec<K>> {
    let mut m = vectors.to_vec();
    let r = rref(&mut m).len();
    m.truncate(r);
    m
}

/// Indices of candidates that, taken greedily in order, extend `base` to a
/// linearly independent family.
pub fn extend_basis<K: Scalar>(base: &[Vec<K>], candidates: &[Vec<K>]) -> Vec<usize> {
    let mut current: Vec<Vec<K>> = base.to_vec();
    let mut r = rank(&current);
    let mut chosen = Vec::new();
    for (k, v) in candidates.iter().enumerate() {
        current.push(v.clone());
        let r2 = rank(&current);
        if r2 > r {
            r = r2;
            chosen.push(k);
        } else {
            current.pop();
        }
    }
    chosen
}

/// Coefficients `c` with `sum c_k vectors[k] = target`, if the target lies in
/// the span. `vectors` must be linearly independent for uniqueness.
pub fn solve_in_span<K: Scalar>(vectors: &[Vec<K>], target: &[K]) -> Option<Vec<K>> {
    let dim = target.len();
    let k = vectors.len();
    // augmented system: columns are the vectors, last column the target
    let mut m: Matrix<K> = (0..dim)
        .map(|i| {
            let mut row: Vec<K> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut sol = vec![K::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        sol[p] = m[row][k].clone();
    }
    Some(sol)
}

pub fn inverse<K: Scalar>(m: &Matrix<K>) -> Option<Matrix<K>> {
    let n = m.len();
    let mut aug: Matrix<K> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vector::<K>(n, i));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Maximum absolute row sum.
pub fn inf_norm<K: Scalar>(m: &Matrix<K>) -> K {
    m.iter().map(|row| row.iter().fold(K::zero(), |acc, x| acc + x.abs())).fold(K::zero(), |acc, s| {
        if s > acc {
            s
        } else {
            acc
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn kernel_and_rank() {
        let m = vec![q(&[1, 2, 3]), q(&[2, 4, 6])];
        assert_eq!(rank(&m), 1);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&mat_vec(&m, v)));
        }
    }

    #[test]
    fn solve_and_invert() {
        let basis = vec![q(&[1, 1, 0]), q(&[0, 1, 1])];
        assert_eq!(solve_in_span(&basis, &q(&[2, 5, 3])).unwrap(), q(&[2, 3]));
        assert!(solve_in_span(&basis, &q(&[1, 0, 0])).is_none());
        let m = vec![q(&[2, 1]), q(&[1, 1])];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert!(inverse(&vec![q(&[1, 2]), q(&[2, 4])]).is_none());
    }

    #[test]
    fn greedy_extension() {
        let base = vec![q(&[1, 0, 0])];
        let cands = vec![q(&[2, 0, 0]), q(&[0, 1, 0]), q(&[1, 1, 0]), q(&[0, 0, 1])];
        assert_eq!(extend_basis(&base, &cands), vec![1, 3]);
    }
}
