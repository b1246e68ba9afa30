use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::cells::{cell_inventory, CellInventory};
use super::datum::SpringerDatum;
use crate::combinat::SemisimplePoint;
use crate::scalar::pow;
use crate::{fmt_rational, Error, Rational, Result};

/// `dim Hom^k(S^i, S^j)` for every component pair, read off the cells via
/// `Hom^k ≅ H_{d_i + d_j - k}(Z^{ij})`, i.e. `k = d_i + d_j - 2m` for a cell of dimension `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub component_dims: Vec<usize>,
    pub entries: BTreeMap<(usize, usize, i64), usize>,
}

impl ExtTable {
    pub fn get(&self, i: usize, j: usize, k: i64) -> usize {
        self.entries.get(&(i, j, k)).copied().unwrap_or(0)
    }

    /// `k -> sum_{i,j} dim Hom^k(S^i, S^j)`.
    pub fn graded(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for ((_, _, k), v) in &self.entries {
            *out.entry(*k).or_insert(0) += v;
        }
        out
    }

    /// Graded dimensions of `Hom^*(S^i, S^i)`.
    pub fn diagonal(&self, i: usize) -> BTreeMap<i64, usize> {
        self.entries.iter().filter(|((a, b, _), _)| *a == i && *b == i).map(|((_, _, k), v)| (*k, *v)).collect()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.entries.keys().map(|(_, _, k)| *k).min()
    }

    /// Violations of `Hom^k(S^i,S^j) = Hom^k(S^j,S^i)` and of `k <= d_i + d_j`.
    ///
    /// Negative degrees are not violations: they occur whenever some
    /// `G x^B V^i -> V` is not semismall, e.g. an empty piece over a nontrivial flag variety.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (&(i, j, k), &v) in &self.entries {
            if self.get(j, i, k) != v {
                out.push(format!(
                    "dim Hom^{k}(S^{i},S^{j}) = {v} but dim Hom^{k}(S^{j},S^{i}) = {}",
                    self.get(j, i, k)
                ));
            }
            let top = (self.component_dims[i] + self.component_dims[j]) as i64;
            if k > top {
                out.push(format!("Hom^{k}(S^{i},S^{j}) nonzero above d_i + d_j = {top}"));
            }
        }
        out
    }

    pub fn to_doc(&self) -> ExtDoc {
        ExtDoc {
            entries: self.entries.iter().map(|(&(i, j, k), &dim)| ExtEntry { i, j, k, dim }).collect(),
            graded: self.graded(),
            total: self.total(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtEntry {
    pub i: usize,
    pub j: usize,
    pub k: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtDoc {
    pub entries: Vec<ExtEntry>,
    pub graded: BTreeMap<i64, usize>,
    pub total: usize,
}

pub fn ext_from_inventory(d: &SpringerDatum, inv: &CellInventory) -> ExtTable {
    let dims = d.component_dims();
    let mut entries = BTreeMap::new();
    for c in inv.cells() {
        let k = (dims[c.i] + dims[c.j]) as i64 - 2 * c.dim as i64;
        *entries.entry((c.i, c.j, k)).or_insert(0) += 1;
    }
    ExtTable { component_dims: dims, entries }
}

pub fn ext_graded_dims(d: &SpringerDatum) -> Result<ExtTable> {
    let inv = cell_inventory(d)?;
    let t = ext_from_inventory(d, &inv);
    if let Some(v) = t.violations().into_iter().next() {
        return Err(Error::Invariant(v));
    }
    Ok(t)
}

/// The Frobenius eigenvalue `q0` and, optionally, the chosen root `q0^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusScale {
    pub q0: Rational,
    pub sqrt_q: Option<Rational>,
}

impl FrobeniusScale {
    pub fn new(q0: Rational, sqrt_q: Option<Rational>) -> Result<Self> {
        if q0.is_zero() || q0.abs().is_one() {
            return Err(Error::input(format!("q0 = {q0} must not be 0, 1 or -1")));
        }
        if let Some(r) = &sqrt_q {
            if !r.is_positive() || r * r != q0 {
                return Err(Error::input(format!("sqrt_q = {r} is not the positive square root of q0 = {q0}")));
            }
        }
        Ok(FrobeniusScale { q0, sqrt_q })
    }

    pub fn of_point(p: &SemisimplePoint) -> Self {
        FrobeniusScale { q0: p.q0().clone(), sqrt_q: p.sqrt_q().cloned() }
    }

    /// `q0^{e/2}`; needs the square root when `e` is odd.
    fn half_power(&self, e: i64) -> Result<Rational> {
        if e % 2 == 0 {
            return Ok(pow(&self.q0, e / 2));
        }
        match &self.sqrt_q {
            Some(r) => Ok(pow(r, e)),
            None => Err(Error::input(format!("odd half-weight {e}/2 requires --sqrt-q"))),
        }
    }
}

/// Weights attached to the cells of dimension `m` in `Z^{ij}`.
#[derive(Clone, Debug, Serialize)]
pub struct WeightRow {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    pub k: i64,
    pub cells: usize,
    /// `q0^{-m}` on the fundamental class.
    pub homology_weight: String,
    /// `q0^{(d_i + d_j)/2}`.
    pub twist: String,
    /// `q0^{k/2}` on `Hom^k`.
    pub ext_weight: String,
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub q0: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sqrt_q: Option<String>,
    pub checked_cells: usize,
    pub rows: Vec<WeightRow>,
    pub all_consistent: bool,
}

/// Checks `q0^{-m} q0^{(d_i+d_j)/2} = q0^{k/2}` cell by cell.
pub fn frobenius_weights(d: &SpringerDatum, inv: &CellInventory, scale: &FrobeniusScale) -> Result<WeightReport> {
    let dims = d.component_dims();
    let mut rows: BTreeMap<(usize, usize, usize), WeightRow> = BTreeMap::new();
    let mut checked = 0;
    for c in inv.cells() {
        let top = (dims[c.i] + dims[c.j]) as i64;
        let m = c.dim as i64;
        let k = top - 2 * m;
        let homology = pow(&scale.q0, -m);
        let twist = scale.half_power(top)?;
        let ext = scale.half_power(k)?;
        let ok = &homology * &twist == ext;
        checked += 1;
        let row = rows.entry((c.i, c.j, c.dim)).or_insert_with(|| WeightRow {
            i: c.i,
            j: c.j,
            m: c.dim,
            k,
            cells: 0,
            homology_weight: fmt_rational(&homology),
            twist: fmt_rational(&twist),
            ext_weight: fmt_rational(&ext),
            consistent: true,
        });
        row.cells += 1;
        row.consistent &= ok;
    }
    let rows: Vec<WeightRow> = rows.into_values().collect();
    let all_consistent = rows.iter().all(|r| r.consistent);
    Ok(WeightReport {
        q0: fmt_rational(&scale.q0),
        sqrt_q: scale.sqrt_q.as_ref().map(fmt_rational),
        checked_cells: checked,
        rows,
        all_consistent,
    })
}

pub fn frobenius_weight_table(d: &SpringerDatum, scale: &FrobeniusScale) -> Result<WeightReport> {
    frobenius_weights(d, &cell_inventory(d)?, scale)
}
