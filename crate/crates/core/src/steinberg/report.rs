use std::collections::BTreeMap;

use serde::Serialize;

use super::cells::{cell_inventory, Cell, CellInventory};
use super::datum::{fixed_point_datum, DatumDoc, SpringerDatum};
use super::ext::{ext_from_inventory, frobenius_weights, ExtDoc, FrobeniusScale, WeightReport};
use crate::combinat::{symmetric_group, SemisimplePoint};
use crate::hecke::truncated_algebra;
use crate::{fmt_rational, Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct CellDoc {
    pub i: usize,
    pub j: usize,
    pub w: Vec<usize>,
    pub y: Vec<usize>,
    pub fiber: usize,
    pub dim: usize,
}

impl From<&Cell> for CellDoc {
    fn from(c: &Cell) -> Self {
        CellDoc { i: c.i, j: c.j, w: c.w.one_line(), y: c.y.one_line(), fiber: c.fiber, dim: c.dim }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PoincareDoc {
    pub i: usize,
    pub j: usize,
    /// `m -> dim H_{2m}(Z^{ij})`.
    pub dims: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Totals {
    pub components: usize,
    pub cells: usize,
    pub homology: usize,
    pub ext: usize,
    pub hom0: usize,
}

/// Everything computed from one datum, ready for serialization.
#[derive(Clone, Debug, Serialize)]
pub struct SteinbergReport {
    pub datum: DatumDoc,
    pub cells: Vec<CellDoc>,
    pub poincare: Vec<PoincareDoc>,
    pub ext: ExtDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightReport>,
    pub totals: Totals,
    /// Problems found in the Ext table (symmetry, degree range).
    pub violations: Vec<String>,
}

impl SteinbergReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.weights.as_ref().is_none_or(|w| w.all_consistent)
    }
}

pub fn steinberg_report(d: &SpringerDatum, scale: Option<&FrobeniusScale>) -> Result<SteinbergReport> {
    let inv = cell_inventory(d)?;
    build_report(d, &inv, scale)
}

fn build_report(d: &SpringerDatum, inv: &CellInventory, scale: Option<&FrobeniusScale>) -> Result<SteinbergReport> {
    let ext = ext_from_inventory(d, inv);
    let weights = scale.map(|s| frobenius_weights(d, inv, s)).transpose()?;
    let totals = Totals {
        components: d.pieces.len(),
        cells: inv.len(),
        homology: inv.pairs.iter().map(|p| p.poincare.values().sum::<usize>()).sum(),
        ext: ext.total(),
        hom0: ext.graded().get(&0).copied().unwrap_or(0),
    };
    Ok(SteinbergReport {
        datum: d.to_doc(),
        cells: inv.cells().map(CellDoc::from).collect(),
        poincare: inv.pairs.iter().map(|p| PoincareDoc { i: p.i, j: p.j, dims: p.poincare.clone() }).collect(),
        violations: ext.violations(),
        ext: ext.to_doc(),
        weights,
        totals,
    })
}

/// Geometric and algebraic sides of the dimension identity at one point `(s, q0)`.
#[derive(Clone, Debug, Serialize)]
pub struct DlcReport {
    pub n: usize,
    pub s: Vec<String>,
    pub q0: String,
    /// `|J| = |W| / |W(s)|`.
    pub components: usize,
    pub centralizer_order: usize,
    pub geometric_total: usize,
    pub algebraic_total: usize,
    pub equal: bool,
    /// `|J|^2 |W(s)|^2 = |W|^2`, asserted from the cell count alone.
    pub cell_count_identity: bool,
    pub graded: BTreeMap<i64, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightReport>,
    pub violations: Vec<String>,
}

impl DlcReport {
    pub fn ok(&self) -> bool {
        self.equal
            && self.cell_count_identity
            && self.violations.is_empty()
            && self.weights.as_ref().is_none_or(|w| w.all_consistent)
    }
}

/// Builds the fixed-point datum at `p`, counts Ext dimensions by cells, and
/// compares the total with the dimension of the truncated Hecke algebra at `p`.
pub fn dlc_report(p: &SemisimplePoint) -> Result<DlcReport> {
    let d = fixed_point_datum(p)?;
    let inv = cell_inventory(&d)?;
    let scale = p.sqrt_q().map(|_| FrobeniusScale::of_point(p));
    let geo = build_report(&d, &inv, scale.as_ref())?;
    let alg = truncated_algebra(p)?;
    let w_order = symmetric_group(p.rank())?.order();
    if d.pieces.len() * d.group.len() != w_order {
        return Err(Error::Invariant(format!(
            "{} components times |W(s)| = {} is not |W| = {w_order}",
            d.pieces.len(),
            d.group.len()
        )));
    }
    Ok(DlcReport {
        n: p.rank(),
        s: p.s().iter().map(fmt_rational).collect(),
        q0: fmt_rational(p.q0()),
        components: d.pieces.len(),
        centralizer_order: d.group.len(),
        geometric_total: geo.totals.ext,
        algebraic_total: alg.dimension(),
        equal: geo.totals.ext == alg.dimension(),
        cell_count_identity: inv.len() == w_order * w_order,
        graded: geo.ext.graded,
        weights: geo.weights,
        violations: geo.violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steinberg::nilpotent_datum;
    use crate::Rational;

    #[test]
    fn dlc_rank_two() {
        let r = dlc_report(&SemisimplePoint::from_ints(&[1, 2], 2).unwrap()).unwrap();
        assert_eq!((r.geometric_total, r.algebraic_total), (4, 4));
        assert!(r.ok());
        assert_eq!(r.graded, BTreeMap::from([(0, 2), (1, 2)]));
        assert_eq!(r.components, 2);

        let r = dlc_report(&SemisimplePoint::from_ints(&[7, 7], 3).unwrap()).unwrap();
        assert_eq!((r.geometric_total, r.algebraic_total, r.components), (4, 4, 1));
        assert!(r.ok());
    }

    #[test]
    fn weights_need_sqrt_for_odd_halves() {
        let p = SemisimplePoint::from_ints(&[1, 2], 4).unwrap().with_sqrt_q(Rational::from_integer(2.into())).unwrap();
        let r = dlc_report(&p).unwrap();
        assert!(r.weights.as_ref().unwrap().all_consistent);
    }

    #[test]
    fn nilpotent_report_totals() {
        let rep = steinberg_report(&nilpotent_datum(2).unwrap(), None).unwrap();
        assert_eq!((rep.totals.cells, rep.totals.ext, rep.totals.hom0), (4, 4, 2));
        assert!(rep.ok());
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"poincare\""));
    }
}
