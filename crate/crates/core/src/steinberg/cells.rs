use std::collections::BTreeMap;

use serde::Serialize;

use super::datum::SpringerDatum;
use crate::combinat::WeylElement;
use crate::{Error, Result};

/// The cell `Z^{ij}_{w,y}`: a vector bundle with fiber `V^i ∩ w V^j` over an
/// affine fibration of dimension `l(w)` over the Schubert cell of `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
    pub w: WeylElement,
    pub y: WeylElement,
    pub fiber: usize,
    pub dim: usize,
}

/// Cells of one component pair, with the homology histogram `m -> dim H_{2m}(Z^{ij})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInventory {
    pub i: usize,
    pub j: usize,
    pub cells: Vec<Cell>,
    pub poincare: BTreeMap<usize, usize>,
}

/// Cells of every component pair in `(i, j, w, y)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellInventory {
    pub pairs: Vec<PairInventory>,
}

impl CellInventory {
    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.pairs.iter().flat_map(|p| p.cells.iter())
    }

    pub fn len(&self) -> usize {
        self.pairs.iter().map(|p| p.cells.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<&PairInventory> {
        self.pairs.iter().find(|p| p.i == i && p.j == j)
    }

    /// Histogram of cell dimensions over all pairs.
    pub fn total_poincare(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in self.cells() {
            *out.entry(c.dim).or_insert(0) += 1;
        }
        out
    }
}

/// `|V^i ∩ w V^j|`.
pub fn fiber_dim(d: &SpringerDatum, i: usize, j: usize, w: &WeylElement) -> Result<usize> {
    if i >= d.pieces.len() || j >= d.pieces.len() {
        return Err(Error::input(format!("piece index ({i}, {j}) out of range for {} pieces", d.pieces.len())));
    }
    if w.rank() != d.n || !d.contains(w) {
        return Err(Error::input(format!("{w} is not in the acting Weyl group")));
    }
    Ok(d.pieces[j].iter().filter(|r| d.pieces[i].contains(&w.act_on_root(**r))).count())
}

/// One cell per `(w, y)` in the acting group, of dimension `fiber(i, j, w) + l(w) + l(y)`.
pub fn cell_inventory_and_poincare(d: &SpringerDatum, i: usize, j: usize) -> Result<PairInventory> {
    let mut cells = Vec::with_capacity(d.group.len() * d.group.len());
    let mut poincare = BTreeMap::new();
    for w in &d.group {
        let fiber = fiber_dim(d, i, j, w)?;
        let lw = d.group_length(w);
        for y in &d.group {
            let dim = fiber + lw + d.group_length(y);
            *poincare.entry(dim).or_insert(0) += 1;
            cells.push(Cell { i, j, w: w.clone(), y: y.clone(), fiber, dim });
        }
    }
    Ok(PairInventory { i, j, cells, poincare })
}

pub fn cell_inventory(d: &SpringerDatum) -> Result<CellInventory> {
    let k = d.pieces.len();
    let mut pairs = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            pairs.push(cell_inventory_and_poincare(d, i, j)?);
        }
    }
    Ok(CellInventory { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::SemisimplePoint;
    use crate::steinberg::{fixed_point_datum, nilpotent_datum};

    #[test]
    fn fiber_examples() {
        let d = nilpotent_datum(2).unwrap();
        let e = WeylElement::identity(2);
        let s = WeylElement::simple(2, 1).unwrap();
        assert_eq!(fiber_dim(&d, 0, 0, &e).unwrap(), 1);
        assert_eq!(fiber_dim(&d, 0, 0, &s).unwrap(), 0);
        assert!(fiber_dim(&d, 0, 1, &e).is_err());

        let d = fixed_point_datum(&SemisimplePoint::from_ints(&[1, 2], 2).unwrap()).unwrap();
        let k = d.pieces.iter().position(|v| v.len() == 1).unwrap();
        assert_eq!(fiber_dim(&d, k, k, &e).unwrap(), 1);
        assert!(fiber_dim(&d, k, k, &s).is_err());
    }

    #[test]
    fn nilpotent_poincare_examples() {
        let d = nilpotent_datum(2).unwrap();
        let p = cell_inventory_and_poincare(&d, 0, 0).unwrap();
        let mut dims: Vec<usize> = p.cells.iter().map(|c| c.dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2, 2]);
        assert_eq!(p.poincare, BTreeMap::from([(1, 2), (2, 2)]));

        let d = nilpotent_datum(3).unwrap();
        let p = cell_inventory_and_poincare(&d, 0, 0).unwrap();
        assert_eq!(p.poincare, BTreeMap::from([(3, 6), (4, 12), (5, 12), (6, 6)]));

        let d = nilpotent_datum(1).unwrap();
        let p = cell_inventory_and_poincare(&d, 0, 0).unwrap();
        assert_eq!(p.poincare, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn cell_counts() {
        let d = fixed_point_datum(&SemisimplePoint::from_ints(&[1, 1, 2], 2).unwrap()).unwrap();
        let inv = cell_inventory(&d).unwrap();
        assert_eq!(d.pieces.len(), 3);
        assert_eq!(inv.len(), 36);
        for p in &inv.pairs {
            assert_eq!(p.cells.len(), 4);
        }
    }
}
