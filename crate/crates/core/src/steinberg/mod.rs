//! Cell decompositions of Steinberg varieties attached to morphisms of
//! Springer type `G x^B V^i -> V` for `GL(n)` and its Levi centralizers.
//!
//! Every `Z^{ij}` is paved by cells indexed by pairs `(w, y)` of the acting
//! Weyl group, so Borel-Moore homology, Ext dimensions and Frobenius weights
//! are all read off a cell inventory.

mod cells;
mod datum;
mod ext;
mod report;

pub use cells::{cell_inventory, cell_inventory_and_poincare, fiber_dim, Cell, CellInventory, PairInventory};
pub use datum::{
    fixed_point_datum, nilpotent_datum, validate_b_stable, DatumDoc, DatumKind, GroupDoc, SpringerDatum,
    StabilityViolation,
};
pub use ext::{
    ext_from_inventory, ext_graded_dims, frobenius_weight_table, frobenius_weights, ExtDoc, ExtEntry, ExtTable,
    FrobeniusScale, WeightReport, WeightRow,
};
pub use report::{dlc_report, steinberg_report, CellDoc, DlcReport, PoincareDoc, SteinbergReport, Totals};
