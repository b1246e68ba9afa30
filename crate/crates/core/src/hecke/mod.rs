//! The affine Hecke algebra of `GL(n)` in the Bernstein presentation.
//!
//! Elements are kept in the normal form `sum c(q) theta_x T_w` with the
//! lattice part on the left. Multiplication commutes `T_w` rightward past
//! `theta_y` one simple reflection at a time and then multiplies the finite
//! Hecke parts with the quadratic rule.

mod element;
mod relations;
mod truncated;

pub use element::{basis_term, qpoly, BasisKey, CommutationRule, HeckeAlgebra, HeckeElement, HeckeTermDoc};
pub use relations::{
    is_central, verify_defining_relations, verify_relations_with, weight_box, Centrality, RelationFailure,
    RelationReport, RelationSummary, MAX_REPORTED_FAILURES,
};
pub use truncated::{
    central_character, truncated_algebra, BasisDoc, CentralCharacter, TruncatedAlgebra, TruncatedAlgebraDoc,
    TruncatedBasis,
};
