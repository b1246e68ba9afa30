//! Type-A Weyl group combinatorics and Laurent polynomial arithmetic.

mod laurent;
mod symmetric;
mod weyl;

pub use laurent::{DivisibilityError, Exponents, LaurentPoly, TermDoc};
pub use symmetric::{
    centralizer_data, elementary, elementary_all, evaluate, is_staircase, orbit_sum, staircase_monomials,
    staircase_reduce, Centralizer, SemisimplePoint, StaircaseReducer,
};
pub use weyl::{
    all_roots, bruhat_leq, positive_roots, symmetric_group, total_order_cmp, Root, Weight, WeylElement, WeylGroup,
    MAX_RANK,
};
