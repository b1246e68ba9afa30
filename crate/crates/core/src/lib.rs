//! Exact computations around the affine Hecke algebra of `GL(n)`.
//!
//! The crate is split along the objects it manipulates:
//!
//! * [`combinat`]: symmetric groups, weights, roots, multivariate Laurent
//!   polynomials and the staircase normal form modulo symmetric functions.
//! * [`hecke`]: the affine Hecke algebra in its Bernstein presentation, its
//!   center, central characters and the finite-dimensional truncations.
//! * [`steinberg`]: cell inventories of Steinberg varieties attached to
//!   Springer-type data, graded Ext dimensions and Frobenius weights.
//! * [`dg`]: finite-dimensional dg-algebras with an automorphism, purity
//!   detection and an explicit formality zigzag.
//!
//! Polynomial and linear-algebra kernels are generic over a [`Scalar`]
//! field; everything downstream is instantiated at [`Rational`].

pub mod combinat;
pub mod dg;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod scalar;
pub mod schema;
pub mod steinberg;

pub use error::{Error, Result};
pub use scalar::{fmt_rational, parse_rational, Scalar};

/// Exact rational numbers with arbitrary precision.
pub type Rational = num_rational::BigRational;

/// Laurent polynomials in `x_1..x_n` (and optionally `q`) over [`Rational`].
pub type Poly = combinat::LaurentPoly<Rational>;

/// Laurent polynomials in the single variable `q`.
pub type QPoly = combinat::LaurentPoly<Rational>;

/// Dense matrices over [`Rational`].
pub type Matrix = linalg::Matrix<Rational>;

/// dg-algebras over [`Rational`].
pub type DgAlgebraQ = dg::DgAlgebra<Rational>;

/// Formality zigzags over [`Rational`].
pub type ZigzagQ = dg::Zigzag<Rational>;
