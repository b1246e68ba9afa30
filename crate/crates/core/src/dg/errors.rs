use std::fmt;

use serde::Serialize;

/// The dg-algebra axioms, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Shape,
    UnitDegree,
    ProductDegree,
    UnitLaw,
    Associativity,
    DifferentialDegree,
    DifferentialSquare,
    Leibniz,
    AutomorphismDegree,
    AutomorphismUnit,
    AutomorphismMultiplicative,
    AutomorphismCommutesWithD,
    AutomorphismInvertible,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "shape",
            Axiom::UnitDegree => "unit degree",
            Axiom::ProductDegree => "product degree",
            Axiom::UnitLaw => "unit law",
            Axiom::Associativity => "associativity",
            Axiom::DifferentialDegree => "differential degree",
            Axiom::DifferentialSquare => "d∘d = 0",
            Axiom::Leibniz => "Leibniz rule",
            Axiom::AutomorphismDegree => "automorphism degree",
            Axiom::AutomorphismUnit => "automorphism unital",
            Axiom::AutomorphismMultiplicative => "automorphism multiplicative",
            Axiom::AutomorphismCommutesWithD => "automorphism commutes with d",
            Axiom::AutomorphismInvertible => "automorphism invertible",
        };
        f.write_str(s)
    }
}

/// First violated axiom, with the basis elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("{axiom} fails at ({}): {detail}", witness.join(", "))]
pub struct ValidationError {
    pub axiom: Axiom,
    pub witness: Vec<String>,
    pub detail: String,
}

/// Why the purity-to-formality construction stopped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FormalityError {
    #[error("no automorphism F supplied")]
    MissingAutomorphism,

    #[error("r = {r} must not be 0, 1 or -1")]
    BadParameter { r: String },

    /// `H^degree(F)` is not `r^degree` on the class of `representative`.
    #[error("not pure in degree {degree}: F({representative}) has class {found}, expected {expected} times it")]
    NotPure { degree: i32, representative: String, expected: String, found: String },

    /// Some eigenvalue of `F` on `A^degree` is not an integer power of `r`
    /// in the admissible window; `residual` spans the unexplained part.
    #[error("F on degree {degree} has eigenvalues outside r^[{window_low}, {window_high}]; residual {}", residual.join(", "))]
    Spectral { degree: i32, window_low: i64, window_high: i64, residual: Vec<String> },

    /// Cohomology of the bigraded refinement off the diagonal.
    #[error("cohomology of dimension {dimension} in bidegree ({degree}, {weight})")]
    Obstruction { degree: i32, weight: i64, dimension: usize },

    #[error("cohomology vanishes, so there is no unital cohomology algebra")]
    AcyclicAlgebra,

    /// A step that is guaranteed by the construction failed.
    #[error("construction invariant failed: {message}")]
    Invariant { message: String },
}

impl FormalityError {
    pub(crate) fn invariant(message: impl Into<String>) -> Self {
        FormalityError::Invariant { message: message.into() }
    }
}
