use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),

    /// An exact division that was required to succeed left a remainder.
    #[error("divisibility error: nonzero remainder {remainder}")]
    Divisibility { remainder: String },

    /// An internal algebraic invariant failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Validation(#[from] crate::dg::ValidationError),

    #[error(transparent)]
    Formality(#[from] crate::dg::FormalityError),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
