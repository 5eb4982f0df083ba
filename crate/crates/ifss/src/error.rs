//! Crate-wide error type.

use crate::algebra::{TconormKind, TnormKind};

/// Everything that can go wrong constructing or combining soft-set data.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A degree outside the unit interval.
    #[error("value {value} lies outside [0, 1]")]
    Range { value: f64 },

    /// Membership plus non-membership exceeds one.
    #[error("mu {mu} + nu {nu} exceeds 1")]
    Constraint { mu: f64, nu: f64 },

    /// A t-norm paired with a t-conorm that is not its dual.
    #[error("{tnorm:?}/{tconorm:?} is not one of the dual norm pairings")]
    NonDualNorms {
        tnorm: TnormKind,
        tconorm: TconormKind,
    },

    /// Operands defined over different universes.
    #[error("universes differ: {left:?} vs {right:?}")]
    UniverseMismatch { left: Vec<String>, right: Vec<String> },

    /// Parameter sets that were required to match do not.
    #[error("parameter sets differ: {left:?} vs {right:?}")]
    ParamMismatch { left: Vec<String>, right: Vec<String> },

    /// A parameter pair outside the relation's domain.
    #[error("pair ({first}, {second}) lies outside the domain")]
    Domain { first: String, second: String },

    /// Structurally invalid data (duplicates, totality violations, arity).
    #[error("{0}")]
    Invalid(String),

    /// Malformed JSON.
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),

    /// A document that parses as JSON but violates the schema.
    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    /// An error qualified with the document path it occurred at.
    #[error("{path}: {source}")]
    At {
        path: String,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Wraps an error with the document path it was detected at.
    pub fn at(self, path: impl Into<String>) -> Self {
        Error::At {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
