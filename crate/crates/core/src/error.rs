//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation that scans all subsets was asked to run on a semiring
    /// whose order exceeds the scan cap.
    #[error("semiring order {order} exceeds the cap {cap} for this operation")]
    Capacity { order: usize, cap: usize },

    /// An operation requiring a prime ideal was given a non-prime one.
    #[error("expected a prime ideal")]
    NotPrime,

    /// An operation requiring a proper ideal was given the whole semiring.
    #[error("expected a proper ideal")]
    NotProper,

    /// An operation requiring `a ⊆ b` was given ideals violating it.
    #[error("expected the first ideal to be contained in the second")]
    NotContained,

    /// Unknown statement identifier passed to the harness.
    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),

    /// Unknown model selector.
    #[error("unknown model `{0}` (expected boolean, f2, paper3, chain:N, or minplus)")]
    UnknownModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
