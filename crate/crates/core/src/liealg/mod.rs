//! Lie-theoretic oracles: root systems and tensor-product decompositions, the octonion
//! vector product, and exact numeric images of diagrams over the 14-dimensional
//! exceptional algebra.

pub mod g2;
pub mod network;
pub mod octonion;
pub mod roots;

use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("tensor arity {arity} exceeds the limit {max}")]
    TooLarge { arity: usize, max: usize },
    #[error("expected a closed morphism, got profile {0:?}")]
    NotClosed((usize, usize)),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Outcome of one named identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}
