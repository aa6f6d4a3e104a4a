use thiserror::Error;

use crate::cpoly::Var;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable {0} is not assigned by the evaluation point")]
    Unassigned(Var),

    #[error("expected {expected} matrices, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the symplectic involution needs an even dimension, got d = {0}")]
    OddSymplectic(usize),

    #[error("dimension d = {d} is below the minimum {min} for this operation")]
    DimensionTooSmall { d: usize, min: usize },

    #[error("canonical subspace {name} is not defined for involution {involution}")]
    InvalidPairing { name: String, involution: String },

    #[error("starred letter in a polynomial evaluated without an involution")]
    StarWithoutInvolution,

    #[error("variable x{index} exceeds the {available} generic matrices in context")]
    IndexOutOfRange { index: u32, available: usize },

    #[error("polynomial is not linear in x{0}")]
    NotLinear(u32),

    #[error("need at least {needed} distinct scalars, got {got}")]
    Underdetermined { needed: usize, got: usize },

    #[error("predicted {predicted} terms exceeds the term budget {limit}")]
    BudgetExceeded { predicted: u128, limit: u128 },

    #[error("the sample budget must be at least 1")]
    EmptyBudget,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
