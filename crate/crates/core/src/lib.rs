//! Exact decision procedures for where the matrix values of a noncommutative
//! (*-)polynomial live: identities, central polynomials, sums of commutators
//! modulo identities, or everything.

pub mod classify;
pub mod corpus;
pub mod cpoly;
pub mod error;
pub mod free;
pub mod generic;
pub mod matrix;
pub mod parse;
pub mod sample;
pub mod scalar;
pub mod subspace;

pub use classify::{classify, ClassReport, Verdict};
pub use cpoly::{CPoly, Monomial, Point, Var};
pub use error::{Error, Result};
pub use free::{Letter, NcPolynomial, Word};
pub use generic::{Certificate, GenericContext};
pub use matrix::{Entry, Involution, Matrix};
pub use scalar::{Field, Scalar};
pub use subspace::{CanonicalName, Subspace};
