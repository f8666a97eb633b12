//! Crystal combinatorics on set-valued words and related objects:
//! permutation/word algebra, exact multivariate polynomials with
//! divided-difference operators, materialized crystal graphs, set-valued
//! words and tableaux, Hecke (column) insertion, and reduced pipe dreams
//! with bump tiles.

pub mod algebra;
pub mod crystal;
pub mod hecke;
pub mod pipedreams;
pub mod poly;
pub mod svwords;
pub mod tableaux;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}

pub(crate) fn inconsistent<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Inconsistent(msg.into()))
}
