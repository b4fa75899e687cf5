//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("mesh mismatch: {0}")]
    MeshMismatch(String),

    #[error("boundary facet {0} carries no tag")]
    UntaggedFacet(usize),

    #[error("system is not symmetric positive definite: {0}")]
    NotSpd(String),

    #[error("solver did not converge within {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("infeasible constraint data: {0}")]
    Infeasible(String),

    #[error("dual equilibration failed: {0}")]
    Equilibration(String),

    #[error("admissibility not certified: {0}")]
    Uncertified(String),

    #[error("operation misuse: {0}")]
    Misuse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
