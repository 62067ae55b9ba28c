//! Shared error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not unitary (max deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("invalid target qubits: {0}")]
    InvalidTarget(String),
    #[error("capacity exceeded: {0} qubits (limit {1})")]
    Capacity(usize, usize),
    #[error("invalid measurement: {0}")]
    InvalidMeasurement(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("retry limit exceeded: {0}")]
    RetryLimit(String),
    #[error("disconnected graph")]
    DisconnectedGraph,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
