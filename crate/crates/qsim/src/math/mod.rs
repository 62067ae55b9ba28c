//! Complex dense linear algebra: matrices, tensor products, the Pauli basis,
//! Hermitian eigendecomposition and matrix exponentials, operator norms.

pub mod eig;
pub mod matrix;
pub mod pauli;

pub use eig::{herm_eig, herm_expm, op_norm_diff};
pub use matrix::ComplexMatrix;
pub use pauli::{pauli_decompose, pauli_matrix, PauliLetter, PauliString};
