//! A dense state-vector simulator together with the standard repertoire of
//! quantum algorithms and protocols built on top of it: query algorithms
//! (Deutsch-Jozsa through Grover), Fourier-based period finding and factoring,
//! Szegedy walks, Hamiltonian simulation, HHL, non-locality games, BB84, and
//! the 9-qubit code.
//!
//! The crate is organised in layers:
//!
//! - [`math`] — dense complex matrices, tensor products, the Pauli basis,
//!   a Hermitian eigensolver, and matrix exponentials.
//! - [`state`] — state vectors and density matrices: gate kernels,
//!   measurement, partial trace, Schmidt decomposition.
//! - [`circuit`] — a small gate-level IR with simulation, inversion, a text
//!   format, and a path-sum amplitude evaluator.
//! - [`classical`] — classical companions: FFT, continued fractions, modular
//!   arithmetic, GF(2) linear algebra.
//! - [`query`], [`fourier`], [`walk`], [`hamsim`], [`protocols`], [`qec`] —
//!   the algorithms themselves.
//!
//! With the default `parallel` feature the hot amplitude kernel and the
//! Monte-Carlo helpers run data-parallel on rayon; results are bit-for-bit
//! identical to the sequential fallback.

pub mod circuit;
pub mod classical;
pub mod error;
pub mod fourier;
pub mod hamsim;
pub mod math;
pub mod protocols;
pub mod qec;
pub mod query;
pub mod state;
pub mod walk;

pub use error::{Error, Result};
pub use math::matrix::ComplexMatrix;
pub use state::{RandomSource, StateVector};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex<f64>;
