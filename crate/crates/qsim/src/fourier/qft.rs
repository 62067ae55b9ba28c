//! Quantum Fourier transform circuits, exact and with truncated rotations.

use crate::circuit::{Circuit, GateKind};
use crate::error::{Error, Result};
use crate::math::matrix::ComplexMatrix;
use crate::state::MAX_QUBITS;
use crate::C64;

/// The DFT matrix with entries `omega^{jk} / sqrt(dim)`; reference for the
/// circuit constructions.
pub fn dft_matrix(dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim, dim);
    for j in 0..dim {
        for k in 0..dim {
            let angle = 2.0 * std::f64::consts::PI * ((j * k) % dim) as f64 / dim as f64;
            m.set(j, k, C64::from_polar(1.0 / (dim as f64).sqrt(), angle));
        }
    }
    m
}

/// The standard QFT circuit on `n` qubits: per qubit a Hadamard followed by
/// controlled-`R_s` rotations conditioned on the later qubits, and a final
/// layer of swaps to undo the bit reversal. Uses
/// `n(n+1)/2 + floor(n/2)` gates.
pub fn qft_circuit(n: usize) -> Result<Circuit> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Capacity(n, MAX_QUBITS));
    }
    build_qft(n, None)
}

/// QFT with every controlled-`R_s` for `s > max_s` dropped. With
/// `max_s >= n` this is identical to [`qft_circuit`].
pub fn approx_qft_circuit(n: usize, max_s: u32) -> Result<Circuit> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Capacity(n, MAX_QUBITS));
    }
    if max_s == 0 {
        return Err(Error::InvalidParameter("rotation cutoff must be >= 1".into()));
    }
    build_qft(n, Some(max_s))
}

fn build_qft(n: usize, max_s: Option<u32>) -> Result<Circuit> {
    let mut c = Circuit::new(n);
    for target in 0..n {
        c.add(GateKind::H, &[target])?;
        for s in 2..=(n - target) as u32 {
            if let Some(cutoff) = max_s {
                if s > cutoff {
                    continue;
                }
            }
            let control = target + s as usize - 1;
            c.add(GateKind::CRs(s), &[control, target])?;
        }
    }
    for i in 0..n / 2 {
        c.add(GateKind::Swap, &[i, n - 1 - i])?;
    }
    Ok(c)
}
