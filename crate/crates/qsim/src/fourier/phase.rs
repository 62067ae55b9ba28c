//! Phase estimation: extracts the eigenphase of a unitary on a supplied
//! eigenvector to `n` bits via controlled powers and an inverse QFT.

use crate::circuit::{Circuit, GateKind, GateOp};
use crate::error::{Error, Result};
use crate::fourier::qft::qft_circuit;
use crate::math::matrix::ComplexMatrix;
use crate::state::{measure_computational, RandomSource, StateVector};

/// An n-bit phase reading: `phase = 0.b_1 b_2 ... b_n` in binary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhaseEstimate {
    /// Measured bits, the first bit in the most significant position.
    pub bits: u64,
    pub bit_count: usize,
}

impl PhaseEstimate {
    pub fn phase(&self) -> f64 {
        self.bits as f64 / (1u64 << self.bit_count) as f64
    }

    pub fn bit(&self, index: usize) -> bool {
        (self.bits >> (self.bit_count - 1 - index)) & 1 == 1
    }
}

const EIGENVECTOR_TOL: f64 = 1e-9;

fn check_eigenvector(u: &ComplexMatrix, eigenstate: &StateVector) -> Result<()> {
    if u.rows() != eigenstate.dim() {
        return Err(Error::DimensionMismatch(
            "unitary does not match eigenstate dimension".into(),
        ));
    }
    let image = u.mul_vec(eigenstate.amplitudes());
    let lambda = crate::math::matrix::inner(eigenstate.amplitudes(), &image);
    let residual: f64 = image
        .iter()
        .zip(eigenstate.amplitudes())
        .map(|(y, x)| (y - lambda * x).norm_sqr())
        .sum::<f64>()
        .sqrt();
    if residual > EIGENVECTOR_TOL {
        return Err(Error::InvalidParameter(format!(
            "input is not an eigenvector (residual {residual:.3e})"
        )));
    }
    Ok(())
}

/// Runs phase estimation with a matrix-backed unitary. Controlled powers
/// `U^{2^j}` are formed by repeated squaring. If the eigenphase has an exact
/// `n`-bit binary expansion the estimate equals it with probability 1.
pub fn phase_estimate(
    u: &ComplexMatrix,
    eigenstate: &StateVector,
    precision_bits: usize,
    rng: &mut RandomSource,
) -> Result<PhaseEstimate> {
    u.check_unitary(1e-9)?;
    check_eigenvector(u, eigenstate)?;
    let m = eigenstate.qubit_count();
    let n = precision_bits;
    if n == 0 || n + m > crate::state::MAX_QUBITS {
        return Err(Error::Capacity(n + m, crate::state::MAX_QUBITS));
    }

    // |0^n>|psi>, Hadamards on the phase register.
    let mut state = StateVector::zero_state(n)?.tensor(eigenstate)?;
    let h = crate::circuit::gates::hadamard();
    for q in 0..n {
        state.apply_gate(&h, &[q])?;
    }

    // Controlled-U^{2^{n-1-l}} with phase qubit l as control.
    let mut power = u.clone();
    let system: Vec<usize> = (n..n + m).collect();
    for l in (0..n).rev() {
        let mut targets = vec![l];
        targets.extend_from_slice(&system);
        let gate = crate::circuit::gates::controlled(&power)?;
        state.apply_gate(&gate, &targets)?;
        if l > 0 {
            power = power.mul(&power);
        }
    }

    // Inverse QFT on the phase register, then measure it.
    let inverse_qft = qft_circuit(n)?.inverse();
    for op in inverse_qft.ops() {
        state.apply_gate(&op.kind.unitary(), &op.targets)?;
    }
    let phase_qubits: Vec<usize> = (0..n).collect();
    let (bits, _) = measure_computational(&state, &phase_qubits, rng)?;
    let mut reading = 0u64;
    for (i, &b) in bits.iter().enumerate() {
        if b {
            reading |= 1 << (n - 1 - i);
        }
    }
    Ok(PhaseEstimate {
        bits: reading,
        bit_count: n,
    })
}

/// Phase estimation with a circuit-backed unitary: controlled powers are
/// realized by `2^j`-fold controlled application of the circuit's gates.
pub fn phase_estimate_circuit(
    circuit: &Circuit,
    eigenstate: &StateVector,
    precision_bits: usize,
    rng: &mut RandomSource,
) -> Result<PhaseEstimate> {
    check_eigenvector(&circuit.unitary()?, eigenstate)?;
    let m = eigenstate.qubit_count();
    let n = precision_bits;
    if n == 0 || n + m > crate::state::MAX_QUBITS {
        return Err(Error::Capacity(n + m, crate::state::MAX_QUBITS));
    }
    let mut state = StateVector::zero_state(n)?.tensor(eigenstate)?;
    let h = crate::circuit::gates::hadamard();
    for q in 0..n {
        state.apply_gate(&h, &[q])?;
    }
    for l in 0..n {
        let reps = 1u64 << (n - 1 - l);
        for _ in 0..reps {
            for op in circuit.ops() {
                let controlled = controlled_op(op, l, n)?;
                state.apply_gate(&controlled.kind.unitary(), &controlled.targets)?;
            }
        }
    }
    let inverse_qft = qft_circuit(n)?.inverse();
    for op in inverse_qft.ops() {
        state.apply_gate(&op.kind.unitary(), &op.targets)?;
    }
    let phase_qubits: Vec<usize> = (0..n).collect();
    let (bits, _) = measure_computational(&state, &phase_qubits, rng)?;
    let mut reading = 0u64;
    for (i, &b) in bits.iter().enumerate() {
        if b {
            reading |= 1 << (n - 1 - i);
        }
    }
    Ok(PhaseEstimate {
        bits: reading,
        bit_count: n,
    })
}

/// Controlling a whole circuit is controlling each of its gates.
fn controlled_op(op: &GateOp, control: usize, offset: usize) -> Result<GateOp> {
    let shifted: Vec<usize> = op.targets.iter().map(|t| t + offset).collect();
    let mut targets = vec![control];
    targets.extend(shifted);
    Ok(GateOp::new(
        GateKind::ControlledCustom(op.kind.unitary()),
        targets,
    ))
}
