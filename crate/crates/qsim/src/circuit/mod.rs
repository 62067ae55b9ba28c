//! Circuit intermediate representation: a gate catalog, composition and
//! inversion, simulation against the state-vector kernel, a line-based text
//! format, and a polynomial-space path-sum amplitude evaluator.

pub mod gates;
pub mod pathsum;
pub mod text;

pub use pathsum::path_sum_amplitude;
pub use text::{emit_circuit, parse_circuit};

use crate::error::{Error, Result};
use crate::math::matrix::ComplexMatrix;
use crate::state::StateVector;

use std::f64::consts::PI;

/// Which gate an op applies. Custom matrices are validated as unitary when
/// the op is pushed onto a circuit.
#[derive(Debug, Clone)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    S,
    T,
    RPhi(f64),
    /// `R_s = diag(1, e^{2 pi i / 2^s})`.
    Rs(u32),
    /// Controlled phase by an arbitrary angle; control first.
    CRPhi(f64),
    /// Controlled `R_s`; control first.
    CRs(u32),
    Cnot,
    Cz,
    Swap,
    Toffoli,
    Custom(ComplexMatrix),
    /// Controlled arbitrary unitary; control is the first target.
    ControlledCustom(ComplexMatrix),
}

impl GateKind {
    pub fn arity(&self) -> usize {
        match self {
            GateKind::H
            | GateKind::X
            | GateKind::Y
            | GateKind::Z
            | GateKind::S
            | GateKind::T
            | GateKind::RPhi(_)
            | GateKind::Rs(_) => 1,
            GateKind::Cnot | GateKind::Cz | GateKind::Swap | GateKind::CRPhi(_) | GateKind::CRs(_) => 2,
            GateKind::Toffoli => 3,
            GateKind::Custom(m) => m.rows().trailing_zeros() as usize,
            GateKind::ControlledCustom(m) => 1 + m.rows().trailing_zeros() as usize,
        }
    }

    /// Full `2^arity` unitary of this kind.
    pub fn unitary(&self) -> ComplexMatrix {
        match self {
            GateKind::H => gates::hadamard(),
            GateKind::X => gates::pauli_x(),
            GateKind::Y => gates::pauli_y(),
            GateKind::Z => gates::pauli_z(),
            GateKind::S => gates::s_gate(),
            GateKind::T => gates::t_gate(),
            GateKind::RPhi(phi) => gates::r_phi(*phi),
            GateKind::Rs(s) => gates::r_s(*s),
            GateKind::CRPhi(phi) => gates::controlled(&gates::r_phi(*phi)).expect("phase gate"),
            GateKind::CRs(s) => gates::controlled(&gates::r_s(*s)).expect("phase gate"),
            GateKind::Cnot => gates::cnot(),
            GateKind::Cz => gates::cz(),
            GateKind::Swap => gates::swap(),
            GateKind::Toffoli => gates::toffoli(),
            GateKind::Custom(m) => m.clone(),
            GateKind::ControlledCustom(m) => gates::controlled(m).expect("checked on push"),
        }
    }

    /// Adjoint kind; the adjoint of a custom unitary is computed on demand
    /// rather than stored twice.
    pub fn adjoint(&self) -> GateKind {
        match self {
            GateKind::H | GateKind::X | GateKind::Y | GateKind::Z => self.clone(),
            GateKind::S => GateKind::RPhi(-PI / 2.0),
            GateKind::T => GateKind::RPhi(-PI / 4.0),
            GateKind::RPhi(phi) => GateKind::RPhi(-phi),
            GateKind::Rs(s) => GateKind::RPhi(-2.0 * PI / (1u64 << s) as f64),
            GateKind::CRPhi(phi) => GateKind::CRPhi(-phi),
            GateKind::CRs(s) => GateKind::CRPhi(-2.0 * PI / (1u64 << s) as f64),
            GateKind::Cnot | GateKind::Cz | GateKind::Swap | GateKind::Toffoli => self.clone(),
            GateKind::Custom(m) => GateKind::Custom(m.adjoint()),
            GateKind::ControlledCustom(m) => GateKind::ControlledCustom(m.adjoint()),
        }
    }
}

/// One gate application: a kind plus the target qubits it acts on.
#[derive(Debug, Clone)]
pub struct GateOp {
    pub kind: GateKind,
    pub targets: Vec<usize>,
}

impl GateOp {
    pub fn new(kind: GateKind, targets: Vec<usize>) -> Self {
        Self { kind, targets }
    }
}

/// An ordered sequence of gate applications on a fixed register width.
#[derive(Debug, Clone)]
pub struct Circuit {
    qubit_count: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(qubit_count: usize) -> Self {
        Self {
            qubit_count,
            ops: Vec::new(),
        }
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn gate_count(&self) -> usize {
        self.ops.len()
    }

    /// Appends an op after validating arity, target range and distinctness,
    /// and (for custom kinds) unitarity.
    pub fn push(&mut self, op: GateOp) -> Result<()> {
        if op.targets.len() != op.kind.arity() {
            return Err(Error::InvalidTarget(format!(
                "kind expects {} targets, got {}",
                op.kind.arity(),
                op.targets.len()
            )));
        }
        let mut seen = vec![false; self.qubit_count];
        for &t in &op.targets {
            if t >= self.qubit_count {
                return Err(Error::InvalidTarget(format!(
                    "target {t} out of range (n = {})",
                    self.qubit_count
                )));
            }
            if seen[t] {
                return Err(Error::InvalidTarget(format!("duplicate target {t}")));
            }
            seen[t] = true;
        }
        match &op.kind {
            GateKind::Custom(m) | GateKind::ControlledCustom(m) => {
                if !m.is_square() || m.rows() == 0 || !m.rows().is_power_of_two() {
                    return Err(Error::DimensionMismatch(
                        "custom gate must be square with power-of-two dimension".into(),
                    ));
                }
                m.check_unitary(1e-9)?;
            }
            _ => {}
        }
        self.ops.push(op);
        Ok(())
    }

    /// Convenience: push by kind and targets.
    pub fn add(&mut self, kind: GateKind, targets: &[usize]) -> Result<()> {
        self.push(GateOp::new(kind, targets.to_vec()))
    }

    /// Runs the circuit on a copy of the given state.
    pub fn simulate(&self, input: &StateVector) -> Result<StateVector> {
        if input.qubit_count() != self.qubit_count {
            return Err(Error::DimensionMismatch(format!(
                "circuit on {} qubits, state on {}",
                self.qubit_count,
                input.qubit_count()
            )));
        }
        let mut state = input.clone();
        self.apply_to(&mut state)?;
        Ok(state)
    }

    /// Runs the circuit in place.
    pub fn apply_to(&self, state: &mut StateVector) -> Result<()> {
        if state.qubit_count() != self.qubit_count {
            return Err(Error::DimensionMismatch("circuit width".into()));
        }
        for op in &self.ops {
            state.apply_gate(&op.kind.unitary(), &op.targets)?;
        }
        Ok(())
    }

    /// Runs the circuit on `|index>`.
    pub fn simulate_basis(&self, index: usize) -> Result<StateVector> {
        let input = StateVector::basis_state(self.qubit_count, index)?;
        self.simulate(&input)
    }

    /// Circuit for the inverse unitary: gates reversed, each replaced by its
    /// adjoint.
    pub fn inverse(&self) -> Circuit {
        let ops = self
            .ops
            .iter()
            .rev()
            .map(|op| GateOp::new(op.kind.adjoint(), op.targets.clone()))
            .collect();
        Circuit {
            qubit_count: self.qubit_count,
            ops,
        }
    }

    /// Dense unitary of the whole circuit, built column by column.
    pub fn unitary(&self) -> Result<ComplexMatrix> {
        let dim = 1usize << self.qubit_count;
        let mut m = ComplexMatrix::zeros(dim, dim);
        for col in 0..dim {
            let out = self.simulate_basis(col)?;
            for (row, amp) in out.amplitudes().iter().enumerate() {
                m.set(row, col, *amp);
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::matrix::tensor;
    use crate::state::{random_state, RandomSource};
    use crate::C64;

    #[test]
    fn entangling_example_circuit() {
        // H on qubit 0, CNOT, Z on qubit 1 turns |00> into (|00> - |11>)/sqrt 2.
        let mut c = Circuit::new(2);
        c.add(GateKind::H, &[0]).unwrap();
        c.add(GateKind::Cnot, &[0, 1]).unwrap();
        c.add(GateKind::Z, &[1]).unwrap();
        let out = c.simulate_basis(0).unwrap();
        let r = 1.0 / 2.0f64.sqrt();
        assert!((out.amplitudes()[0b00] - C64::new(r, 0.0)).norm() < 1e-12);
        assert!((out.amplitudes()[0b11] - C64::new(-r, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::new(3);
        let mut rng = RandomSource::new(2);
        let s = random_state(3, &mut rng);
        let out = c.simulate(&s).unwrap();
        assert!(out.approx_eq_up_to_phase(&s, 1e-12));
    }

    #[test]
    fn hxh_equals_z() {
        let mut rng = RandomSource::new(4);
        for _ in 0..10 {
            let s = random_state(1, &mut rng);
            let mut hxh = Circuit::new(1);
            hxh.add(GateKind::H, &[0]).unwrap();
            hxh.add(GateKind::X, &[0]).unwrap();
            hxh.add(GateKind::H, &[0]).unwrap();
            let mut z = Circuit::new(1);
            z.add(GateKind::Z, &[0]).unwrap();
            let a = hxh.simulate(&s).unwrap();
            let b = z.simulate(&s).unwrap();
            for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
                assert!((x - y).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn inverse_of_empty_and_t() {
        assert_eq!(Circuit::new(2).inverse().gate_count(), 0);
        let mut c = Circuit::new(1);
        c.add(GateKind::T, &[0]).unwrap();
        let inv = c.inverse();
        match &inv.ops()[0].kind {
            GateKind::RPhi(phi) => assert!((phi + std::f64::consts::FRAC_PI_4).abs() < 1e-15),
            other => panic!("expected RPhi, got {other:?}"),
        }
    }

    #[test]
    fn random_circuit_round_trips_through_inverse() {
        let mut rng = RandomSource::new(8);
        let n = 4;
        let mut c = Circuit::new(n);
        for i in 0..20 {
            match i % 5 {
                0 => c.add(GateKind::H, &[rng.next_index(n)]).unwrap(),
                1 => c.add(GateKind::T, &[rng.next_index(n)]).unwrap(),
                2 => {
                    let a = rng.next_index(n);
                    let b = (a + 1 + rng.next_index(n - 1)) % n;
                    c.add(GateKind::Cnot, &[a, b]).unwrap();
                }
                3 => c
                    .add(GateKind::RPhi(rng.next_f64() * 3.0), &[rng.next_index(n)])
                    .unwrap(),
                _ => {
                    let m = crate::state::random_unitary(2, &mut rng);
                    c.add(GateKind::Custom(m), &[rng.next_index(n)]).unwrap();
                }
            }
        }
        let s = random_state(n, &mut rng);
        let round = c.inverse().simulate(&c.simulate(&s).unwrap()).unwrap();
        let err = crate::state::state_distance(&round, &s).unwrap();
        assert!(err < 1e-9, "round trip error {err}");
    }

    #[test]
    fn hadamard_conjugation_swaps_cnot_direction() {
        // (H (x) H) CNOT (H (x) H) equals CNOT with control and target swapped.
        let h2 = tensor(&gates::hadamard(), &gates::hadamard());
        let lhs = h2.mul(&gates::cnot()).mul(&h2);
        // CNOT with the second qubit as control: |ab> -> |a xor b, b>.
        let mut rhs = ComplexMatrix::zeros(4, 4);
        for a in 0..2usize {
            for b in 0..2usize {
                let from = (a << 1) | b;
                let to = ((a ^ b) << 1) | b;
                rhs.set(to, from, C64::new(1.0, 0.0));
            }
        }
        assert!(lhs.max_entry_diff(&rhs) < 1e-10);
    }

    #[test]
    fn swap_from_three_cnots() {
        let mut c = Circuit::new(2);
        c.add(GateKind::Cnot, &[0, 1]).unwrap();
        // middle CNOT uses the second qubit as control
        let mut flipped = ComplexMatrix::zeros(4, 4);
        for a in 0..2usize {
            for b in 0..2usize {
                let from = (a << 1) | b;
                let to = ((a ^ b) << 1) | b;
                flipped.set(to, from, C64::new(1.0, 0.0));
            }
        }
        c.add(GateKind::Custom(flipped), &[0, 1]).unwrap();
        c.add(GateKind::Cnot, &[0, 1]).unwrap();
        assert!(c.unitary().unwrap().max_entry_diff(&gates::swap()) < 1e-12);
    }

    #[test]
    fn catalog_gates_are_unitary() {
        let kinds = [
            GateKind::H,
            GateKind::X,
            GateKind::Y,
            GateKind::Z,
            GateKind::S,
            GateKind::T,
            GateKind::RPhi(0.37),
            GateKind::Rs(4),
            GateKind::CRPhi(1.1),
            GateKind::CRs(3),
            GateKind::Cnot,
            GateKind::Cz,
            GateKind::Swap,
            GateKind::Toffoli,
        ];
        for kind in kinds {
            let u = kind.unitary();
            assert!(
                u.unitarity_deviation() < 1e-12,
                "{kind:?} failed unitarity"
            );
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let c = Circuit::new(2);
        let s = StateVector::zero_state(3).unwrap();
        assert!(c.simulate(&s).is_err());
    }
}
