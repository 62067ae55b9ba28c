//! Measurement: computational-basis, projective, POVM, and observables.

use crate::error::{Error, Result};
use crate::math::eig::herm_eig;
use crate::math::matrix::ComplexMatrix;
use crate::state::{RandomSource, StateVector};
use crate::C64;

const MEASUREMENT_TOL: f64 = 1e-9;

/// Measures the given qubits in the computational basis.
///
/// Returns the outcome bits (in the order the qubits were listed) and the
/// renormalized post-measurement state.
pub fn measure_computational(
    state: &StateVector,
    qubits: &[usize],
    rng: &mut RandomSource,
) -> Result<(Vec<bool>, StateVector)> {
    if qubits.is_empty() {
        return Err(Error::InvalidMeasurement("empty qubit set".into()));
    }
    let n = state.qubit_count();
    for &q in qubits {
        if q >= n {
            return Err(Error::InvalidTarget(format!("qubit {q} out of range")));
        }
    }
    let k = qubits.len();
    let mut probabilities = vec![0.0f64; 1 << k];
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        let mut outcome = 0usize;
        for (j, &q) in qubits.iter().enumerate() {
            outcome |= state.bit_of(idx, q) << (k - 1 - j);
        }
        probabilities[outcome] += amp.norm_sqr();
    }
    let outcome = rng.sample_distribution(&probabilities);

    let branch_norm = probabilities[outcome].sqrt();
    let mut collapsed = vec![C64::new(0.0, 0.0); state.dim()];
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        let mut o = 0usize;
        for (j, &q) in qubits.iter().enumerate() {
            o |= state.bit_of(idx, q) << (k - 1 - j);
        }
        if o == outcome {
            collapsed[idx] = amp / branch_norm;
        }
    }
    let bits = (0..k).map(|j| (outcome >> (k - 1 - j)) & 1 == 1).collect();
    Ok((bits, StateVector::from_amplitudes(n, collapsed)?))
}

/// Convenience wrapper measuring every qubit, returning the basis index.
pub fn measure_all(state: &StateVector, rng: &mut RandomSource) -> usize {
    rng.sample_distribution(&state.born_distribution())
}

/// A projective measurement given by projectors that sum to identity.
#[derive(Debug, Clone)]
pub struct ProjectiveMeasurement {
    projectors: Vec<ComplexMatrix>,
}

impl ProjectiveMeasurement {
    pub fn new(projectors: Vec<ComplexMatrix>) -> Result<Self> {
        if projectors.is_empty() {
            return Err(Error::InvalidMeasurement("no projectors".into()));
        }
        let dim = projectors[0].rows();
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for (i, p) in projectors.iter().enumerate() {
            if p.rows() != dim || p.cols() != dim {
                return Err(Error::InvalidMeasurement("inconsistent dimensions".into()));
            }
            if p.mul(p).max_entry_diff(p) > MEASUREMENT_TOL {
                return Err(Error::InvalidMeasurement(format!(
                    "projector {i} is not idempotent"
                )));
            }
            for (j, q) in projectors.iter().enumerate() {
                if i != j {
                    let prod = p.mul(q);
                    if prod.max_entry_diff(&ComplexMatrix::zeros(dim, dim)) > MEASUREMENT_TOL {
                        return Err(Error::InvalidMeasurement(format!(
                            "projectors {i} and {j} are not orthogonal"
                        )));
                    }
                }
            }
            sum = sum.add(p);
        }
        if sum.max_entry_diff(&ComplexMatrix::identity(dim)) > MEASUREMENT_TOL {
            return Err(Error::InvalidMeasurement(
                "projectors do not sum to identity".into(),
            ));
        }
        Ok(Self { projectors })
    }

    /// Measurement in the computational basis: rank-1 projectors `|j><j|`.
    pub fn computational(dim: usize) -> Self {
        let mut projectors = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut p = ComplexMatrix::zeros(dim, dim);
            p.set(j, j, C64::new(1.0, 0.0));
            projectors.push(p);
        }
        Self { projectors }
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    pub fn outcome_count(&self) -> usize {
        self.projectors.len()
    }

    pub fn dim(&self) -> usize {
        self.projectors[0].rows()
    }

    /// Outcome probabilities `||P_j |phi>||^2`.
    pub fn probabilities(&self, state: &StateVector) -> Vec<f64> {
        self.projectors
            .iter()
            .map(|p| {
                p.mul_vec(state.amplitudes())
                    .iter()
                    .map(|a| a.norm_sqr())
                    .sum()
            })
            .collect()
    }
}

/// Applies a projective measurement; returns the outcome index and the
/// collapsed state `P_j |phi> / ||P_j |phi>||`.
pub fn measure_projective(
    state: &StateVector,
    measurement: &ProjectiveMeasurement,
    rng: &mut RandomSource,
) -> Result<(usize, StateVector)> {
    if measurement.dim() != state.dim() {
        return Err(Error::DimensionMismatch(
            "projector dimension does not match state".into(),
        ));
    }
    let probabilities = measurement.probabilities(state);
    let outcome = rng.sample_distribution(&probabilities);
    let projected = measurement.projectors[outcome].mul_vec(state.amplitudes());
    let collapsed = StateVector::from_unnormalized(state.qubit_count(), projected)?;
    Ok((outcome, collapsed))
}

/// A POVM: positive semidefinite elements summing to identity. Sampling
/// yields an outcome only; no post-measurement state is defined.
#[derive(Debug, Clone)]
pub struct Povm {
    elements: Vec<ComplexMatrix>,
}

impl Povm {
    pub fn new(elements: Vec<ComplexMatrix>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidMeasurement("no POVM elements".into()));
        }
        let dim = elements[0].rows();
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for (i, e) in elements.iter().enumerate() {
            if e.rows() != dim || e.cols() != dim {
                return Err(Error::InvalidMeasurement("inconsistent dimensions".into()));
            }
            e.check_hermitian(MEASUREMENT_TOL).map_err(|_| {
                Error::InvalidMeasurement(format!("element {i} is not Hermitian"))
            })?;
            let (eigenvalues, _) = herm_eig(e)?;
            if eigenvalues.last().copied().unwrap_or(0.0) < -MEASUREMENT_TOL {
                return Err(Error::InvalidMeasurement(format!(
                    "element {i} is not positive semidefinite"
                )));
            }
            sum = sum.add(e);
        }
        if sum.max_entry_diff(&ComplexMatrix::identity(dim)) > MEASUREMENT_TOL {
            return Err(Error::InvalidMeasurement(
                "POVM elements do not sum to identity".into(),
            ));
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    /// Outcome probabilities `Tr(E_i |phi><phi|) = <phi|E_i|phi>`.
    pub fn probabilities(&self, state: &StateVector) -> Vec<f64> {
        self.elements
            .iter()
            .map(|e| {
                crate::math::matrix::inner(state.amplitudes(), &e.mul_vec(state.amplitudes())).re
            })
            .collect()
    }
}

/// Samples a POVM outcome.
pub fn sample_povm(state: &StateVector, povm: &Povm, rng: &mut RandomSource) -> Result<usize> {
    if povm.elements[0].rows() != state.dim() {
        return Err(Error::DimensionMismatch(
            "POVM dimension does not match state".into(),
        ));
    }
    Ok(rng.sample_distribution(&povm.probabilities(state)))
}

/// Expected value `<phi|M|phi>` of a Hermitian observable.
pub fn expectation(state: &StateVector, observable: &ComplexMatrix) -> Result<f64> {
    if observable.rows() != state.dim() {
        return Err(Error::DimensionMismatch(
            "observable dimension does not match state".into(),
        ));
    }
    observable.check_hermitian(MEASUREMENT_TOL)?;
    Ok(crate::math::matrix::inner(state.amplitudes(), &observable.mul_vec(state.amplitudes())).re)
}
