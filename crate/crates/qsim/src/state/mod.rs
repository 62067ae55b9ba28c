//! Dense state vectors and density matrices: gate application, Born-rule
//! sampling, projective and POVM measurement, partial trace, Schmidt
//! decomposition, and state distances.
//!
//! Basis convention: an n-qubit basis state `|b1 b2 ... bn>` is stored at
//! index `b1 b2 ... bn` read as a binary number, so qubit 0 (the first
//! qubit) is the most significant index bit.

pub mod density;
pub mod dump;
pub mod kernel;
pub mod measure;
pub mod rng;

pub use density::{partial_trace, schmidt, DensityMatrix, SchmidtDecomposition};
pub use measure::{
    expectation, measure_computational, measure_projective, sample_povm, Povm,
    ProjectiveMeasurement,
};
pub use rng::RandomSource;

use crate::error::{Error, Result};
use crate::math::matrix::{inner, ComplexMatrix};
use crate::C64;

/// Hard capacity guard: 2^26 amplitudes is about 1 GiB.
pub const MAX_QUBITS: usize = 26;

const NORM_TOL: f64 = 1e-9;
const UNITARY_TOL: f64 = 1e-9;

/// A pure n-qubit state as a dense array of `2^n` amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    qubit_count: usize,
    amplitudes: Vec<C64>,
}

impl StateVector {
    /// `|0...0>` on `n` qubits.
    pub fn zero_state(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    /// Computational basis state `|index>`.
    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Capacity(n, MAX_QUBITS));
        }
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim];
        amplitudes[index] = C64::new(1.0, 0.0);
        Ok(Self {
            qubit_count: n,
            amplitudes,
        })
    }

    /// Wraps an amplitude vector, enforcing unit norm within tolerance.
    pub fn from_amplitudes(n: usize, amplitudes: Vec<C64>) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Capacity(n, MAX_QUBITS));
        }
        if amplitudes.len() != 1usize << n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} amplitudes, got {}",
                1usize << n,
                amplitudes.len()
            )));
        }
        let state = Self {
            qubit_count: n,
            amplitudes,
        };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidParameter(format!(
                "state norm {norm} is not 1"
            )));
        }
        Ok(state)
    }

    /// Normalizes an arbitrary nonzero amplitude vector.
    pub fn from_unnormalized(n: usize, mut amplitudes: Vec<C64>) -> Result<Self> {
        let norm = amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt();
        if norm < 1e-300 {
            return Err(Error::InvalidParameter("zero vector".into()));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::from_amplitudes(n, amplitudes)
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Born probability of basis outcome `index`.
    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    /// Value of qubit `q` in basis index `index` under the MSB-first
    /// convention.
    pub fn bit_of(&self, index: usize, qubit: usize) -> usize {
        (index >> (self.qubit_count - 1 - qubit)) & 1
    }

    /// Applies a `2^k`-dimensional unitary to `k` distinct target qubits.
    pub fn apply_gate(&mut self, gate: &ComplexMatrix, targets: &[usize]) -> Result<()> {
        let k = targets.len();
        if gate.rows() != 1 << k || gate.cols() != 1 << k {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} gate for {k} targets",
                gate.rows(),
                gate.cols()
            )));
        }
        let mut seen = vec![false; self.qubit_count];
        for &t in targets {
            if t >= self.qubit_count {
                return Err(Error::InvalidTarget(format!(
                    "qubit {t} out of range (n = {})",
                    self.qubit_count
                )));
            }
            if seen[t] {
                return Err(Error::InvalidTarget(format!("duplicate target {t}")));
            }
            seen[t] = true;
        }
        gate.check_unitary(UNITARY_TOL)?;
        let mut output = vec![C64::new(0.0, 0.0); self.dim()];
        kernel::apply_gate_dispatch(&self.amplitudes, &mut output, self.qubit_count, gate, targets);
        self.amplitudes = output;
        Ok(())
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> C64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    /// Global phase carries no physical meaning, so state equality is
    /// `| <a|b> | = 1` within tolerance.
    pub fn approx_eq_up_to_phase(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim() && (self.inner(other).norm() - 1.0).abs() <= tol
    }

    /// Squared overlap with another state.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// Tensor product `self (x) other`, with `self` on the more significant
    /// qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.qubit_count + other.qubit_count;
        if n > MAX_QUBITS {
            return Err(Error::Capacity(n, MAX_QUBITS));
        }
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Ok(Self {
            qubit_count: n,
            amplitudes,
        })
    }

    /// Born distribution over all basis outcomes.
    pub fn born_distribution(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// Euclidean distance `||a - b||` between two states of equal dimension.
pub fn state_distance(a: &StateVector, b: &StateVector) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {} amplitudes",
            a.dim(),
            b.dim()
        )));
    }
    Ok(a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// Total variation distance between the Born distributions of two states.
pub fn born_tvd(a: &StateVector, b: &StateVector) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch("tvd dimension mismatch".into()));
    }
    Ok(0.5
        * a.amplitudes()
            .iter()
            .zip(b.amplitudes())
            .map(|(x, y)| (x.norm_sqr() - y.norm_sqr()).abs())
            .sum::<f64>())
}

/// Standard normal draw via Box-Muller on the uniform stream.
fn gaussian(rng: &mut RandomSource) -> f64 {
    let u1 = 1.0 - rng.next_f64();
    let u2 = rng.next_f64();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Haar-ish random state from a complex Gaussian vector.
pub fn random_state(n: usize, rng: &mut RandomSource) -> StateVector {
    let dim = 1usize << n;
    let amplitudes: Vec<C64> = (0..dim)
        .map(|_| C64::new(gaussian(rng), gaussian(rng)))
        .collect();
    StateVector::from_unnormalized(n, amplitudes).expect("gaussian vector is nonzero")
}

/// Random unitary from Gram-Schmidt on a complex Gaussian matrix.
pub fn random_unitary(dim: usize, rng: &mut RandomSource) -> ComplexMatrix {
    let mut columns: Vec<Vec<C64>> = Vec::with_capacity(dim);
    for _ in 0..dim {
        loop {
            let mut v: Vec<C64> = (0..dim)
                .map(|_| C64::new(gaussian(rng), gaussian(rng)))
                .collect();
            for existing in &columns {
                let overlap = inner(existing, &v);
                for (x, e) in v.iter_mut().zip(existing) {
                    *x -= overlap * e;
                }
            }
            let norm = v.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-8 {
                v.iter_mut().for_each(|e| *e /= norm);
                columns.push(v);
                break;
            }
        }
    }
    let mut m = ComplexMatrix::zeros(dim, dim);
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, *v);
        }
    }
    m
}
