//! Density matrices, partial trace, and the Schmidt decomposition.

use crate::error::{Error, Result};
use crate::math::eig::herm_eig;
use crate::math::matrix::ComplexMatrix;
use crate::state::StateVector;
use crate::C64;

const DENSITY_TOL: f64 = 1e-9;

/// A mixed n-qubit state: Hermitian, trace 1, positive semidefinite.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    qubit_count: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Pure-state promotion `|phi><phi|`.
    pub fn from_pure(state: &StateVector) -> Self {
        let matrix = crate::math::matrix::outer(state.amplitudes(), state.amplitudes());
        Self {
            qubit_count: state.qubit_count(),
            matrix,
        }
    }

    /// Mixture of pure states with the given probabilities.
    pub fn mixture(parts: &[(f64, StateVector)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("empty mixture".into()));
        }
        let n = parts[0].1.qubit_count();
        let dim = 1usize << n;
        let mut matrix = ComplexMatrix::zeros(dim, dim);
        for (p, s) in parts {
            if s.qubit_count() != n {
                return Err(Error::DimensionMismatch("mixture dimension".into()));
            }
            let outer = crate::math::matrix::outer(s.amplitudes(), s.amplitudes());
            matrix = matrix.add(&outer.scale(C64::new(*p, 0.0)));
        }
        let rho = Self {
            qubit_count: n,
            matrix,
        };
        rho.validate()?;
        Ok(rho)
    }

    pub fn from_matrix(qubit_count: usize, matrix: ComplexMatrix) -> Result<Self> {
        if matrix.rows() != 1 << qubit_count || !matrix.is_square() {
            return Err(Error::DimensionMismatch("density matrix shape".into()));
        }
        let rho = Self {
            qubit_count,
            matrix,
        };
        rho.validate()?;
        Ok(rho)
    }

    /// Checks Hermiticity, unit trace, and positive semidefiniteness within
    /// tolerance.
    pub fn validate(&self) -> Result<()> {
        self.matrix.check_hermitian(DENSITY_TOL)?;
        let trace = self.matrix.trace();
        if (trace.re - 1.0).abs() > DENSITY_TOL || trace.im.abs() > DENSITY_TOL {
            return Err(Error::InvalidParameter(format!(
                "density matrix trace {trace} is not 1"
            )));
        }
        let (eigenvalues, _) = herm_eig(&self.matrix)?;
        if eigenvalues.last().copied().unwrap_or(0.0) < -DENSITY_TOL {
            return Err(Error::InvalidParameter(
                "density matrix has a negative eigenvalue".into(),
            ));
        }
        Ok(())
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    /// Eigenvalues in descending order.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        Ok(herm_eig(&self.matrix)?.0)
    }
}

/// Distributes the bits of `kept` (over the kept qubits, in ascending qubit
/// order) and `traced` (over the remaining qubits) into a full basis index.
fn interleave(
    n: usize,
    keep_sorted: &[usize],
    traced_sorted: &[usize],
    kept: usize,
    traced: usize,
) -> usize {
    let mut idx = 0usize;
    for (j, &q) in keep_sorted.iter().enumerate() {
        let bit = (kept >> (keep_sorted.len() - 1 - j)) & 1;
        idx |= bit << (n - 1 - q);
    }
    for (j, &q) in traced_sorted.iter().enumerate() {
        let bit = (traced >> (traced_sorted.len() - 1 - j)) & 1;
        idx |= bit << (n - 1 - q);
    }
    idx
}

/// Reduced density matrix on the kept qubits; trace is preserved.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.qubit_count();
    let mut keep_sorted: Vec<usize> = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.len() != keep.len() {
        return Err(Error::InvalidTarget("duplicate kept qubit".into()));
    }
    if keep_sorted.is_empty() || keep_sorted.len() >= n {
        return Err(Error::InvalidParameter(
            "kept set must be a nonempty proper subset".into(),
        ));
    }
    if keep_sorted.last().copied().unwrap_or(0) >= n {
        return Err(Error::InvalidTarget("kept qubit out of range".into()));
    }
    let traced_sorted: Vec<usize> = (0..n).filter(|q| !keep_sorted.contains(q)).collect();
    let m = keep_sorted.len();
    let t = traced_sorted.len();
    let mut out = ComplexMatrix::zeros(1 << m, 1 << m);
    for i in 0..(1usize << m) {
        for ip in 0..(1usize << m) {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..(1usize << t) {
                let row = interleave(n, &keep_sorted, &traced_sorted, i, j);
                let col = interleave(n, &keep_sorted, &traced_sorted, ip, j);
                acc += rho.matrix().get(row, col);
            }
            out.set(i, ip, acc);
        }
    }
    Ok(DensityMatrix {
        qubit_count: m,
        matrix: out,
    })
}

/// Result of a Schmidt decomposition `sum_i lambda_i |a_i>|b_i>`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    /// Positive coefficients in descending order; their squares sum to 1.
    pub coefficients: Vec<f64>,
    /// Orthonormal states on the A side (first `split` qubits).
    pub a_basis: Vec<Vec<C64>>,
    /// Orthonormal states on the B side (remaining qubits).
    pub b_basis: Vec<Vec<C64>>,
}

impl SchmidtDecomposition {
    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    /// Rebuilds `sum_i lambda_i |a_i>|b_i>` as a full amplitude vector.
    pub fn reconstruct(&self) -> Vec<C64> {
        let da = self.a_basis[0].len();
        let db = self.b_basis[0].len();
        let mut out = vec![C64::new(0.0, 0.0); da * db];
        for ((lambda, a), b) in self
            .coefficients
            .iter()
            .zip(&self.a_basis)
            .zip(&self.b_basis)
        {
            for (x, av) in a.iter().enumerate() {
                for (y, bv) in b.iter().enumerate() {
                    out[x * db + y] += C64::new(*lambda, 0.0) * av * bv;
                }
            }
        }
        out
    }
}

/// Coefficients below this are treated as zero rank.
const SCHMIDT_CUTOFF: f64 = 1e-10;

/// Schmidt decomposition across the cut after the first `split` qubits,
/// computed from the eigendecomposition of the reduced state on side A.
pub fn schmidt(state: &StateVector, split: usize) -> Result<SchmidtDecomposition> {
    let n = state.qubit_count();
    if split == 0 || split >= n {
        return Err(Error::InvalidParameter(format!(
            "split {split} must satisfy 1 <= split < {n}"
        )));
    }
    let keep: Vec<usize> = (0..split).collect();
    let rho = DensityMatrix::from_pure(state);
    let rho_a = partial_trace(&rho, &keep)?;
    let (eigenvalues, vectors) = herm_eig(rho_a.matrix())?;

    let da = 1usize << split;
    let db = 1usize << (n - split);
    let mut coefficients = Vec::new();
    let mut a_basis = Vec::new();
    let mut b_basis = Vec::new();
    for (idx, mu) in eigenvalues.iter().enumerate() {
        if *mu <= SCHMIDT_CUTOFF {
            continue;
        }
        let lambda = mu.sqrt();
        let a: Vec<C64> = (0..da).map(|x| vectors.get(x, idx)).collect();
        // |b_i> = (<a_i| (x) I) |phi> / lambda
        let mut b = vec![C64::new(0.0, 0.0); db];
        for (x, av) in a.iter().enumerate() {
            for (y, slot) in b.iter_mut().enumerate() {
                *slot += av.conj() * state.amplitudes()[x * db + y];
            }
        }
        b.iter_mut().for_each(|v| *v /= lambda);
        coefficients.push(lambda);
        a_basis.push(a);
        b_basis.push(b);
    }
    Ok(SchmidtDecomposition {
        coefficients,
        a_basis,
        b_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::gates;
    use crate::math::matrix::inner;
    use crate::state::RandomSource;

    fn epr() -> StateVector {
        let mut s = StateVector::zero_state(2).unwrap();
        s.apply_gate(&gates::hadamard(), &[0]).unwrap();
        s.apply_gate(&gates::cnot(), &[0, 1]).unwrap();
        s
    }

    #[test]
    fn epr_reduces_to_maximally_mixed() {
        let rho = DensityMatrix::from_pure(&epr());
        let reduced = partial_trace(&rho, &[0]).unwrap();
        let half_identity = ComplexMatrix::identity(2).scale(C64::new(0.5, 0.0));
        assert!(reduced.matrix().max_entry_diff(&half_identity) < 1e-12);
    }

    #[test]
    fn product_state_reduces_to_factor() {
        let mut rng = RandomSource::new(6);
        let a = crate::state::random_state(1, &mut rng);
        let b = crate::state::random_state(2, &mut rng);
        let joint = a.tensor(&b).unwrap();
        let rho = DensityMatrix::from_pure(&joint);
        let reduced = partial_trace(&rho, &[0]).unwrap();
        let expected = DensityMatrix::from_pure(&a);
        assert!(reduced.matrix().max_entry_diff(expected.matrix()) < 1e-12);
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let mut rng = RandomSource::new(41);
        let state = crate::state::random_state(3, &mut rng);
        let rho = DensityMatrix::from_pure(&state);
        for keep in [vec![0], vec![1], vec![2], vec![0, 2]] {
            let reduced = partial_trace(&rho, &keep).unwrap();
            assert!((reduced.trace().re - 1.0).abs() < 1e-10);
            assert!(reduced.trace().im.abs() < 1e-10);
        }
    }

    #[test]
    fn partial_trace_rejects_degenerate_keep_sets() {
        let rho = DensityMatrix::from_pure(&epr());
        assert!(partial_trace(&rho, &[]).is_err());
        assert!(partial_trace(&rho, &[0, 1]).is_err());
    }

    #[test]
    fn epr_schmidt_coefficients() {
        let d = schmidt(&epr(), 1).unwrap();
        assert_eq!(d.rank(), 2);
        let r = 1.0 / 2.0f64.sqrt();
        assert!((d.coefficients[0] - r).abs() < 1e-10);
        assert!((d.coefficients[1] - r).abs() < 1e-10);
    }

    #[test]
    fn product_state_has_rank_one() {
        let mut rng = RandomSource::new(10);
        let a = crate::state::random_state(1, &mut rng);
        let b = crate::state::random_state(1, &mut rng);
        let joint = a.tensor(&b).unwrap();
        let d = schmidt(&joint, 1).unwrap();
        assert_eq!(d.rank(), 1);
        assert!((d.coefficients[0] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn embedded_two_by_three_example_matches_eigenvalue_oracle() {
        // (|0>_A |0>_B + |0>_A |1>_B + |1>_A |1>_B + |1>_A |2>_B) / 2 with
        // B's 3-dimensional space embedded in 2 qubits.
        let mut amps = vec![C64::new(0.0, 0.0); 8];
        amps[0b000] = C64::new(0.5, 0.0);
        amps[0b001] = C64::new(0.5, 0.0);
        amps[0b101] = C64::new(0.5, 0.0);
        amps[0b110] = C64::new(0.5, 0.0);
        let state = StateVector::from_amplitudes(3, amps).unwrap();

        let d = schmidt(&state, 1).unwrap();
        // Oracle: eigenvalues of rho_A computed independently.
        let rho_a = partial_trace(&DensityMatrix::from_pure(&state), &[0]).unwrap();
        let spectrum = rho_a.spectrum().unwrap();
        assert_eq!(d.rank(), 2);
        for (lambda, mu) in d.coefficients.iter().zip(&spectrum) {
            assert!((lambda * lambda - mu).abs() < 1e-10);
        }
    }

    #[test]
    fn schmidt_reconstructs_and_is_orthonormal() {
        let mut rng = RandomSource::new(12);
        for split in 1..3usize {
            let state = crate::state::random_state(3, &mut rng);
            let d = schmidt(&state, split).unwrap();
            // squares sum to 1
            let total: f64 = d.coefficients.iter().map(|l| l * l).sum();
            assert!((total - 1.0).abs() < 1e-9);
            // descending and positive
            for w in d.coefficients.windows(2) {
                assert!(w[0] >= w[1] - 1e-12);
            }
            assert!(d.coefficients.iter().all(|&l| l > 1e-10));
            // orthonormal bases
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((inner(&d.a_basis[i], &d.a_basis[j]).norm() - expect).abs() < 1e-8);
                    assert!((inner(&d.b_basis[i], &d.b_basis[j]).norm() - expect).abs() < 1e-8);
                }
            }
            // reconstruction within 1e-9
            let rebuilt = d.reconstruct();
            let err: f64 = rebuilt
                .iter()
                .zip(state.amplitudes())
                .map(|(x, y)| (x - y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(err < 1e-9, "reconstruction error {err}");
        }
    }

    #[test]
    fn reduced_eigenvalues_match_schmidt_squares() {
        let mut rng = RandomSource::new(77);
        let state = crate::state::random_state(4, &mut rng);
        let d = schmidt(&state, 2).unwrap();
        let rho_a =
            partial_trace(&DensityMatrix::from_pure(&state), &[0, 1]).unwrap();
        let spectrum = rho_a.spectrum().unwrap();
        for (lambda, mu) in d.coefficients.iter().zip(&spectrum) {
            assert!((lambda * lambda - mu).abs() < 1e-9);
        }
    }
}
