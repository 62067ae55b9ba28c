//! Hermitian eigendecomposition by cyclic Jacobi rotations, the Hermitian
//! matrix exponential, and operator-norm distances.

use crate::error::{Error, Result};
use crate::math::matrix::ComplexMatrix;
use crate::C64;

/// Off-diagonal Frobenius norm at which the Jacobi sweep stops.
const OFF_DIAGONAL_THRESHOLD: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Accepted deviation from Hermitian symmetry before the input is rejected;
/// within tolerance the matrix is symmetrized as `(h + h*) / 2`.
pub const HERMITICITY_TOL: f64 = 1e-9;

/// Dimension above which `op_norm_diff` switches from the Jacobi eigensolver
/// to power iteration on `D* D`.
const POWER_ITERATION_MIN_DIM: usize = 257;

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                acc += a.get(p, q).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues sorted descending and a unitary matrix whose columns
/// are the matching orthonormal eigenvectors, so `h = V D V*`. Under
/// degeneracy any orthonormal basis of the eigenspace may be returned.
pub fn herm_eig(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    h.check_hermitian(HERMITICITY_TOL)?;
    let mut a = h.symmetrized();
    let n = a.rows();
    let mut v = ComplexMatrix::identity(n);

    for _sweep in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= OFF_DIAGONAL_THRESHOLD {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r < 1e-300 {
                    continue;
                }
                let theta = apq.arg();
                let alpha = a.get(p, p).re;
                let beta = a.get(q, q).re;
                // Real Jacobi angle after rotating the pivot's phase away.
                let tau = (beta - alpha) / (2.0 * r);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let phase = C64::from_polar(1.0, -theta);
                let cs = C64::new(c, 0.0);
                let ss = C64::new(s, 0.0);

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    let new_kp = cs * akp - ss * phase * akq;
                    let new_kq = ss * akp + cs * phase * akq;
                    a.set(k, p, new_kp);
                    a.set(k, q, new_kq);
                    a.set(p, k, new_kp.conj());
                    a.set(q, k, new_kq.conj());
                }
                let new_pp = c * c * alpha + s * s * beta - 2.0 * c * s * r;
                let new_qq = s * s * alpha + c * c * beta + 2.0 * c * s * r;
                a.set(p, p, C64::new(new_pp, 0.0));
                a.set(q, q, C64::new(new_qq, 0.0));
                a.set(p, q, C64::new(0.0, 0.0));
                a.set(q, p, C64::new(0.0, 0.0));

                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, cs * vkp - ss * phase * vkq);
                    v.set(k, q, ss * vkp + cs * phase * vkq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let eigenvalues: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| eigenvalues[j].partial_cmp(&eigenvalues[i]).unwrap());

    let sorted_values: Vec<f64> = order.iter().map(|&i| eigenvalues[i]).collect();
    let mut sorted_vectors = ComplexMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for k in 0..n {
            sorted_vectors.set(k, new_col, v.get(k, old_col));
        }
    }
    Ok((sorted_values, sorted_vectors))
}

/// `e^{i h t}` for Hermitian `h`, computed by applying `e^{i lambda t}` to the
/// eigenvalues. The result is unitary.
pub fn herm_expm(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let (values, vectors) = herm_eig(h)?;
    let n = h.rows();
    // V diag(e^{i lambda t}) V*
    let mut scaled = vectors.clone();
    for (j, lambda) in values.iter().enumerate() {
        let phase = C64::from_polar(1.0, lambda * t);
        for k in 0..n {
            scaled.set(k, j, scaled.get(k, j) * phase);
        }
    }
    Ok(scaled.mul(&vectors.adjoint()))
}

fn largest_eigenvalue_power_iteration(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut best = 0.0f64;
    // A couple of deterministic starting vectors guard against an unlucky
    // start orthogonal to the top eigenspace.
    for attempt in 0..3u32 {
        let mut v: Vec<C64> = (0..n)
            .map(|i| {
                let x = 1.0 + ((i as f64 + 1.0) * (attempt as f64 + 1.0)).sin();
                C64::new(x, 0.0)
            })
            .collect();
        let norm = v.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|e| *e /= norm);
        let mut value = 0.0f64;
        for _ in 0..10_000 {
            let w = m.mul_vec(&v);
            let next: f64 = v.iter().zip(&w).map(|(a, b)| (a.conj() * b).re).sum();
            let norm = w.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-300 {
                value = 0.0;
                break;
            }
            v = w.into_iter().map(|e| e / norm).collect();
            if (next - value).abs() <= 1e-14 * next.abs().max(1.0) {
                value = next;
                break;
            }
            value = next;
        }
        best = best.max(value);
    }
    best
}

/// Operator-norm distance `||a - b||`, the largest singular value of the
/// difference. Computed through the eigendecomposition of `(a-b)*(a-b)`;
/// above dimension 256 a power iteration replaces the dense eigensolver.
pub fn op_norm_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let d = a.sub(b);
    let gram = d.adjoint().mul(&d);
    let top = if gram.rows() >= POWER_ITERATION_MIN_DIM {
        largest_eigenvalue_power_iteration(&gram)
    } else {
        let (values, _) = herm_eig(&gram)?;
        values.first().copied().unwrap_or(0.0)
    };
    Ok(top.max(0.0).sqrt())
}
