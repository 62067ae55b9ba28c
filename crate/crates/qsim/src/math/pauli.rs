//! The Pauli basis: single-qubit letters, weighted Pauli strings, and the
//! Hilbert-Schmidt decomposition of a matrix over that basis.

use crate::error::{Error, Result};
use crate::math::matrix::{tensor, ComplexMatrix};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [
        PauliLetter::I,
        PauliLetter::X,
        PauliLetter::Y,
        PauliLetter::Z,
    ];

    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'I' => Some(Self::I),
            'X' => Some(Self::X),
            'Y' => Some(Self::Y),
            'Z' => Some(Self::Z),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Self::I => 'I',
            Self::X => 'X',
            Self::Y => 'Y',
            Self::Z => 'Z',
        }
    }
}

/// The 2x2 matrix of a single Pauli letter.
pub fn pauli_matrix(letter: PauliLetter) -> ComplexMatrix {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    match letter {
        PauliLetter::I => ComplexMatrix::identity(2),
        PauliLetter::X => ComplexMatrix::from_rows(&[&[z, one], &[one, z]]),
        PauliLetter::Y => ComplexMatrix::from_rows(&[
            &[z, C64::new(0.0, -1.0)],
            &[C64::new(0.0, 1.0), z],
        ]),
        PauliLetter::Z => ComplexMatrix::from_rows(&[&[one, z], &[z, -one]]),
    }
}

/// A weighted n-qubit Pauli string; the first letter acts on the most
/// significant qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliString {
    pub letters: Vec<PauliLetter>,
    pub coefficient: C64,
}

impl PauliString {
    pub fn new(letters: Vec<PauliLetter>, coefficient: C64) -> Self {
        assert!(!letters.is_empty(), "Pauli string needs at least one letter");
        Self {
            letters,
            coefficient,
        }
    }

    /// Parses labels like `"XIZ"`.
    pub fn parse(label: &str, coefficient: C64) -> Result<Self> {
        let letters: Option<Vec<_>> = label.chars().map(PauliLetter::from_char).collect();
        match letters {
            Some(letters) if !letters.is_empty() => Ok(Self::new(letters, coefficient)),
            _ => Err(Error::InvalidParameter(format!(
                "invalid Pauli label {label:?}"
            ))),
        }
    }

    pub fn qubit_count(&self) -> usize {
        self.letters.len()
    }

    pub fn label(&self) -> String {
        self.letters.iter().map(|l| l.to_char()).collect()
    }

    /// Expands to the full `2^n x 2^n` matrix including the coefficient.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut acc = pauli_matrix(self.letters[0]);
        for l in &self.letters[1..] {
            acc = tensor(&acc, &pauli_matrix(*l));
        }
        acc.scale(self.coefficient)
    }
}

/// Index -> letters for the `idx`-th k-qubit Pauli string, base-4 digits with
/// the first qubit as the most significant digit (I=0, X=1, Y=2, Z=3).
pub fn pauli_string_letters(idx: usize, k: usize) -> Vec<PauliLetter> {
    let mut letters = vec![PauliLetter::I; k];
    let mut rest = idx;
    for slot in (0..k).rev() {
        letters[slot] = PauliLetter::ALL[rest % 4];
        rest /= 4;
    }
    letters
}

/// Coefficients `alpha_P` with `a = sum_P alpha_P P` over all k-qubit Pauli
/// strings, computed via the Hilbert-Schmidt inner product `Tr(P* A) / d`.
/// Ordering is base-4 as in [`pauli_string_letters`], so for one qubit the
/// result is on `(I, X, Y, Z)`.
pub fn pauli_decompose(a: &ComplexMatrix) -> Result<Vec<C64>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(
            "Pauli decomposition needs a square matrix".into(),
        ));
    }
    let d = a.rows();
    if d == 0 || d & (d - 1) != 0 {
        return Err(Error::DimensionMismatch(format!(
            "dimension {d} is not a power of two"
        )));
    }
    let k = d.trailing_zeros() as usize;
    let scale = C64::new(1.0 / d as f64, 0.0);
    let mut coefficients = Vec::with_capacity(1 << (2 * k));
    for idx in 0..(1usize << (2 * k)) {
        let p = PauliString::new(pauli_string_letters(idx, k), C64::new(1.0, 0.0)).to_matrix();
        // Pauli matrices are Hermitian, so Tr(P* A) = Tr(P A).
        coefficients.push(p.mul(a).trace() * scale);
    }
    Ok(coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_decomposes_to_unit_i_coefficient() {
        let coeffs = pauli_decompose(&ComplexMatrix::identity(2)).unwrap();
        assert!((coeffs[0] - C64::new(1.0, 0.0)).norm() < 1e-15);
        for c in &coeffs[1..] {
            assert!(c.norm() < 1e-15);
        }
    }

    #[test]
    fn small_phase_error_decomposition() {
        // diag(1, e^{i phi}) = e^{i phi/2} cos(phi/2) I - i e^{i phi/2} sin(phi/2) Z
        let phi = 0.7319f64;
        let e = ComplexMatrix::from_rows(&[
            &[C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
            &[C64::new(0.0, 0.0), C64::from_polar(1.0, phi)],
        ]);
        let coeffs = pauli_decompose(&e).unwrap();
        let half = C64::from_polar(1.0, phi / 2.0);
        let expected_i = half * C64::new((phi / 2.0).cos(), 0.0);
        let expected_z = C64::new(0.0, -1.0) * half * C64::new((phi / 2.0).sin(), 0.0);
        assert!((coeffs[0] - expected_i).norm() < 1e-12);
        assert!(coeffs[1].norm() < 1e-12);
        assert!(coeffs[2].norm() < 1e-12);
        assert!((coeffs[3] - expected_z).norm() < 1e-12);
    }

    #[test]
    fn hadamard_decomposition() {
        // Solving the four trace inner products by hand gives
        // H = (X + Z)/sqrt(2).
        let s = 1.0 / 2.0f64.sqrt();
        let h = ComplexMatrix::from_real_2x2(s, s, s, -s);
        let coeffs = pauli_decompose(&h).unwrap();
        assert!(coeffs[0].norm() < 1e-15);
        assert!((coeffs[1] - C64::new(s, 0.0)).norm() < 1e-15);
        assert!(coeffs[2].norm() < 1e-15);
        assert!((coeffs[3] - C64::new(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn unitary_coefficients_have_unit_square_sum() {
        // For every 2x2 unitary, sum_i |alpha_i|^2 = 1.
        let mut rng = crate::state::RandomSource::new(11);
        for _ in 0..50 {
            let u = crate::state::random_unitary(2, &mut rng);
            let coeffs = pauli_decompose(&u).unwrap();
            let total: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
            assert!((total - 1.0).abs() < 1e-10, "sum was {total}");
        }
    }

    #[test]
    fn reconstruction_from_coefficients() {
        let mut rng = crate::state::RandomSource::new(3);
        let entries: Vec<C64> = (0..16)
            .map(|_| C64::new(rng.next_f64() - 0.5, rng.next_f64() - 0.5))
            .collect();
        let a = ComplexMatrix::from_vec(4, 4, entries);
        let coeffs = pauli_decompose(&a).unwrap();
        let mut rebuilt = ComplexMatrix::zeros(4, 4);
        for (idx, c) in coeffs.iter().enumerate() {
            let p = PauliString::new(pauli_string_letters(idx, 2), *c).to_matrix();
            rebuilt = rebuilt.add(&p);
        }
        assert!(rebuilt.max_entry_diff(&a) < 1e-12);
    }

    #[test]
    fn rejects_non_power_of_two() {
        let a = ComplexMatrix::zeros(3, 3);
        assert!(pauli_decompose(&a).is_err());
    }
}
