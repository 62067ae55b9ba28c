//! Matrix forms of the gate catalog.

use crate::error::Result;
use crate::math::matrix::ComplexMatrix;
use crate::C64;

pub fn hadamard() -> ComplexMatrix {
    let s = 1.0 / 2.0f64.sqrt();
    ComplexMatrix::from_real_2x2(s, s, s, -s)
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_2x2(0.0, 1.0, 1.0, 0.0)
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        &[C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
        &[C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
    ])
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_2x2(1.0, 0.0, 0.0, -1.0)
}

/// Phase gate: `|1>` picks up `e^{i phi}`.
pub fn r_phi(phi: f64) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        &[C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        &[C64::new(0.0, 0.0), C64::from_polar(1.0, phi)],
    ])
}

/// `R_s = diag(1, e^{2 pi i / 2^s})`; `R_1 = Z`, `R_2 = S`.
pub fn r_s(s: u32) -> ComplexMatrix {
    r_phi(2.0 * std::f64::consts::PI / (1u64 << s) as f64)
}

pub fn s_gate() -> ComplexMatrix {
    r_phi(std::f64::consts::FRAC_PI_2)
}

pub fn t_gate() -> ComplexMatrix {
    r_phi(std::f64::consts::FRAC_PI_4)
}

pub fn cnot() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        &[C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        &[C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        &[C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
        &[C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
    ])
}

pub fn cz() -> ComplexMatrix {
    controlled(&pauli_z()).expect("Z is unitary")
}

pub fn swap() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        &[C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        &[C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        &[C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        &[C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
    ])
}

pub fn toffoli() -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(8);
    m.set(6, 6, C64::new(0.0, 0.0));
    m.set(7, 7, C64::new(0.0, 0.0));
    m.set(6, 7, C64::new(1.0, 0.0));
    m.set(7, 6, C64::new(1.0, 0.0));
    m
}

/// Block-diagonal controlled-U: identity on the control-0 block, `u` on the
/// control-1 block.
pub fn controlled(u: &ComplexMatrix) -> Result<ComplexMatrix> {
    u.check_unitary(1e-9)?;
    let d = u.rows();
    let mut m = ComplexMatrix::identity(2 * d);
    for i in 0..d {
        for j in 0..d {
            m.set(d + i, d + j, u.get(i, j));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn controlled_x_is_cnot() {
        let cx = controlled(&pauli_x()).unwrap();
        assert!(cx.max_entry_diff(&cnot()) < 1e-15);
    }

    #[test]
    fn controlled_identity_is_identity() {
        let ci = controlled(&ComplexMatrix::identity(2)).unwrap();
        assert!(ci.max_entry_diff(&ComplexMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn controlled_z_flips_only_11() {
        // Entry-wise: |11> picks up a minus sign, everything else untouched.
        let m = controlled(&pauli_z()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = match (i, j) {
                    (3, 3) => C64::new(-1.0, 0.0),
                    (a, b) if a == b => C64::new(1.0, 0.0),
                    _ => C64::new(0.0, 0.0),
                };
                assert!((m.get(i, j) - expected).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn controlled_rejects_non_unitary() {
        let bad = ComplexMatrix::from_real_2x2(1.0, 1.0, 0.0, 1.0);
        assert!(controlled(&bad).is_err());
    }

    #[test]
    fn rs_ladder() {
        assert!(r_s(1).max_entry_diff(&pauli_z()) < 1e-15);
        assert!(r_s(2).max_entry_diff(&s_gate()) < 1e-15);
        assert!(r_s(3).max_entry_diff(&t_gate()) < 1e-15);
    }
}
