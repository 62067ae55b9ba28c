//! Radix-2 fast Fourier transform with the symmetric `1/sqrt(N)`
//! normalization on both directions, so the transform matrix has entries
//! `omega_N^{jk} / sqrt(N)` and forward-then-inverse is the identity.

use crate::error::{Error, Result};
use crate::C64;

/// Unitary-normalized DFT of a power-of-two-length vector. With
/// `inverse = true` the exponent is conjugated.
pub fn fft(v: &[C64], inverse: bool) -> Result<Vec<C64>> {
    let n = v.len();
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "fft length {n} is not a power of two"
        )));
    }
    let mut data = v.to_vec();
    fft_in_place(&mut data, inverse);
    // One factor 1/sqrt(2) per halving level gives 1/sqrt(N) overall.
    let scale = 1.0 / (n as f64).sqrt();
    data.iter_mut().for_each(|x| *x *= scale);
    Ok(data)
}

fn fft_in_place(data: &mut [C64], inverse: bool) {
    let n = data.len();
    if n <= 1 {
        return;
    }
    // Bit-reversal permutation, then iterative butterflies.
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            data.swap(i, j);
        }
    }
    let sign = if inverse { -1.0 } else { 1.0 };
    let mut len = 2;
    while len <= n {
        let angle = sign * 2.0 * std::f64::consts::PI / len as f64;
        let w_len = C64::from_polar(1.0, angle);
        for start in (0..n).step_by(len) {
            let mut w = C64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let u = data[start + k];
                let t = w * data[start + k + len / 2];
                data[start + k] = u + t;
                data[start + k + len / 2] = u - t;
                w *= w_len;
            }
        }
        len <<= 1;
    }
}

/// Coefficients of the product polynomial, by zero-padding to the next power
/// of two above `2d`, transforming, multiplying pointwise, transforming back,
/// and rescaling by `sqrt(N)`.
pub fn poly_multiply(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let result_len = a.len() + b.len() - 1;
    let n = result_len.next_power_of_two();
    let pad = |coeffs: &[f64]| {
        let mut v = vec![C64::new(0.0, 0.0); n];
        for (slot, &x) in v.iter_mut().zip(coeffs) {
            *slot = C64::new(x, 0.0);
        }
        v
    };
    let fa = fft(&pad(a), false).expect("power-of-two length");
    let fb = fft(&pad(b), false).expect("power-of-two length");
    let pointwise: Vec<C64> = fa.iter().zip(&fb).map(|(x, y)| x * y).collect();
    let back = fft(&pointwise, true).expect("power-of-two length");
    let scale = (n as f64).sqrt();
    back[..result_len].iter().map(|x| x.re * scale).collect()
}
