//! Classical numeric companions: radix-2 FFT and polynomial multiplication,
//! continued fractions, gcd and modular exponentiation, GF(2) linear algebra.

pub mod contfrac;
pub mod fft;
pub mod gf2;
pub mod modarith;

pub use contfrac::{best_approx, convergents, Fraction};
pub use fft::{fft, poly_multiply};
pub use gf2::{gf2_solve, Gf2Matrix};
pub use modarith::{gcd_u64, modexp_u64};
