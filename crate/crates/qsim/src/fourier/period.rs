//! Period finding over a promised-periodic function, and the factoring
//! driver built on it.

use crate::classical::contfrac::best_approx;
use crate::classical::modarith::{gcd_u64, modexp_u64};
use crate::error::{Error, Result};
use crate::fourier::qft::qft_circuit;
use crate::query::oracle::FunctionOracle;
use crate::state::{measure_computational, RandomSource, StateVector};

/// Smallest power of two strictly above `n_squared`, with its exponent.
/// This is the register size `q` with `N^2 < q <= 2 N^2`.
pub fn period_register(modulus_bound: u64) -> (u64, usize) {
    let n_squared = modulus_bound * modulus_bound;
    let mut l = 0usize;
    let mut q = 1u64;
    while q <= n_squared {
        q <<= 1;
        l += 1;
    }
    (q, l)
}

/// Builds the oracle table for `f` over the period-finding address register
/// of `modulus_bound`, with `ceil(log2 modulus_bound)` value bits.
pub fn period_oracle(
    f: impl Fn(u64) -> u64,
    modulus_bound: u64,
) -> Result<FunctionOracle> {
    if modulus_bound < 2 {
        return Err(Error::InvalidParameter("modulus bound must be >= 2".into()));
    }
    let (q, _) = period_register(modulus_bound);
    let range_bits = (64 - (modulus_bound - 1).leading_zeros()) as usize;
    let table: Vec<u64> = (0..q).map(f).collect();
    FunctionOracle::new(table, range_bits.max(1))
}

#[derive(Debug, Clone, Copy)]
pub struct PeriodOutcome {
    pub period: u64,
    /// Number of quantum runs (each one query) before verification passed.
    pub runs: usize,
}

const PERIOD_RETRY_CAP: usize = 64;

/// One quantum sample of the period-finding circuit: returns the measured
/// address value `b`, which concentrates on multiples of `q/r`.
pub fn period_sample(
    oracle: &mut FunctionOracle,
    rng: &mut RandomSource,
) -> Result<u64> {
    let l = oracle.domain_bits();
    let m = oracle.range_bits();
    let uniform_amp = crate::C64::new(1.0 / ((1u64 << l) as f64).sqrt(), 0.0);
    let address =
        StateVector::from_amplitudes(l, vec![uniform_amp; 1 << l]).expect("uniform is normalized");
    let mut state = address.tensor(&StateVector::zero_state(m)?)?;
    oracle.apply(&mut state)?;

    let value_qubits: Vec<usize> = (l..l + m).collect();
    let (_, collapsed) = measure_computational(&state, &value_qubits, rng)?;
    let mut state = collapsed;
    for op in qft_circuit(l)?.ops() {
        state.apply_gate(&op.kind.unitary(), &op.targets)?;
    }
    let address_qubits: Vec<usize> = (0..l).collect();
    let (bits, _) = measure_computational(&state, &address_qubits, rng)?;
    let mut b = 0u64;
    for (i, &bit) in bits.iter().enumerate() {
        if bit {
            b |= 1 << (l - 1 - i);
        }
    }
    Ok(b)
}

/// Finds the period `r` of a function with `f(a) = f(b)` iff `a = b mod r`,
/// `r < modulus_bound`: samples `b`, recovers the candidate denominator by
/// continued fractions with denominators bounded by `modulus_bound`, and
/// verifies `f(0) = f(r)` (exact under the promise); repeats on failure.
pub fn find_period(
    oracle: &mut FunctionOracle,
    modulus_bound: u64,
    rng: &mut RandomSource,
) -> Result<PeriodOutcome> {
    let (q, l) = period_register(modulus_bound);
    if oracle.domain_bits() != l {
        return Err(Error::DimensionMismatch(format!(
            "oracle domain 2^{} does not match register 2^{l}",
            oracle.domain_bits()
        )));
    }
    for runs in 1..=PERIOD_RETRY_CAP {
        let b = period_sample(oracle, rng)?;
        let candidate = if b == 0 {
            1
        } else {
            best_approx(b, q, modulus_bound)?
                .denominator_u64()
                .unwrap_or(0)
        };
        if candidate >= 1 && candidate < q && oracle.eval(0) == oracle.eval(candidate) {
            return Ok(PeriodOutcome {
                period: candidate,
                runs,
            });
        }
    }
    Err(Error::RetryLimit(format!(
        "period finding: no verified candidate in {PERIOD_RETRY_CAP} runs"
    )))
}

const FACTOR_ATTEMPT_CAP: usize = 10;

/// Rejects primes by trial division; cheap at the scales this simulator
/// reaches.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Detects `n = c^k` by integer k-th roots for `k <= log2 n`.
fn prime_power_root(n: u64) -> Option<u64> {
    for k in 2..=63 - n.leading_zeros() as u64 {
        let c = (n as f64).powf(1.0 / k as f64).round() as u64;
        for candidate in [c.saturating_sub(1), c, c + 1] {
            if candidate >= 2 && candidate.pow(k as u32) == n {
                return Some(candidate);
            }
        }
    }
    None
}

/// Finds a nontrivial factor of an odd composite that is not a prime power:
/// random base, gcd shortcut, quantum period finding, and the
/// `gcd(x^{r/2} +- 1, n)` extraction. Retries up to a fixed attempt cap.
pub fn shor_factor(n: u64, rng: &mut RandomSource) -> Result<u64> {
    if n < 4 {
        return Err(Error::InvalidParameter("input must be at least 4".into()));
    }
    if n % 2 == 0 {
        return Err(Error::InvalidParameter("input must be odd".into()));
    }
    if is_prime(n) {
        return Err(Error::InvalidParameter(format!("{n} is prime")));
    }
    if let Some(c) = prime_power_root(n) {
        return Err(Error::InvalidParameter(format!(
            "{n} is a prime power with root {c}"
        )));
    }
    for _ in 0..FACTOR_ATTEMPT_CAP {
        let x = 2 + rng.next_index((n - 2) as usize) as u64;
        let g = gcd_u64(x, n);
        if g > 1 {
            // shares a factor with n; no quantum work needed
            return Ok(g);
        }
        let mut oracle = period_oracle(|a| modexp_u64(x, a, n), n)?;
        let Ok(outcome) = find_period(&mut oracle, n, rng) else {
            continue;
        };
        let r = outcome.period;
        if r % 2 != 0 {
            continue;
        }
        let y = modexp_u64(x, r / 2, n);
        if y == 1 || y == n - 1 {
            continue;
        }
        for candidate in [gcd_u64(y - 1, n), gcd_u64(y + 1, n)] {
            if candidate > 1 && candidate < n {
                return Ok(candidate);
            }
        }
    }
    Err(Error::RetryLimit(format!(
        "no factor of {n} found in {FACTOR_ATTEMPT_CAP} attempts"
    )))
}
