//! Grover search and amplitude amplification.

use crate::circuit::{gates, Circuit};
use crate::error::{Error, Result};
use crate::query::oracle::BitOracle;
use crate::state::{RandomSource, StateVector};
use crate::C64;

/// Angle `theta = arcsin(sqrt(t/N))` of the initial good-state amplitude.
pub fn grover_angle(t: usize, n_total: usize) -> f64 {
    ((t as f64 / n_total as f64).sqrt()).asin()
}

/// Iteration count: nearest integer to `pi/(4 theta) - 1/2`, ties toward
/// even, clamped at zero.
pub fn grover_iterations(theta: f64) -> usize {
    let k = std::f64::consts::PI / (4.0 * theta) - 0.5;
    let rounded = k.round_ties_even();
    if rounded <= 0.0 {
        0
    } else {
        rounded as usize
    }
}

/// Success probability after `k` iterates.
pub fn grover_success_probability(t: usize, n_total: usize, k: usize) -> f64 {
    let theta = grover_angle(t, n_total);
    ((2 * k + 1) as f64 * theta).sin().powi(2)
}

/// One Grover iterate in place: the phase query, then the reflection through
/// the uniform state (`amp -> 2 mean - amp`). Counts one query.
pub fn grover_iterate_in_place(oracle: &mut BitOracle, amplitudes: &mut [C64]) {
    oracle.apply_phase_raw(amplitudes);
    let mean = amplitudes.iter().sum::<C64>() / amplitudes.len() as f64;
    for amp in amplitudes.iter_mut() {
        *amp = 2.0 * mean - *amp;
    }
}

/// Runs `k` iterates (for the optimal `k` given `t`) and returns the final
/// amplitude vector together with `k`. Deterministic; no sampling.
pub fn grover_state(oracle: &mut BitOracle, t: usize) -> Result<(Vec<C64>, usize)> {
    let n_total = oracle.len();
    if t == 0 || t > n_total {
        return Err(Error::InvalidParameter(format!(
            "solution count {t} outside 1..={n_total} (use grover_unknown_t for t = 0)"
        )));
    }
    let k = grover_iterations(grover_angle(t, n_total));
    let mut amps = vec![C64::new(1.0 / (n_total as f64).sqrt(), 0.0); n_total];
    for _ in 0..k {
        grover_iterate_in_place(oracle, &mut amps);
    }
    Ok((amps, k))
}

/// Grover search with a known solution count: runs the optimal number of
/// iterates and samples an index from the final state.
pub fn grover(oracle: &mut BitOracle, t: usize, rng: &mut RandomSource) -> Result<usize> {
    let (amps, _) = grover_state(oracle, t)?;
    let probs: Vec<f64> = amps.iter().map(|a| a.norm_sqr()).collect();
    Ok(rng.sample_distribution(&probs))
}

/// Grover search without a known solution count: runs the geometric guessing
/// schedule `t_hat = N, N/2, N/4, ..., 1`, classically verifying each
/// candidate. Returns `None` (correct with certainty when `t = 0`) if the
/// schedule finds nothing.
pub fn grover_unknown_t(oracle: &mut BitOracle, rng: &mut RandomSource) -> Result<Option<usize>> {
    let n_total = oracle.len();
    let mut t_hat = n_total;
    while t_hat >= 1 {
        let candidate = grover(oracle, t_hat, rng)?;
        if oracle.read(candidate) {
            return Ok(Some(candidate));
        }
        t_hat /= 2;
    }
    Ok(None)
}

/// Exact Grover for a known solution count, via the padded-database trick:
/// double the database with a rotated flag qubit so the initial good
/// amplitude can be tuned to make the optimal iteration count an integer.
/// Finds a solution with probability 1.
pub fn grover_exact(oracle: &mut BitOracle, t: usize, rng: &mut RandomSource) -> Result<usize> {
    let n = oracle.address_bits();
    let n_total = oracle.len();
    if t == 0 || t > n_total {
        return Err(Error::InvalidParameter("need 1 <= t <= N".into()));
    }
    let natural = grover_angle(t, n_total);
    // smallest integer round count whose exact angle fits under the natural one
    let k = (std::f64::consts::PI / (4.0 * natural) - 0.5).ceil().max(0.0) as usize;
    let theta = std::f64::consts::PI / (4 * k + 2) as f64;
    // p = (t/N) cos^2(gamma) = sin^2(theta)
    let cos_gamma = (theta.sin() * (n_total as f64 / t as f64).sqrt()).min(1.0);
    let gamma = cos_gamma.acos();

    // Registers: n address qubits then the pad qubit. Good states are
    // (solution address, pad = 0).
    let dim = 2 * n_total;
    let build_a_state = |amps: &mut Vec<C64>| {
        let a0 = C64::new(gamma.cos() / (n_total as f64).sqrt(), 0.0);
        let a1 = C64::new(gamma.sin() / (n_total as f64).sqrt(), 0.0);
        for j in 0..n_total {
            amps[2 * j] = a0;
            amps[2 * j + 1] = a1;
        }
    };
    let mut amps = vec![C64::new(0.0, 0.0); dim];
    build_a_state(&mut amps);

    // A^{-1} as passes: undo (H^{(x)n} (x) U_gamma).
    let apply_a_inverse_then_r_then_a = |oracle_bits: &[bool], amps: &mut Vec<C64>| {
        // A^{-1}: U_gamma^T on pad qubit, then H on each address qubit.
        rotate_pad(amps, -gamma);
        hadamard_address(amps, n);
        // R: minus on everything except |0...0>
        for (i, a) in amps.iter_mut().enumerate() {
            if i != 0 {
                *a = -*a;
            }
        }
        // A again
        hadamard_address(amps, n);
        rotate_pad(amps, gamma);
        let _ = oracle_bits;
    };

    for _ in 0..k {
        // phase flip on good states: solution address with pad 0
        oracle.apply_phase_padded(&mut amps);
        apply_a_inverse_then_r_then_a(&[], &mut amps);
        // global minus from the reflection pair keeps the rotation exact;
        // a global phase is unobservable, so leave it implicit.
    }

    let probs: Vec<f64> = amps.iter().map(|a| a.norm_sqr()).collect();
    let outcome = rng.sample_distribution(&probs);
    let index = outcome / 2;
    if !oracle.read(index) {
        return Err(Error::RetryLimit(
            "exact search sampled a non-solution; input violated parameters".into(),
        ));
    }
    Ok(index)
}

fn rotate_pad(amps: &mut [C64], gamma: f64) {
    let (c, s) = (gamma.cos(), gamma.sin());
    for pair in amps.chunks_mut(2) {
        let x0 = pair[0];
        let x1 = pair[1];
        pair[0] = c * x0 - s * x1;
        pair[1] = s * x0 + c * x1;
    }
}

fn hadamard_address(amps: &mut [C64], n: usize) {
    let r = 1.0 / 2.0f64.sqrt();
    for q in 0..n {
        // address qubit q sits at bit position n - q of the padded layout
        let half = 1usize << (n - q);
        let stride = half << 1;
        let mut base = 0;
        while base < amps.len() {
            for off in 0..half {
                let i = base + off;
                let j = i + half;
                let x = amps[i];
                let y = amps[j];
                amps[i] = r * (x + y);
                amps[j] = r * (x - y);
            }
            base += stride;
        }
    }
}

impl BitOracle {
    /// Phase flip on `(solution, pad = 0)` of the padded register; one query.
    fn apply_phase_padded(&mut self, amps: &mut [C64]) {
        debug_assert_eq!(amps.len(), 2 * self.len());
        for (i, &bit) in self.bits().iter().enumerate() {
            if bit {
                amps[2 * i] = -amps[2 * i];
            }
        }
        // account through the public counter path
        self.count_one_query();
    }
}

/// Amplitude amplification: boosts the good-subspace weight of `prep |0>`
/// from `p = sin^2(theta)` to `sin^2((2k+1) theta)`.
///
/// `good` is the phase-oracle predicate marking good basis states.
pub fn amplitude_amplify(
    prep: &Circuit,
    good: &dyn Fn(usize) -> bool,
    p: f64,
    rounds: Option<usize>,
) -> Result<StateVector> {
    if !(0.0..=1.0).contains(&p) || p == 0.0 {
        return Err(Error::InvalidParameter(format!(
            "success probability {p} outside (0, 1]"
        )));
    }
    let theta = p.sqrt().asin();
    let k = rounds.unwrap_or_else(|| grover_iterations(theta));
    let inverse = prep.inverse();
    let mut state = prep.simulate_basis(0)?;
    for _ in 0..k {
        for (i, amp) in state.amplitudes_mut().iter_mut().enumerate() {
            if good(i) {
                *amp = -*amp;
            }
        }
        state = inverse.simulate(&state)?;
        for (i, amp) in state.amplitudes_mut().iter_mut().enumerate() {
            if i != 0 {
                *amp = -*amp;
            }
        }
        state = prep.simulate(&state)?;
    }
    Ok(state)
}

/// Weight of the good subspace in a state.
pub fn good_weight(state: &StateVector, good: &dyn Fn(usize) -> bool) -> f64 {
    state
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(i, _)| good(*i))
        .map(|(_, a)| a.norm_sqr())
        .sum()
}

/// The diffusion operator `H^(x)n R H^(x)n = 2|U><U| - I` as a circuit-free
/// pass, exposed for matrix-level tests.
pub fn diffusion_matrix(n: usize) -> crate::math::matrix::ComplexMatrix {
    let dim = 1usize << n;
    let mut m = crate::math::matrix::ComplexMatrix::zeros(dim, dim);
    let two_over = 2.0 / dim as f64;
    for i in 0..dim {
        for j in 0..dim {
            let v = if i == j { two_over - 1.0 } else { two_over };
            m.set(i, j, C64::new(v, 0.0));
        }
    }
    m
}
