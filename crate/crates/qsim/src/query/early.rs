//! The early query algorithms: Deutsch-Jozsa, Bernstein-Vazirani, Simon.

use crate::circuit::gates;
use crate::classical::gf2::{gf2_solve, Gf2Matrix};
use crate::error::{Error, Result};
use crate::query::oracle::{BitOracle, FunctionOracle};
use crate::state::{measure_computational, RandomSource, StateVector};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DjVerdict {
    Constant,
    Balanced,
}

fn uniform_state(n: usize) -> StateVector {
    let dim = 1usize << n;
    let amp = C64::new(1.0 / (dim as f64).sqrt(), 0.0);
    StateVector::from_amplitudes(n, vec![amp; dim]).expect("uniform state is normalized")
}

fn hadamard_all(state: &mut StateVector) -> Result<()> {
    let h = gates::hadamard();
    for q in 0..state.qubit_count() {
        state.apply_gate(&h, &[q])?;
    }
    Ok(())
}

/// Decides constant vs balanced with certainty using exactly one query.
///
/// The input must satisfy the promise; the verdict is unspecified otherwise.
/// The verdict is `Constant` iff the final measurement would yield `0^n`,
/// which under the promise happens with probability 1 or 0.
pub fn deutsch_jozsa(oracle: &mut BitOracle) -> Result<DjVerdict> {
    let mut state = uniform_state(oracle.address_bits());
    oracle.apply_phase(&mut state)?;
    hadamard_all(&mut state)?;
    // amplitude of |0^n| is +-1 if constant, 0 if balanced
    Ok(if state.probability(0) > 0.5 {
        DjVerdict::Constant
    } else {
        DjVerdict::Balanced
    })
}

/// Recovers the hidden parity string from one query; the input must be a
/// parity function `x_i = i . a mod 2`.
pub fn bernstein_vazirani(oracle: &mut BitOracle) -> Result<u64> {
    let mut state = uniform_state(oracle.address_bits());
    oracle.apply_phase(&mut state)?;
    hadamard_all(&mut state)?;
    // final state is exactly |a>
    let (best, _) = state
        .amplitudes()
        .iter()
        .enumerate()
        .max_by(|(_, x), (_, y)| x.norm_sqr().partial_cmp(&y.norm_sqr()).unwrap())
        .expect("nonempty state");
    Ok(best as u64)
}

/// Outcome of a Simon run: the recovered mask and how many quantum runs
/// (= queries) were needed.
#[derive(Debug, Clone, Copy)]
pub struct SimonOutcome {
    pub mask: u64,
    pub runs: usize,
}

/// Builds a Simon-promise instance with hidden mask `s != 0`: `x_i = x_j`
/// iff `i = j` or `i = j xor s`. Returns the oracle; pair values are chosen
/// with the supplied randomness.
pub fn simon_instance(n: usize, s: u64, rng: &mut RandomSource) -> Result<FunctionOracle> {
    if s == 0 || s >> n != 0 {
        return Err(Error::InvalidParameter("mask must be nonzero n bits".into()));
    }
    let size = 1usize << n;
    let mut table = vec![u64::MAX; size];
    let mut values: Vec<u64> = (0..size as u64).collect();
    // random distinct value per coset; shuffle then take as needed
    for i in (1..values.len()).rev() {
        let j = rng.next_index(i + 1);
        values.swap(i, j);
    }
    let mut next = 0usize;
    for i in 0..size {
        if table[i] == u64::MAX {
            let v = values[next];
            next += 1;
            table[i] = v;
            table[i ^ s as usize] = v;
        }
    }
    FunctionOracle::new(table, n)
}

/// Simon's algorithm: repeats the quantum subroutine until `n-1` independent
/// equations `s . j = 0` are collected, then solves over GF(2).
///
/// Each run consumes one query. Runs are capped at `20 n`; exceeding the cap
/// under the promise is astronomically unlikely, but reported as an error.
pub fn simon(oracle: &mut FunctionOracle, rng: &mut RandomSource) -> Result<SimonOutcome> {
    let n = oracle.domain_bits();
    let m = oracle.range_bits();
    let mut equations = Gf2Matrix::new(n)?;
    let mut runs = 0usize;
    let cap = 20 * n;
    while equations.rows().len() < n - 1 {
        if runs >= cap {
            return Err(Error::RetryLimit(format!(
                "simon: {cap} runs without {} independent equations",
                n - 1
            )));
        }
        runs += 1;
        let j = simon_sample(oracle, rng)?;
        let _ = m;
        equations.push_if_independent(j)?;
    }
    let basis = gf2_solve(&equations);
    // rank n-1 leaves a one-dimensional nullspace {0, s}
    let mask = basis
        .into_iter()
        .find(|&v| v != 0)
        .ok_or_else(|| Error::RetryLimit("empty nullspace".into()))?;
    Ok(SimonOutcome { mask, runs })
}

/// One quantum run: returns a uniformly random `j` with `s . j = 0 mod 2`.
pub fn simon_sample(oracle: &mut FunctionOracle, rng: &mut RandomSource) -> Result<u64> {
    let n = oracle.domain_bits();
    let m = oracle.range_bits();
    // |0^n>|0^m> -> uniform address register -> oracle -> measure value
    let uniform = uniform_state(n);
    let mut state = uniform.tensor(&StateVector::zero_state(m)?)?;
    oracle.apply(&mut state)?;
    let value_qubits: Vec<usize> = (n..n + m).collect();
    let (_, collapsed) = measure_computational(&state, &value_qubits, rng)?;
    let mut first = collapsed;
    let h = gates::hadamard();
    for q in 0..n {
        first.apply_gate(&h, &[q])?;
    }
    let address_qubits: Vec<usize> = (0..n).collect();
    let (bits, _) = measure_computational(&first, &address_qubits, rng)?;
    let mut j = 0u64;
    for (l, &b) in bits.iter().enumerate() {
        if b {
            j |= 1 << (n - 1 - l);
        }
    }
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_inputs() {
        let mut zeros = BitOracle::zeros(4).unwrap();
        assert_eq!(deutsch_jozsa(&mut zeros).unwrap(), DjVerdict::Constant);
        assert_eq!(zeros.query_count(), 1);

        // all-ones: the |0^n> amplitude is -1, still constant
        let mut ones = BitOracle::new(vec![true; 16]).unwrap();
        assert_eq!(deutsch_jozsa(&mut ones).unwrap(), DjVerdict::Constant);
    }

    #[test]
    fn every_exactly_balanced_input_at_n3() {
        // all C(8,4) balanced inputs give verdict Balanced
        let n = 3usize;
        let size = 1usize << n;
        for mask in 0..(1u32 << size) {
            if mask.count_ones() as usize != size / 2 {
                continue;
            }
            let bits: Vec<bool> = (0..size).map(|i| mask >> i & 1 == 1).collect();
            let mut o = BitOracle::new(bits).unwrap();
            assert_eq!(deutsch_jozsa(&mut o).unwrap(), DjVerdict::Balanced);
            assert_eq!(o.query_count(), 1);
        }
    }

    #[test]
    fn bernstein_vazirani_recovers_parity_strings() {
        let mut o = BitOracle::parity_of(3, 0b110).unwrap();
        assert_eq!(bernstein_vazirani(&mut o).unwrap(), 0b110);
        assert_eq!(o.query_count(), 1);

        let mut zero = BitOracle::parity_of(4, 0).unwrap();
        assert_eq!(bernstein_vazirani(&mut zero).unwrap(), 0);

        let mut rng = RandomSource::new(3);
        for _ in 0..50 {
            let n = 2 + rng.next_index(6);
            let a = (rng.next_f64() * (1u64 << n) as f64) as u64;
            let mut o = BitOracle::parity_of(n, a).unwrap();
            assert_eq!(bernstein_vazirani(&mut o).unwrap(), a, "n={n} a={a}");
            assert_eq!(o.query_count(), 1);
        }
    }

    #[test]
    fn simon_textbook_instance() {
        // x_000 = x_111 = 000, x_001 = x_110 = 001, x_010 = x_101 = 010,
        // x_011 = x_100 = 011; the mask is 111.
        let table = vec![0b000, 0b001, 0b010, 0b011, 0b011, 0b010, 0b001, 0b000];
        let mut oracle = FunctionOracle::new(table, 3).unwrap();
        let mut rng = RandomSource::new(12);
        let outcome = simon(&mut oracle, &mut rng).unwrap();
        assert_eq!(outcome.mask, 0b111);
        assert_eq!(oracle.query_count(), outcome.runs as u64);
    }

    #[test]
    fn samples_always_orthogonal_to_mask() {
        let mut rng = RandomSource::new(5);
        let s = 0b1011u64;
        let mut oracle = simon_instance(4, s, &mut rng).unwrap();
        for _ in 0..1000 {
            let j = simon_sample(&mut oracle, &mut rng).unwrap();
            assert_eq!((j & s).count_ones() % 2, 0, "j={j:04b}");
        }
    }

    #[test]
    fn random_promise_instances_recover_mask() {
        let mut rng = RandomSource::new(8);
        for n in 2..=7usize {
            for _ in 0..5 {
                let s = 1 + rng.next_index((1 << n) - 1) as u64;
                let mut oracle = simon_instance(n, s, &mut rng).unwrap();
                let outcome = simon(&mut oracle, &mut rng).unwrap();
                assert_eq!(outcome.mask, s, "n={n}");
            }
        }
    }
}
