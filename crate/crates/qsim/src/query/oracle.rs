//! Query-counted black boxes: bit-string oracles `|i,b> -> |i, b xor x_i>`
//! and function-table oracles `|i,y> -> |i, y xor f(i)>`.
//!
//! Each application of an oracle unitary to a state counts one query;
//! building the explicit matrix of the unitary does not.

use crate::circuit::{GateKind, GateOp};
use crate::error::{Error, Result};
use crate::math::matrix::ComplexMatrix;
use crate::state::StateVector;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// `|i,b> -> |i, b xor x_i>` on n+1 qubits.
    Bit,
    /// `|i> -> (-1)^{x_i} |i>` on n qubits.
    Phase,
}

/// An N-bit input string behind a query counter, `N = 2^n`.
#[derive(Debug, Clone)]
pub struct BitOracle {
    bits: Vec<bool>,
    address_bits: usize,
    queries: u64,
}

impl BitOracle {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let n = bits.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "oracle length {n} is not a power of two >= 2"
            )));
        }
        Ok(Self {
            address_bits: n.trailing_zeros() as usize,
            bits,
            queries: 0,
        })
    }

    /// All-zero input of length `2^n`.
    pub fn zeros(address_bits: usize) -> Result<Self> {
        Self::new(vec![false; 1 << address_bits])
    }

    /// Input with exactly the given solution indices set.
    pub fn from_solutions(address_bits: usize, solutions: &[usize]) -> Result<Self> {
        let mut bits = vec![false; 1 << address_bits];
        for &s in solutions {
            if s >= bits.len() {
                return Err(Error::InvalidParameter(format!("solution {s} out of range")));
            }
            bits[s] = true;
        }
        Self::new(bits)
    }

    /// The parity input `x_i = i . a mod 2`.
    pub fn parity_of(address_bits: usize, a: u64) -> Result<Self> {
        let bits = (0..(1u64 << address_bits))
            .map(|i| (i & a).count_ones() % 2 == 1)
            .collect();
        Self::new(bits)
    }

    pub fn address_bits(&self) -> usize {
        self.address_bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Classical read; does not count as a quantum query.
    pub fn read(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn solution_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn query_count(&self) -> u64 {
        self.queries
    }

    pub fn reset_queries(&mut self) {
        self.queries = 0;
    }

    pub(crate) fn count_one_query(&mut self) {
        self.queries += 1;
    }

    /// Phase query on an n-qubit state: negates the amplitude of every
    /// marked index. Counts one query.
    pub fn apply_phase(&mut self, state: &mut StateVector) -> Result<()> {
        if state.qubit_count() != self.address_bits {
            return Err(Error::DimensionMismatch(format!(
                "phase oracle expects {} qubits",
                self.address_bits
            )));
        }
        self.queries += 1;
        for (amp, &bit) in state.amplitudes_mut().iter_mut().zip(&self.bits) {
            if bit {
                *amp = -*amp;
            }
        }
        Ok(())
    }

    /// Same phase pass on a raw amplitude slice (used by the tight Grover
    /// loop). Counts one query.
    pub fn apply_phase_raw(&mut self, amplitudes: &mut [C64]) {
        debug_assert_eq!(amplitudes.len(), self.bits.len());
        self.queries += 1;
        for (amp, &bit) in amplitudes.iter_mut().zip(&self.bits) {
            if bit {
                *amp = -*amp;
            }
        }
    }

    /// Bit query `|i,b> -> |i, b xor x_i>` on an (n+1)-qubit state, the last
    /// qubit being the target. Counts one query.
    pub fn apply_bit(&mut self, state: &mut StateVector) -> Result<()> {
        if state.qubit_count() != self.address_bits + 1 {
            return Err(Error::DimensionMismatch(format!(
                "bit oracle expects {} qubits",
                self.address_bits + 1
            )));
        }
        self.queries += 1;
        let amps = state.amplitudes_mut();
        for (i, &bit) in self.bits.iter().enumerate() {
            if bit {
                amps.swap(2 * i, 2 * i + 1);
            }
        }
        Ok(())
    }

    /// The oracle as an explicit gate usable in circuits.
    pub fn gate(&self, kind: OracleKind) -> GateOp {
        match kind {
            OracleKind::Phase => {
                let dim = self.bits.len();
                let mut m = ComplexMatrix::zeros(dim, dim);
                for (i, &bit) in self.bits.iter().enumerate() {
                    m.set(i, i, C64::new(if bit { -1.0 } else { 1.0 }, 0.0));
                }
                GateOp::new(GateKind::Custom(m), (0..self.address_bits).collect())
            }
            OracleKind::Bit => {
                let dim = 2 * self.bits.len();
                let mut m = ComplexMatrix::zeros(dim, dim);
                for (i, &bit) in self.bits.iter().enumerate() {
                    if bit {
                        m.set(2 * i, 2 * i + 1, C64::new(1.0, 0.0));
                        m.set(2 * i + 1, 2 * i, C64::new(1.0, 0.0));
                    } else {
                        m.set(2 * i, 2 * i, C64::new(1.0, 0.0));
                        m.set(2 * i + 1, 2 * i + 1, C64::new(1.0, 0.0));
                    }
                }
                GateOp::new(GateKind::Custom(m), (0..=self.address_bits).collect())
            }
        }
    }
}

/// A total function table `f: {0,1}^n -> {0,1}^m` behind a query counter.
#[derive(Debug, Clone)]
pub struct FunctionOracle {
    table: Vec<u64>,
    domain_bits: usize,
    range_bits: usize,
    queries: u64,
}

impl FunctionOracle {
    pub fn new(table: Vec<u64>, range_bits: usize) -> Result<Self> {
        let d = table.len();
        if d < 2 || !d.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "table length {d} is not a power of two >= 2"
            )));
        }
        if range_bits == 0 || range_bits > 32 {
            return Err(Error::InvalidParameter("range bits outside 1..=32".into()));
        }
        if table.iter().any(|&v| v >> range_bits != 0) {
            return Err(Error::InvalidParameter("table value exceeds range".into()));
        }
        Ok(Self {
            domain_bits: d.trailing_zeros() as usize,
            range_bits,
            table,
            queries: 0,
        })
    }

    pub fn domain_bits(&self) -> usize {
        self.domain_bits
    }

    pub fn range_bits(&self) -> usize {
        self.range_bits
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    /// Classical evaluation; does not count as a quantum query.
    pub fn eval(&self, a: u64) -> u64 {
        self.table[a as usize]
    }

    pub fn query_count(&self) -> u64 {
        self.queries
    }

    pub fn reset_queries(&mut self) {
        self.queries = 0;
    }

    /// `|i, y> -> |i, y xor f(i)>` on `domain_bits + range_bits` qubits, the
    /// address register on the most significant side. Counts one query.
    pub fn apply(&mut self, state: &mut StateVector) -> Result<()> {
        let total = self.domain_bits + self.range_bits;
        if state.qubit_count() != total {
            return Err(Error::DimensionMismatch(format!(
                "function oracle expects {total} qubits"
            )));
        }
        self.queries += 1;
        let range = 1usize << self.range_bits;
        let amps = state.amplitudes_mut();
        let mut scratch = vec![C64::new(0.0, 0.0); range];
        for (i, &f) in self.table.iter().enumerate() {
            let f = f as usize;
            if f == 0 {
                continue;
            }
            let base = i * range;
            scratch.copy_from_slice(&amps[base..base + range]);
            for (y, slot) in scratch.iter().enumerate() {
                amps[base + (y ^ f)] = *slot;
            }
        }
        Ok(())
    }
}
