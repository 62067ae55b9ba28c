//! Path-sum amplitude evaluation: `<out| U_T ... U_1 |in>` as a sum over
//! intermediate basis-state sequences, in memory O(T n).
//!
//! The enumeration is depth-first over gate-local successor states: at each
//! gate only the basis states reachable through nonzero column entries are
//! expanded, so for permutation-like gates the tree stays narrow.

use crate::circuit::Circuit;
use crate::math::matrix::ComplexMatrix;
use crate::C64;

struct GateView {
    matrix: ComplexMatrix,
    /// Bit position (from the LSB) of each target.
    positions: Vec<usize>,
    /// For each gate column, the rows with nonzero entries.
    nonzero_rows: Vec<Vec<usize>>,
}

fn local_index(state: usize, positions: &[usize]) -> usize {
    let k = positions.len();
    let mut r = 0usize;
    for (j, &p) in positions.iter().enumerate() {
        r |= ((state >> p) & 1) << (k - 1 - j);
    }
    r
}

fn replace_local(state: usize, positions: &[usize], local: usize) -> usize {
    let k = positions.len();
    let mut s = state;
    for (j, &p) in positions.iter().enumerate() {
        let bit = (local >> (k - 1 - j)) & 1;
        s = (s & !(1 << p)) | (bit << p);
    }
    s
}

fn walk(views: &[GateView], depth: usize, state: usize, acc: C64, output: usize, total: &mut C64) {
    if depth == views.len() {
        if state == output {
            *total += acc;
        }
        return;
    }
    let view = &views[depth];
    let col = local_index(state, &view.positions);
    for &row in &view.nonzero_rows[col] {
        let entry = view.matrix.get(row, col);
        let next = replace_local(state, &view.positions, row);
        walk(views, depth + 1, next, acc * entry, output, total);
    }
}

/// Exact amplitude `<output| circuit |input>` for basis states, summing
/// `prod_j <i_j| U_j |i_{j-1}>` over all intermediate sequences.
pub fn path_sum_amplitude(circuit: &Circuit, input: usize, output: usize) -> C64 {
    let n = circuit.qubit_count();
    let views: Vec<GateView> = circuit
        .ops()
        .iter()
        .map(|op| {
            let matrix = op.kind.unitary();
            let positions = op.targets.iter().map(|&t| n - 1 - t).collect();
            let dim = matrix.rows();
            let nonzero_rows = (0..dim)
                .map(|col| {
                    (0..dim)
                        .filter(|&row| matrix.get(row, col).norm_sqr() > 0.0)
                        .collect()
                })
                .collect();
            GateView {
                matrix,
                positions,
                nonzero_rows,
            }
        })
        .collect();
    let mut total = C64::new(0.0, 0.0);
    walk(&views, 0, input, C64::new(1.0, 0.0), output, &mut total);
    total
}
