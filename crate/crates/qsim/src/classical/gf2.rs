//! GF(2) linear algebra: bit-vector rows, Gaussian elimination, and
//! nullspace bases. Row width is capped at 64 bits, which covers every use
//! in this crate.

use crate::error::{Error, Result};

/// A matrix over GF(2); each row is a bitmask, bit `i` being column `i`.
#[derive(Debug, Clone)]
pub struct Gf2Matrix {
    width: usize,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 || width > 64 {
            return Err(Error::InvalidParameter(format!(
                "width {width} outside 1..=64"
            )));
        }
        Ok(Self {
            width,
            rows: Vec::new(),
        })
    }

    pub fn from_rows(width: usize, rows: Vec<u64>) -> Result<Self> {
        let mut m = Self::new(width)?;
        for r in rows {
            m.push_row(r)?;
        }
        Ok(m)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn push_row(&mut self, row: u64) -> Result<()> {
        if self.width < 64 && row >> self.width != 0 {
            return Err(Error::InvalidParameter(format!(
                "row 0x{row:x} wider than {}",
                self.width
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0usize;
        for col in (0..self.width).rev() {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..rows.len() {
                if r != rank && rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    /// Adds a row only if it is linearly independent of the current rows;
    /// returns whether it was added.
    pub fn push_if_independent(&mut self, row: u64) -> Result<bool> {
        let before = self.rank();
        self.push_row(row)?;
        if self.rank() > before {
            Ok(true)
        } else {
            self.rows.pop();
            Ok(false)
        }
    }
}

/// Basis of the right nullspace `{ s : M s = 0 mod 2 }`, each vector a
/// bitmask. `rank + nullity = width` holds by construction.
pub fn gf2_solve(m: &Gf2Matrix) -> Vec<u64> {
    let width = m.width;
    let mut rows = m.rows.clone();
    // Reduced row echelon form, tracking the pivot column of each row.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in (0..width).rev() {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r] >> col & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let free_cols: Vec<usize> = (0..width).rev().filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &free in &free_cols {
        let mut v = 1u64 << free;
        // Back-substitute: each pivot row determines the pivot column's bit.
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let parity = (rows[r] & v).count_ones() & 1;
            if parity == 1 {
                v |= 1 << pc;
            }
        }
        basis.push(v);
    }
    basis
}
