//! Weighted staircase boards.
//!
//! A weight vector `s = (s_1, ..., s_n)` of positive integers describes a
//! Young diagram whose row `j` (rows numbered top to bottom) has width
//! `W_j = s_1 + ... + s_j`. The columns fall into `n` blocks: block `u`
//! consists of the `s_u` consecutive columns `W_{u-1}+1 ..= W_u`, all of
//! height `n - u + 1`, i.e. spanning rows `u ..= n`. Taking every weight
//! equal to 2 gives the double staircase with row widths `2, 4, ..., 2n`;
//! every weight equal to `k` gives the k-tuple staircase.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::{Error, Result};

/// A weighted staircase board. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StaircaseShape {
    weights: Vec<usize>,
    /// Prefix sums of `weights`; `widths[j]` is the width of row `j+1`.
    widths: Vec<usize>,
}

impl StaircaseShape {
    /// Builds the staircase with the given weight vector. Empty vectors are
    /// allowed and give the empty board.
    pub fn new(weights: Vec<usize>) -> Result<Self> {
        if let Some(index) = weights.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight { index: index + 1 });
        }
        let mut widths = Vec::with_capacity(weights.len());
        let mut total = 0;
        for &w in &weights {
            total += w;
            widths.push(total);
        }
        Ok(StaircaseShape { weights, widths })
    }

    /// The double staircase on `n` rows (row widths `2, 4, ..., 2n`).
    pub fn double(n: usize) -> Self {
        Self::uniform(2, n)
    }

    /// The k-tuple staircase on `n` rows; `k` must be positive.
    pub fn k_tuple(k: usize, n: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositiveWeight { index: 1 });
        }
        Ok(Self::uniform(k, n))
    }

    fn uniform(k: usize, n: usize) -> Self {
        let weights = alloc::vec![k; n];
        StaircaseShape::new(weights).expect("uniform positive weights")
    }

    /// Number of rows (equivalently of blocks).
    pub fn rows(&self) -> usize {
        self.weights.len()
    }

    /// The weight vector `s`.
    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Width `W_j` of row `j` (1-based, counted from the top).
    pub fn row_width(&self, row: usize) -> usize {
        self.widths[row - 1]
    }

    /// Total number of columns, `W_n`.
    pub fn total_width(&self) -> usize {
        self.widths.last().copied().unwrap_or(0)
    }

    /// Global column indices of block `u` (1-based).
    pub fn block_columns(&self, block: usize) -> Result<RangeInclusive<usize>> {
        if block == 0 || block > self.rows() {
            return Err(Error::BlockOutOfRange { block, blocks: self.rows() });
        }
        let start = if block == 1 { 1 } else { self.widths[block - 2] + 1 };
        Ok(start..=self.widths[block - 1])
    }

    /// Index of the block containing the global column `col`.
    pub fn block_of_column(&self, col: usize) -> Result<usize> {
        if col == 0 || col > self.total_width() {
            return Err(Error::RookOutsideShape { row: self.rows(), col, width: self.total_width() });
        }
        // widths is strictly increasing, so partition_point finds the block.
        Ok(self.widths.partition_point(|&w| w < col) + 1)
    }

    /// Height of block `u`: it spans rows `u ..= n`.
    pub fn block_height(&self, block: usize) -> usize {
        self.rows() - block + 1
    }

    /// True when every weight is 2 (the boards the Dyck-word machinery
    /// applies to).
    pub fn is_double(&self) -> bool {
        self.weights.iter().all(|&w| w == 2)
    }
}
