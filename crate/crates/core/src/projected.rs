//! Square rook placements on arbitrary Young diagrams.
//!
//! These are the images of double-staircase placements under the
//! empty-column projection: a Young diagram given by weakly decreasing
//! column heights, carrying exactly one rook in every row and every
//! column. Blocks are recomputed from the heights as maximal runs of
//! equal-height columns.

use alloc::vec::Vec;

use crate::{Error, Result};

/// A rook placement with one rook per row and per column on a Young
/// diagram described by its column heights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjectedPlacement {
    /// Weakly decreasing, positive column heights, left to right.
    heights: Vec<usize>,
    /// `cols[j - 1]` is the column of the rook in row `j` (rows 1-based,
    /// top to bottom; a column of height `h` spans the bottom `h` rows).
    cols: Vec<usize>,
}

/// A maximal run of equal-height columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnBlock {
    pub height: usize,
    /// 1-based index of the leftmost column of the run.
    pub start: usize,
    pub size: usize,
}

impl ProjectedPlacement {
    pub fn new(heights: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let n = heights.len();
        for i in 0..n {
            if heights[i] == 0 || (i > 0 && heights[i] > heights[i - 1]) {
                return Err(Error::BadHeights { index: i + 1 });
            }
        }
        let tallest = heights.first().copied().unwrap_or(0);
        if tallest != n {
            return Err(Error::NotSquare { rows: tallest, cols: n });
        }
        if cols.len() != n {
            return Err(Error::RowCountMismatch { expected: n, got: cols.len() });
        }
        let mut used = alloc::vec![false; n + 1];
        for (j, &col) in cols.iter().enumerate() {
            let row = j + 1;
            if col == 0 || col > n {
                return Err(Error::RookOutsideShape { row, col, width: n });
            }
            // Column of height h covers rows n-h+1 ..= n.
            if row < n - heights[col - 1] + 1 {
                return Err(Error::RookAboveColumn { row, col, height: heights[col - 1] });
            }
            if used[col] {
                return Err(Error::RepeatedColumn { col });
            }
            used[col] = true;
        }
        if let Some(col) = (1..=n).find(|&c| !used[c]) {
            return Err(Error::MissingRook { col });
        }
        Ok(ProjectedPlacement { heights, cols })
    }

    /// Number of rows (equals the number of columns).
    pub fn size(&self) -> usize {
        self.heights.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Row of the rook in the given column.
    pub fn row_in_column(&self, col: usize) -> Result<usize> {
        self.cols
            .iter()
            .position(|&c| c == col)
            .map(|j| j + 1)
            .ok_or(Error::MissingRook { col })
    }

    /// Maximal equal-height column runs, left to right.
    pub fn blocks(&self) -> Vec<ColumnBlock> {
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < self.heights.len() {
            let height = self.heights[i];
            let start = i;
            while i < self.heights.len() && self.heights[i] == height {
                i += 1;
            }
            blocks.push(ColumnBlock { height, start: start + 1, size: i - start });
        }
        blocks
    }

    /// Number of blocks consisting of a single column.
    pub fn bso(&self) -> usize {
        self.blocks().iter().filter(|b| b.size == 1).count()
    }
}
