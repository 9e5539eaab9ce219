//! Non-attacking rook placements on staircase boards.
//!
//! A placement stores one column index per row (every row carries exactly
//! one rook, every column at most one). Rows and columns are 1-based,
//! rows counted from the top.

use alloc::vec::Vec;

use crate::shape::StaircaseShape;
use crate::{Error, Result};

/// A validated rook placement on a [`StaircaseShape`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RookPlacement {
    shape: StaircaseShape,
    /// `cols[j - 1]` is the column of the rook in row `j`.
    cols: Vec<usize>,
}

/// Occupancy of one block, slot by slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockContent {
    block: usize,
    /// `slots[j - 1]` is the row of the rook in local slot `j`, if any.
    slots: Vec<Option<usize>>,
}

/// How the occupied slots sit inside the blocks of a placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alignment {
    Left,
    Right,
    Both,
    Neither,
}

/// A chosen side, for the operations that come in a left and a right
/// flavour (aligned lifts, aligned placement counts).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl RookPlacement {
    /// Validates the given row-to-column assignment against the shape.
    pub fn new(shape: StaircaseShape, cols: Vec<usize>) -> Result<Self> {
        if cols.len() != shape.rows() {
            return Err(Error::RowCountMismatch { expected: shape.rows(), got: cols.len() });
        }
        let mut used = alloc::vec![false; shape.total_width() + 1];
        for (j, &col) in cols.iter().enumerate() {
            let row = j + 1;
            let width = shape.row_width(row);
            if col == 0 || col > width {
                return Err(Error::RookOutsideShape { row, col, width });
            }
            if used[col] {
                return Err(Error::RepeatedColumn { col });
            }
            used[col] = true;
        }
        Ok(RookPlacement { shape, cols })
    }

    pub fn shape(&self) -> &StaircaseShape {
        &self.shape
    }

    /// Row-to-column assignment, `cols()[j - 1]` being the rook of row `j`.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn rows(&self) -> usize {
        self.cols.len()
    }

    /// Row of the rook in the given global column, if the column holds one.
    pub fn row_in_column(&self, col: usize) -> Option<usize> {
        self.cols.iter().position(|&c| c == col).map(|j| j + 1)
    }

    /// Slot-by-slot occupancy of block `u`.
    pub fn block_content(&self, block: usize) -> Result<BlockContent> {
        let columns = self.shape.block_columns(block)?;
        let slots = columns.map(|col| self.row_in_column(col)).collect();
        Ok(BlockContent { block, slots })
    }

    /// Number of blocks holding exactly one rook.
    pub fn bor(&self) -> usize {
        (1..=self.shape.rows())
            .filter(|&u| {
                let content = self.block_content(u).expect("block in range");
                content.rook_count() == 1
            })
            .count()
    }

    /// Classifies the placement by whether every block's occupied slots
    /// form a prefix (left-aligned) or a suffix (right-aligned) of its
    /// slot list. A placement whose blocks are all empty or full is both.
    pub fn alignment(&self) -> Alignment {
        let mut left = true;
        let mut right = true;
        for u in 1..=self.shape.rows() {
            let content = self.block_content(u).expect("block in range");
            left &= content.occupied_is_prefix();
            right &= content.occupied_is_suffix();
            if !left && !right {
                return Alignment::Neither;
            }
        }
        match (left, right) {
            (true, true) => Alignment::Both,
            (true, false) => Alignment::Left,
            (false, true) => Alignment::Right,
            (false, false) => Alignment::Neither,
        }
    }

    /// True when the placement counts as aligned to the given side
    /// (placements aligned both ways qualify for either side).
    pub fn is_aligned(&self, side: Side) -> bool {
        matches!(
            (side, self.alignment()),
            (_, Alignment::Both) | (Side::Left, Alignment::Left) | (Side::Right, Alignment::Right)
        )
    }

    /// The placement obtained by keeping only the top `rows` rows (on the
    /// correspondingly shortened staircase).
    pub fn truncate(&self, rows: usize) -> RookPlacement {
        assert!(rows <= self.rows(), "cannot keep more rows than exist");
        let shape = StaircaseShape::new(self.shape.weights()[..rows].to_vec())
            .expect("prefix of valid weights");
        RookPlacement::new(shape, self.cols[..rows].to_vec())
            .expect("prefix of a valid placement")
    }
}

impl BlockContent {
    /// 1-based index of the block this content describes.
    pub fn block(&self) -> usize {
        self.block
    }

    /// Per-slot occupancy: `slots()[j - 1]` is the row of the rook in local
    /// slot `j`, or `None` for an empty slot.
    pub fn slots(&self) -> &[Option<usize>] {
        &self.slots
    }

    pub fn rook_count(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.rook_count() == 0
    }

    pub fn is_full(&self) -> bool {
        self.rook_count() == self.slots.len()
    }

    fn occupied_is_prefix(&self) -> bool {
        let count = self.rook_count();
        self.slots[..count].iter().all(|s| s.is_some())
    }

    fn occupied_is_suffix(&self) -> bool {
        let count = self.rook_count();
        self.slots[self.slots.len() - count..].iter().all(|s| s.is_some())
    }
}
