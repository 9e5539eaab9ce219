use core::fmt;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong when constructing or mapping the domain
/// objects. Constructors validate eagerly, so a value of any public type
/// always satisfies its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Staircase weight vectors must consist of positive integers.
    NonPositiveWeight { index: usize },
    /// A placement needs exactly one column entry per row.
    RowCountMismatch { expected: usize, got: usize },
    /// Rook outside the board: column exceeds the width of its row.
    RookOutsideShape { row: usize, col: usize, width: usize },
    /// Two rooks share a column.
    RepeatedColumn { col: usize },
    /// Block index outside `1..=n`.
    BlockOutOfRange { block: usize, blocks: usize },
    /// Column heights of a projected placement must be positive and weakly
    /// decreasing.
    BadHeights { index: usize },
    /// A projected placement must be square: as many rows as columns, with
    /// the tallest column spanning all rows.
    NotSquare { rows: usize, cols: usize },
    /// Rook sits in rows the column does not reach.
    RookAboveColumn { row: usize, col: usize, height: usize },
    /// A projected row or column without exactly one rook.
    MissingRook { col: usize },
    /// Tree vertex whose parent label is not smaller than its own.
    ParentNotSmaller { child: usize, parent: usize },
    /// Tree edge uses a slot outside the parent's arity.
    SlotOutOfRange { parent: usize, slot: usize, arity: usize },
    /// Two tree vertices claim the same (parent, slot) pair.
    SlotTaken { parent: usize, slot: usize },
    /// Arity vector and edge list disagree about the vertex count.
    EdgeCountMismatch { expected: usize, got: usize },
    /// Operation defined only for binary trees (every arity 2).
    NotBinary,
    /// Operation needs a tree with at least one vertex.
    EmptyTree,
    /// Operation needs a chain with at least one word.
    EmptyChain,
    /// A word over {U, D} with unequal step counts.
    Unbalanced { ups: usize, downs: usize },
    /// A prefix with more D than U steps.
    NegativePrefix { position: usize },
    /// `covers` compares words whose sizes differ by exactly one.
    SizeMismatch { small: usize, big: usize },
    /// Chain entry of the wrong size (entry `index` must have size
    /// `index + 1`).
    ChainSizeAt { index: usize, size: usize },
    /// Adjacent chain entries not related by a single D-to-U flip.
    NotCover { index: usize },
    /// Word is not a permutation of `1..=m`.
    NotPermutation { value: usize },
    /// Letter outside `1..=m`.
    LetterOutOfRange { letter: usize, len: usize },
    /// Operation needs a non-empty permutation.
    EmptyPermutation,
    /// Multiset word with the wrong number of copies of some value.
    WrongMultiplicity { value: usize, expected: usize, got: usize },
    /// Multiset multiplicities must all be positive.
    NonPositiveMultiplicity { value: usize },
    /// Word contains a 2-1-2 pattern.
    NotStirling,
    /// Polynomial has degree above the requested gamma basis.
    DegreeTooHigh { degree: usize, max: usize },
    /// Polynomial is not a combination of `x^k (x+1)^(n-2k)`.
    NotGammaExpressible,
    /// Placement operation restricted to double staircases (all weights 2).
    NotDoubleStaircase,
    /// Projected block of three or more equal-height columns: no staircase
    /// preimage exists.
    BlockTooWide { height: usize, size: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonPositiveWeight { index } => {
                write!(f, "staircase weight s_{index} must be positive")
            }
            Error::RowCountMismatch { expected, got } => {
                write!(f, "expected {expected} row entries, got {got}")
            }
            Error::RookOutsideShape { row, col, width } => {
                write!(f, "rook in row {row} at column {col}, but the row has width {width}")
            }
            Error::RepeatedColumn { col } => write!(f, "column {col} holds more than one rook"),
            Error::BlockOutOfRange { block, blocks } => {
                write!(f, "block {block} out of range (shape has {blocks} blocks)")
            }
            Error::BadHeights { index } => {
                write!(f, "column heights must be positive and weakly decreasing (column {index})")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "projected placement must be square, got {rows} rows and {cols} columns")
            }
            Error::RookAboveColumn { row, col, height } => {
                write!(f, "rook in row {row} at column {col}, but the column has height {height}")
            }
            Error::MissingRook { col } => write!(f, "column {col} has no rook"),
            Error::ParentNotSmaller { child, parent } => {
                write!(f, "vertex {child} attached to parent {parent}, labels must increase")
            }
            Error::SlotOutOfRange { parent, slot, arity } => {
                write!(f, "vertex {parent} has {arity} child slots, slot {slot} requested")
            }
            Error::SlotTaken { parent, slot } => {
                write!(f, "slot {slot} of vertex {parent} holds two children")
            }
            Error::EdgeCountMismatch { expected, got } => {
                write!(f, "expected {expected} edges, got {got}")
            }
            Error::NotBinary => write!(f, "operation defined only for binary trees"),
            Error::EmptyTree => write!(f, "operation needs a tree with at least one vertex"),
            Error::EmptyChain => write!(f, "operation needs a chain with at least one word"),
            Error::Unbalanced { ups, downs } => {
                write!(f, "word has {ups} U steps but {downs} D steps")
            }
            Error::NegativePrefix { position } => {
                write!(f, "prefix ending at position {position} has more D than U steps")
            }
            Error::SizeMismatch { small, big } => {
                write!(f, "cover test needs sizes n and n+1, got {small} and {big}")
            }
            Error::ChainSizeAt { index, size } => {
                write!(f, "chain entry {index} has size {size}, expected {}", index + 1)
            }
            Error::NotCover { index } => {
                write!(f, "chain entries {index} and {} are not related by a ribbon step", index + 1)
            }
            Error::NotPermutation { value } => {
                write!(f, "word is not a permutation: value {value} missing or repeated")
            }
            Error::LetterOutOfRange { letter, len } => {
                write!(f, "letter {letter} out of range for a word on {len} letters")
            }
            Error::EmptyPermutation => write!(f, "operation needs a non-empty permutation"),
            Error::WrongMultiplicity { value, expected, got } => {
                write!(f, "value {value} appears {got} times, expected {expected}")
            }
            Error::NonPositiveMultiplicity { value } => {
                write!(f, "multiplicity of value {value} must be positive")
            }
            Error::NotStirling => write!(f, "word contains a 2-1-2 pattern"),
            Error::DegreeTooHigh { degree, max } => {
                write!(f, "degree {degree} exceeds the basis bound {max}")
            }
            Error::NotGammaExpressible => {
                write!(f, "polynomial is not a combination of x^k (x+1)^(n-2k)")
            }
            Error::NotDoubleStaircase => {
                write!(f, "operation restricted to double staircases (all weights 2)")
            }
            Error::BlockTooWide { height, size } => {
                write!(f, "block of height {height} has {size} columns; at most 2 admit a preimage")
            }
        }
    }
}

impl core::error::Error for Error {}
