//! Error type shared by the whole crate.
//!
//! Row/column indices in messages are 1-based, matching the usual
//! (i, j) conventions for squares.

use std::fmt;

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Row or column, for violation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Column => write!(f, "column"),
        }
    }
}

/// One of the 2n + 2 lines whose sum a magic square constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
    Diagonal,
    Antidiagonal,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
            Line::Diagonal => write!(f, "main diagonal"),
            Line::Antidiagonal => write!(f, "antidiagonal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Wrong number of rows for the stated order.
    #[error("dimension error: expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },

    /// A row with the wrong number of cells.
    #[error("dimension error: expected {expected} cells in row {row}, found {found}")]
    Dimension {
        expected: usize,
        row: usize,
        found: usize,
    },

    /// Two squares that must share an order do not.
    #[error("dimension error: order {left} does not match order {right}")]
    OrderMismatch { left: usize, right: usize },

    /// An entry lies outside the allowed symbol range.
    #[error("entry {value} at row {row}, column {col} is outside 1..={max}")]
    OutOfRange {
        value: i64,
        row: usize,
        col: usize,
        max: i64,
    },

    /// A symbol occurs more than once in a row or column.
    #[error("symbol {symbol} repeats in {axis} {index}")]
    LatinViolation {
        axis: Axis,
        index: usize,
        symbol: i64,
    },

    /// A would-be magic square repeats a value.
    #[error("value {value} occurs more than once")]
    DuplicateValue { value: i64 },

    /// A line sum differs from the magic constant.
    #[error("{line} sums to {sum}, expected {expected}")]
    MagicViolation { line: Line, sum: i64, expected: i64 },

    /// Parameter outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Order not covered by the construction family.
    #[error("unsupported order {order}: {reason}")]
    UnsupportedOrder { order: usize, reason: String },

    /// Exhaustive search asked to go past its size limit.
    #[error("capacity error: order {order} exceeds the enumeration limit of {limit}")]
    Capacity { order: usize, limit: usize },

    /// A constructed value failed its own certification.
    #[error("construction error: {0}")]
    Construction(String),

    /// Malformed grid input.
    #[error("parse error: {0}")]
    Parse(String),
}
