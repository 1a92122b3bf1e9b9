use thiserror::Error;

/// Errors raised by construction, conversion and parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be an odd prime >= 3, got {0}")]
    InvalidModulus(u64),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("inner row index {index} out of range [0, {limit})")]
    InnerRowOutOfRange { index: usize, limit: usize },

    #[error("design cell at row {row}, column {column} holds {count} points, expected {expected}")]
    MalformedCell {
        row: usize,
        column: usize,
        count: usize,
        expected: usize,
    },

    #[error("point {point} occurs {count} times in design column {column}, expected once")]
    ColumnCoverage {
        point: usize,
        column: usize,
        count: usize,
    },

    #[error("column count profile is not one symbol {deficient} times and the rest {full} times")]
    CountProfile { deficient: usize, full: usize },

    #[error("row 0 contains symbol {symbol} {count} times, expected {expected}")]
    NormalizationBalance {
        symbol: u64,
        count: usize,
        expected: usize,
    },

    #[error("index {index} out of range [0, {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("mapping is not a bijection: value {value} appears {count} times")]
    NotABijection { value: usize, count: usize },

    #[error("row 0 is the deficiency row and cannot be swapped")]
    DeficiencyRowSwap,

    #[error("document parse error: {0}")]
    Parse(String),

    #[error("document has wrong dimensions: {0}")]
    Dimension(String),

    #[error("entry {value} out of range [0, {limit}) at row {row}, column {column}")]
    EntryOutOfRange {
        value: u64,
        limit: u64,
        row: usize,
        column: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
