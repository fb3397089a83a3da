use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::sort::AlgorithmId;

/// A caller broke the documented precondition of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    #[error("empty search segment: lower {lower} > upper {upper}")]
    EmptySegment { lower: usize, upper: usize },
    #[error("search segment {lower}..={upper} out of bounds for length {len}")]
    OutOfBounds { lower: usize, upper: usize, len: usize },
    #[error("search segment not sorted: a[{index}] > a[{next}]", next = index + 1)]
    UnsortedSegment { index: usize },
    #[error("duplicate arrival ordinal {0}")]
    DuplicateArrival(usize),
    #[error("expected a {expected} dataset, got {found}")]
    WrongCase {
        expected: &'static str,
        found: &'static str,
    },
    #[error("range bound {0} outside 1..=2147483648")]
    InvalidRange(u32),
    #[error("prediction and measurement disagree on {what}: {predicted} vs {measured}")]
    Mismatch {
        what: &'static str,
        predicted: String,
        measured: String,
    },
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{algorithm} produced unsorted output on {case} n={size} (first inversion at index {index})")]
    Unsorted {
        algorithm: AlgorithmId,
        case: &'static str,
        size: usize,
        index: usize,
    },
    #[error("invalid benchmark config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlotError {
    #[error("summary has no rows")]
    Empty,
    #[error("summary has no rows for case `{0}`")]
    MissingCase(&'static str),
}
