//! Instrumented comparison sorts built around a binary-insertion sort with an
//! early exit for keys already in place, together with an exact step-count
//! cost model, reproducible dataset generation, a wall-clock benchmark
//! harness and SVG charting of its results.
//!
//! Keys are `i32`. All sorts work on slices and report a [`SortStats`] with
//! exact operation counts.

pub mod bench;
pub mod cost_model;
pub mod datagen;
pub mod error;
pub mod plot;
pub mod sort;
pub mod verify;

pub use error::{BenchError, ContractError, DatasetError, PlotError};
pub use sort::{AlgorithmId, SortStats, SortVariant, TaggedRecord};
