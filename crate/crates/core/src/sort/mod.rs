//! Instrumented in-place comparison sorts over 32-bit keys.

mod classic;
mod isearch;
mod keyed;
mod merge;
mod quick;
mod rahmani;
mod stats;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

pub use classic::{bubble_sort, insertion_sort, selection_sort};
pub use isearch::{isearch, isearch_stable, Located};
pub use keyed::{Keyed, TaggedRecord};
pub use merge::merge_sort;
pub use quick::quick_sort;
pub use rahmani::{rahmani_sort, rahmani_sort_observed};
pub use stats::SortStats;

use crate::error::ContractError;

/// Size at or below which the hybrid quick and merge sorts hand a slice to
/// selection sort.
pub const DEFAULT_CUTOFF: usize = 16;

/// Which flavour of the binary-insertion sort to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SortVariant {
    /// Exactly as formulated: `<=` front guard and an early exit on the first
    /// equal probe. Not stable.
    #[default]
    Faithful,
    /// `<` front guard and an upper-bound search. Stable.
    Stable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmId {
    Bubble,
    Selection,
    Insertion,
    Merge,
    Quick,
    RahmaniFaithful,
    RahmaniStable,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 7] = [
        AlgorithmId::Bubble,
        AlgorithmId::Selection,
        AlgorithmId::Insertion,
        AlgorithmId::Merge,
        AlgorithmId::Quick,
        AlgorithmId::RahmaniFaithful,
        AlgorithmId::RahmaniStable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Bubble => "bubble",
            AlgorithmId::Selection => "selection",
            AlgorithmId::Insertion => "insertion",
            AlgorithmId::Merge => "merge",
            AlgorithmId::Quick => "quick",
            AlgorithmId::RahmaniFaithful => "rahmani-faithful",
            AlgorithmId::RahmaniStable => "rahmani-stable",
        }
    }

    /// Whether the algorithm keeps equal keys in arrival order. For merge
    /// sort this holds only for the pure form (`cutoff = 0`): the selection
    /// sort leaf swaps across equal keys.
    pub fn is_stable(self) -> bool {
        matches!(
            self,
            AlgorithmId::Bubble | AlgorithmId::Insertion | AlgorithmId::Merge | AlgorithmId::RahmaniStable
        )
    }

    /// Sorts without auxiliary key buffers.
    pub fn is_in_place(self) -> bool {
        self != AlgorithmId::Merge
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{0}`")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for AlgorithmId {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_owned()))
    }
}

/// Runs `alg` on `a` in place. `cutoff` only affects quick and merge sort.
pub fn run(alg: AlgorithmId, a: &mut [i32], cutoff: usize) -> SortStats {
    run_generic(alg, a, cutoff)
}

fn run_generic<T: Keyed>(alg: AlgorithmId, a: &mut [T], cutoff: usize) -> SortStats {
    match alg {
        AlgorithmId::Bubble => classic::bubble_generic(a),
        AlgorithmId::Selection => {
            let mut st = SortStats::default();
            classic::selection_into(a, &mut st);
            st
        }
        AlgorithmId::Insertion => classic::insertion_generic(a),
        AlgorithmId::Merge => merge::merge_generic(a, cutoff),
        AlgorithmId::Quick => quick::quick_generic(a, cutoff),
        AlgorithmId::RahmaniFaithful => rahmani::rahmani_generic(a, SortVariant::Faithful, &mut |_, _| {}),
        AlgorithmId::RahmaniStable => rahmani::rahmani_generic(a, SortVariant::Stable, &mut |_, _| {}),
    }
}

/// Sorts arrival-tagged records by key with the pure (`cutoff = 0`) forms of
/// the hybrid sorts.
pub fn sort_tagged(alg: AlgorithmId, records: &[TaggedRecord]) -> Result<Vec<TaggedRecord>, ContractError> {
    sort_tagged_with_cutoff(alg, records, 0)
}

pub fn sort_tagged_with_cutoff(
    alg: AlgorithmId,
    records: &[TaggedRecord],
    cutoff: usize,
) -> Result<Vec<TaggedRecord>, ContractError> {
    let mut seen = HashSet::with_capacity(records.len());
    if let Some(dup) = records.iter().find(|r| !seen.insert(r.arrival)) {
        return Err(ContractError::DuplicateArrival(dup.arrival));
    }
    let mut out = records.to_vec();
    run_generic(alg, &mut out, cutoff);
    Ok(out)
}

/// Index of the first `i` with `a[i] > a[i + 1]`, if any.
pub fn first_inversion(a: &[i32]) -> Option<usize> {
    a.windows(2).position(|w| w[0] > w[1])
}

/// True when equal keys appear in increasing arrival order.
pub fn preserves_arrival_order(sorted: &[TaggedRecord]) -> bool {
    sorted
        .windows(2)
        .all(|w| w[0].key != w[1].key || w[0].arrival < w[1].arrival)
}
