use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

/// Exact operation counters collected by every instrumented sort.
///
/// `key_comparisons` counts key-vs-key comparisons made by the sort body.
/// For the binary-insertion sort this is the sortedness check and the
/// front guard only; comparisons made inside the position search are
/// reported separately through `isearch_probes`.
///
/// `element_moves` counts assignments that relocate a key: each right-shift
/// plus the final placement of the held key. A swap counts as two moves.
/// A placement that writes a key back onto its own slot is not a move.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SortStats {
    pub key_comparisons: u64,
    pub element_moves: u64,
    pub isearch_calls: u64,
    pub isearch_probes: u64,
    pub early_continues: u64,
    pub outer_iterations: u64,
    /// Number of held-key placements (the `a[j] <- key` steps that moved a key).
    pub placements: u64,
    pub swaps: u64,
    /// Peak number of auxiliary key slots held outside the input slice.
    pub aux_keys: u64,
}

impl SortStats {
    /// Right-shift moves, i.e. element moves that are not final placements or swaps.
    pub fn shifts(&self) -> u64 {
        self.element_moves - self.placements - 2 * self.swaps
    }

    /// Checks the structural relations that must hold between the counters.
    pub fn is_consistent(&self) -> bool {
        (self.isearch_calls == 0 || self.isearch_probes >= self.isearch_calls)
            && self.early_continues <= self.outer_iterations
            && self.element_moves >= self.placements + 2 * self.swaps
    }

    pub(crate) fn hold_aux(&mut self, keys: u64) {
        self.aux_keys = self.aux_keys.max(keys);
    }
}

impl AddAssign for SortStats {
    fn add_assign(&mut self, rhs: Self) {
        self.key_comparisons += rhs.key_comparisons;
        self.element_moves += rhs.element_moves;
        self.isearch_calls += rhs.isearch_calls;
        self.isearch_probes += rhs.isearch_probes;
        self.early_continues += rhs.early_continues;
        self.outer_iterations += rhs.outer_iterations;
        self.placements += rhs.placements;
        self.swaps += rhs.swaps;
        self.aux_keys = self.aux_keys.max(rhs.aux_keys);
    }
}
