//! Binary-insertion sort with an early `continue` for keys already in order.
//!
//! Zero-based translation of the one-based procedure: the outer index runs
//! over `1..n` (one-based `2..=n`), the front guard compares against `a[0]`
//! (one-based `a[1]`) and the search covers `0..=i-1`.
//!
//! Counter mapping per outer iteration:
//! - step 2 (`a[i] >= a[i-1]`): one key comparison, always;
//! - step 3: `early_continues`;
//! - step 5 (front guard): one key comparison;
//! - step 7: `isearch_calls` and `isearch_probes`;
//! - step 10: one element move per shift;
//! - step 12: one element move and one placement.

use super::isearch::{faithful, upper_bound, Located};
use super::{Keyed, SortStats, SortVariant};

/// Sorts `a` in place and returns the exact step counts.
pub fn rahmani_sort(a: &mut [i32], variant: SortVariant) -> SortStats {
    rahmani_generic(a, variant, &mut |_, _| {})
}

/// Like [`rahmani_sort`], calling `observe(segment_len, probes)` after every
/// position search.
pub fn rahmani_sort_observed(a: &mut [i32], variant: SortVariant, mut observe: impl FnMut(usize, u32)) -> SortStats {
    rahmani_generic(a, variant, &mut observe)
}

pub(crate) fn rahmani_generic<T: Keyed>(
    a: &mut [T],
    variant: SortVariant,
    observe: &mut dyn FnMut(usize, u32),
) -> SortStats {
    let mut st = SortStats::default();
    let n = a.len();
    if n <= 1 {
        return st;
    }
    st.hold_aux(1);
    for i in 1..n {
        st.outer_iterations += 1;
        st.key_comparisons += 1;
        if a[i].key() >= a[i - 1].key() {
            st.early_continues += 1;
            continue;
        }
        let held = a[i];
        let key = held.key();
        st.key_comparisons += 1;
        let front = match variant {
            SortVariant::Faithful => key <= a[0].key(),
            SortVariant::Stable => key < a[0].key(),
        };
        let j = if front {
            0
        } else {
            st.isearch_calls += 1;
            let Located { index, probes } = match variant {
                SortVariant::Faithful => faithful(a, 0, i, key),
                SortVariant::Stable => upper_bound(a, 0, i, key),
            };
            st.isearch_probes += u64::from(probes);
            observe(i, probes);
            index
        };
        let mut k = i;
        while k > j {
            a[k] = a[k - 1];
            k -= 1;
        }
        st.element_moves += (i - j) as u64 + 1;
        a[j] = held;
        st.placements += 1;
    }
    st
}
