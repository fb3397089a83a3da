use super::classic::selection_into;
use super::{Keyed, SortStats};

/// Quick sort with a median-of-three pivot and Hoare partitioning. Slices of
/// at most `cutoff` keys go to selection sort. Recurses into the smaller side
/// and loops on the larger one, so stack depth stays logarithmic.
pub fn quick_sort(a: &mut [i32], cutoff: usize) -> SortStats {
    quick_generic(a, cutoff)
}

pub(crate) fn quick_generic<T: Keyed>(a: &mut [T], cutoff: usize) -> SortStats {
    let mut st = SortStats::default();
    if a.len() > 1 {
        st.hold_aux(1);
    }
    recurse(a, cutoff, &mut st);
    st
}

fn recurse<T: Keyed>(mut a: &mut [T], cutoff: usize, st: &mut SortStats) {
    loop {
        let n = a.len();
        if n <= 1 {
            return;
        }
        if n <= cutoff {
            selection_into(a, st);
            return;
        }
        let split = partition(a, st);
        let (left, right) = a.split_at_mut(split);
        if left.len() < right.len() {
            recurse(left, cutoff, st);
            a = right;
        } else {
            recurse(right, cutoff, st);
            a = left;
        }
    }
}

fn swap<T: Keyed>(a: &mut [T], i: usize, j: usize, st: &mut SortStats) {
    a.swap(i, j);
    st.swaps += 1;
    st.element_moves += 2;
}

/// Returns `s` with `1 <= s < n` such that every key in `a[..s]` is at most
/// every key in `a[s..]`.
fn partition<T: Keyed>(a: &mut [T], st: &mut SortStats) -> usize {
    st.outer_iterations += 1;
    let hi = a.len() - 1;
    let mid = hi / 2;
    st.key_comparisons += 2;
    if a[mid].key() < a[0].key() {
        swap(a, 0, mid, st);
    }
    if a[hi].key() < a[mid].key() {
        swap(a, mid, hi, st);
        st.key_comparisons += 1;
        if a[mid].key() < a[0].key() {
            swap(a, 0, mid, st);
        }
    }
    let pivot = a[mid].key();

    let (mut i, mut j) = (0, hi);
    loop {
        while {
            st.key_comparisons += 1;
            a[i].key() < pivot
        } {
            i += 1;
        }
        while {
            st.key_comparisons += 1;
            a[j].key() > pivot
        } {
            j -= 1;
        }
        if i >= j {
            return j + 1;
        }
        swap(a, i, j, st);
        i += 1;
        j -= 1;
    }
}
