use super::classic::selection_into;
use super::{Keyed, SortStats};

/// Top-down merge sort. Slices of at most `cutoff` keys go to selection
/// sort; `cutoff = 0` gives the pure algorithm. One auxiliary buffer of up
/// to `n` keys is allocated per call and reused by every merge.
pub fn merge_sort(a: &mut [i32], cutoff: usize) -> SortStats {
    merge_generic(a, cutoff)
}

pub(crate) fn merge_generic<T: Keyed>(a: &mut [T], cutoff: usize) -> SortStats {
    let mut st = SortStats::default();
    let n = a.len();
    if n <= 1 {
        return st;
    }
    if n <= cutoff {
        selection_into(a, &mut st);
        return st;
    }
    // left halves are at most ceil(n/2) long
    let mut buf: Vec<T> = Vec::with_capacity(n.div_ceil(2));
    st.hold_aux(n.div_ceil(2) as u64);
    recurse(a, &mut buf, cutoff, &mut st);
    st
}

fn recurse<T: Keyed>(a: &mut [T], buf: &mut Vec<T>, cutoff: usize, st: &mut SortStats) {
    let n = a.len();
    if n <= 1 {
        return;
    }
    if n <= cutoff {
        selection_into(a, st);
        return;
    }
    let mid = n / 2;
    recurse(&mut a[..mid], buf, cutoff, st);
    recurse(&mut a[mid..], buf, cutoff, st);
    merge(a, mid, buf, st);
}

/// Merges the sorted runs `a[..mid]` and `a[mid..]`. The left run is parked in
/// `buf`; the output cursor never overtakes the unread right run.
fn merge<T: Keyed>(a: &mut [T], mid: usize, buf: &mut Vec<T>, st: &mut SortStats) {
    st.outer_iterations += 1;
    buf.clear();
    buf.extend_from_slice(&a[..mid]);
    st.element_moves += mid as u64;
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < buf.len() && j < a.len() {
        st.key_comparisons += 1;
        // ties take the left run first
        if a[j].key() < buf[i].key() {
            a[k] = a[j];
            j += 1;
        } else {
            a[k] = buf[i];
            i += 1;
        }
        k += 1;
        st.element_moves += 1;
    }
    let rest = buf.len() - i;
    a[k..k + rest].copy_from_slice(&buf[i..]);
    st.element_moves += rest as u64;
}
