//! The quadratic baselines: insertion, bubble and selection sort.

use super::{Keyed, SortStats};

/// Straight insertion sort with a sequential backward scan.
///
/// Each evaluation of `key < a[i]` in the while guard is one key comparison;
/// the `i > 0` half of the guard short-circuits without touching keys.
pub fn insertion_sort(a: &mut [i32]) -> SortStats {
    insertion_generic(a)
}

pub(crate) fn insertion_generic<T: Keyed>(a: &mut [T]) -> SortStats {
    let mut st = SortStats::default();
    if a.len() <= 1 {
        return st;
    }
    st.hold_aux(1);
    for j in 1..a.len() {
        st.outer_iterations += 1;
        let held = a[j];
        let key = held.key();
        let mut i = j;
        while i > 0 {
            st.key_comparisons += 1;
            if key < a[i - 1].key() {
                a[i] = a[i - 1];
                st.element_moves += 1;
                i -= 1;
            } else {
                break;
            }
        }
        if i != j {
            a[i] = held;
            st.element_moves += 1;
            st.placements += 1;
        }
    }
    st
}

/// Bubble sort that stops after the first pass without a swap.
pub fn bubble_sort(a: &mut [i32]) -> SortStats {
    bubble_generic(a)
}

pub(crate) fn bubble_generic<T: Keyed>(a: &mut [T]) -> SortStats {
    let mut st = SortStats::default();
    let n = a.len();
    if n <= 1 {
        return st;
    }
    st.hold_aux(1);
    for pass in 1..n {
        st.outer_iterations += 1;
        let mut clean = true;
        for j in 0..n - pass {
            st.key_comparisons += 1;
            if a[j].key() > a[j + 1].key() {
                a.swap(j, j + 1);
                st.swaps += 1;
                st.element_moves += 2;
                clean = false;
            }
        }
        if clean {
            break;
        }
    }
    st
}

/// Selection sort. Always makes `n(n-1)/2` comparisons.
pub fn selection_sort(a: &mut [i32]) -> SortStats {
    let mut st = SortStats::default();
    selection_into(a, &mut st);
    st
}

/// Selection sort accumulating into `st`; also serves as the small-slice
/// leaf of the hybrid quick and merge sorts.
pub(crate) fn selection_into<T: Keyed>(a: &mut [T], st: &mut SortStats) {
    let n = a.len();
    if n <= 1 {
        return;
    }
    st.hold_aux(1);
    for i in 0..n - 1 {
        st.outer_iterations += 1;
        let mut min = i;
        for j in i + 1..n {
            st.key_comparisons += 1;
            if a[j].key() < a[min].key() {
                min = j;
            }
        }
        if min != i {
            a.swap(i, min);
            st.swaps += 1;
            st.element_moves += 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE_INPUT: [i32; 9] = [13, 4, 1, 45, 30, 8, 10, 7, 5];
    const EXAMPLE_OUTPUT: [i32; 9] = [1, 4, 5, 7, 8, 10, 13, 30, 45];

    #[test]
    fn definition_example() {
        let sorts: [fn(&mut [i32]) -> SortStats; 3] = [insertion_sort, bubble_sort, selection_sort];
        for sort in sorts {
            let mut a = EXAMPLE_INPUT;
            sort(&mut a);
            assert_eq!(a, EXAMPLE_OUTPUT);
        }
    }

    #[test]
    fn insertion_on_ascending_input() {
        let mut a: Vec<i32> = (0..100).collect();
        let st = insertion_sort(&mut a);
        assert_eq!(st.key_comparisons, 99);
        assert_eq!(st.element_moves, 0);
    }

    #[test]
    fn insertion_on_descending_input() {
        let mut a: Vec<i32> = (0..10).rev().collect();
        let st = insertion_sort(&mut a);
        // sum_{i=2..10} (i - 1)
        assert_eq!(st.shifts(), 45);
        assert_eq!(st.key_comparisons, 45);
        assert_eq!(st.placements, 9);
    }

    #[test]
    fn bubble_counts() {
        let mut a: Vec<i32> = (0..25).collect();
        let st = bubble_sort(&mut a);
        assert_eq!((st.key_comparisons, st.swaps, st.outer_iterations), (24, 0, 1));

        let mut b = [2, 1];
        let st = bubble_sort(&mut b);
        assert_eq!(b, [1, 2]);
        assert_eq!(st.swaps, 1);
        assert_eq!(st.element_moves, 2);
    }

    #[test]
    fn selection_is_input_oblivious() {
        for input in [[5, 4, 3, 2, 1], [1, 2, 3, 4, 5], [3, 3, 1, 9, 0]] {
            let mut a = input;
            assert_eq!(selection_sort(&mut a).key_comparisons, 10);
        }
        let mut one = [1];
        assert_eq!(selection_sort(&mut one), SortStats::default());
    }
}
