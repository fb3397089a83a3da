//! Binary search for the insertion point of a key inside a sorted segment.
//!
//! Indices here are zero-based and inclusive: `lower..=upper` is the segment
//! and the returned position lies in `lower..=upper + 1`. A one-based call
//! `ISEARCH(a, l, u, key)` returning `j` corresponds to
//! `isearch(a, l - 1, u - 1, key)` returning `j - 1`.

use super::Keyed;
use crate::error::ContractError;

/// Where a key belongs and how many middle elements were inspected to find it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Located {
    pub index: usize,
    pub probes: u32,
}

/// The search as originally formulated: a do-while loop that stops early when
/// the probed element equals the key and returns the slot just after it.
pub fn isearch(a: &[i32], lower: usize, upper: usize, key: i32) -> Result<Located, ContractError> {
    check_segment(a, lower, upper)?;
    Ok(faithful(a, lower, upper + 1, key))
}

/// Upper-bound search: the first slot in the segment holding a key greater than
/// `key`. Equal keys are never jumped over, which keeps insertion stable.
pub fn isearch_stable(a: &[i32], lower: usize, upper: usize, key: i32) -> Result<Located, ContractError> {
    check_segment(a, lower, upper)?;
    Ok(upper_bound(a, lower, upper + 1, key))
}

fn check_segment(a: &[i32], lower: usize, upper: usize) -> Result<(), ContractError> {
    if lower > upper {
        return Err(ContractError::EmptySegment { lower, upper });
    }
    if upper >= a.len() {
        return Err(ContractError::OutOfBounds {
            lower,
            upper,
            len: a.len(),
        });
    }
    if cfg!(debug_assertions) {
        if let Some(off) = a[lower..=upper].windows(2).position(|w| w[0] > w[1]) {
            return Err(ContractError::UnsortedSegment { index: lower + off });
        }
    }
    Ok(())
}

/// `end` is exclusive; the caller guarantees `lower < end`.
#[inline]
pub(crate) fn faithful<T: Keyed>(a: &[T], lower: usize, end: usize, key: i32) -> Located {
    debug_assert!(lower < end);
    let (mut lo, mut hi) = (lower, end);
    let mut probes = 0;
    loop {
        // floor((lower + upper) / 2) without the overflowing sum
        let mid = lo + (hi - 1 - lo) / 2;
        let probed = a[mid].key();
        probes += 1;
        if key == probed {
            return Located { index: mid + 1, probes };
        }
        if key < probed {
            hi = mid;
        } else {
            lo = mid + 1;
        }
        // the guard re-tests the stale mid, which can no longer be equal
        if !(lo < hi && key != probed) {
            break;
        }
    }
    Located { index: lo, probes }
}

#[inline]
pub(crate) fn upper_bound<T: Keyed>(a: &[T], lower: usize, end: usize, key: i32) -> Located {
    let (mut lo, mut hi) = (lower, end);
    let mut probes = 0;
    while lo < hi {
        let mid = lo + (hi - 1 - lo) / 2;
        probes += 1;
        if key < a[mid].key() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Located { index: lo, probes }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Linear-scan oracles over the closed segment.
    fn bracket_ok(a: &[i32], lower: usize, upper: usize, key: i32, j: usize) -> bool {
        (lower..=upper + 1).contains(&j) && (j == lower || a[j - 1] <= key) && (j == upper + 1 || key <= a[j])
    }

    fn linear_upper_bound(a: &[i32], lower: usize, upper: usize, key: i32) -> usize {
        (lower..=upper).find(|&k| a[k] > key).unwrap_or(upper + 1)
    }

    // one-based examples translated: returned j - 1
    #[test]
    fn faithful_examples() {
        let a = [10, 20, 30, 40];
        let r = isearch(&a, 0, 3, 25).unwrap();
        assert_eq!(r, Located { index: 2, probes: 2 });
        assert!(bracket_ok(&a, 0, 3, 25, r.index));
        let r = isearch(&a, 0, 3, 20).unwrap();
        assert_eq!(r, Located { index: 2, probes: 1 });
        assert_eq!(isearch(&[10, 30], 0, 1, 20).unwrap().index, 1);
    }

    #[test]
    fn stable_examples() {
        let a = [10, 20, 20, 40];
        assert_eq!(
            isearch_stable(&a, 0, 3, 20).unwrap().index,
            linear_upper_bound(&a, 0, 3, 20)
        );
        assert_eq!(isearch_stable(&a, 0, 3, 20).unwrap().index, 3);
        assert_eq!(isearch_stable(&[10, 30], 0, 1, 20).unwrap().index, 1);
        assert_eq!(isearch_stable(&[10, 20, 30], 0, 2, 35).unwrap().index, 3);
    }

    #[test]
    fn faithful_early_exit_can_land_inside_a_run_of_equals() {
        // first probe hits the middle 20, so the key goes after it but before the last 20
        let a = [20, 20, 20];
        assert_eq!(isearch(&a, 0, 2, 20).unwrap().index, 2);
        assert_eq!(isearch_stable(&a, 0, 2, 20).unwrap().index, 3);
    }

    #[test]
    fn contract_violations() {
        assert_eq!(
            isearch(&[1, 2], 1, 0, 5),
            Err(ContractError::EmptySegment { lower: 1, upper: 0 })
        );
        assert!(matches!(
            isearch(&[1, 2], 0, 2, 5),
            Err(ContractError::OutOfBounds { .. })
        ));
        assert_eq!(
            isearch_stable(&[1, 3, 2], 0, 2, 5),
            Err(ContractError::UnsortedSegment { index: 1 })
        );
    }

    #[test]
    fn searches_a_subsegment_only() {
        let a = [99, 1, 5, 9, -4];
        assert_eq!(isearch(&a, 1, 3, 6).unwrap().index, 3);
        assert_eq!(isearch_stable(&a, 1, 3, 0).unwrap().index, 1);
        assert_eq!(isearch_stable(&a, 1, 3, 100).unwrap().index, 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sorted_segment() -> impl Strategy<Value = Vec<i32>> {
            prop::collection::vec(-50i32..50, 1..200).prop_map(|mut v| {
                v.sort();
                v
            })
        }

        fn probe_bound(m: usize) -> u32 {
            m.ilog2() + 1
        }

        proptest! {
            #[test]
            fn faithful_brackets_key(a in sorted_segment(), key in -60i32..60) {
                let r = isearch(&a, 0, a.len() - 1, key).unwrap();
                prop_assert!(bracket_ok(&a, 0, a.len() - 1, key, r.index));
                prop_assert!(r.probes >= 1 && r.probes <= probe_bound(a.len()));
            }

            #[test]
            fn stable_is_maximal_bracket(a in sorted_segment(), key in -60i32..60) {
                let r = isearch_stable(&a, 0, a.len() - 1, key).unwrap();
                prop_assert_eq!(r.index, linear_upper_bound(&a, 0, a.len() - 1, key));
                prop_assert!(r.probes <= probe_bound(a.len()));
            }
        }
    }
}
