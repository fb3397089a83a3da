use std::fmt;

/// Anything the instrumented sorts can order. Only the 32-bit key takes part
/// in comparisons; the rest of the value is carried along untouched.
pub trait Keyed: Copy {
    fn key(&self) -> i32;
}

impl Keyed for i32 {
    #[inline(always)]
    fn key(&self) -> i32 {
        *self
    }
}

/// A key tagged with its zero-based position in the input, used to observe
/// whether a sort keeps equal keys in arrival order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TaggedRecord {
    pub key: i32,
    pub arrival: usize,
}

impl TaggedRecord {
    pub fn new(key: i32, arrival: usize) -> Self {
        Self { key, arrival }
    }

    /// Tags `keys` with their input ordinals.
    pub fn tag_all(keys: &[i32]) -> Vec<TaggedRecord> {
        keys.iter()
            .enumerate()
            .map(|(arrival, &key)| TaggedRecord { key, arrival })
            .collect()
    }
}

impl Keyed for TaggedRecord {
    #[inline(always)]
    fn key(&self) -> i32 {
        self.key
    }
}

impl fmt::Display for TaggedRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.key, self.arrival)
    }
}
