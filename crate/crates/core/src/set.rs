//! Small sets of positive integers, used for the set-valued statistics.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// A subset of `{1, ..., 63}` stored as a bitmask.
///
/// Every set-valued statistic here (places, letters, cycle minima) lives in
/// `[n]`, and all supported degrees are far below 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueSet(u64);

impl ValueSet {
    pub const MAX_VALUE: usize = 63;

    pub const fn empty() -> Self {
        ValueSet(0)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_VALUE);
        ValueSet(((1u64 << n) - 1) << 1)
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            (1..=Self::MAX_VALUE).contains(&v),
            "value {v} outside ValueSet range"
        );
        self.0 |= 1 << v;
    }

    pub fn contains(&self, v: usize) -> bool {
        v <= Self::MAX_VALUE && self.0 & (1 << v) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=Self::MAX_VALUE).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn bits(&self) -> u64 {
        self.0
    }
}

impl FromIterator<usize> for ValueSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ValueSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ValueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}
