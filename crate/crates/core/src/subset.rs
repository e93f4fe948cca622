use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of `{0, .., c-1}` stored as a bit mask; displayed 1-based.
///
/// Numeric order of the masks is colex order on subsets.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const MAX_SIZE: usize = 16;

    pub fn empty() -> Self {
        IndexSet(0)
    }

    /// `{0, .., c-1}`.
    pub fn full(c: usize) -> Self {
        assert!(c <= Self::MAX_SIZE);
        IndexSet(((1u64 << c) - 1) as u32)
    }

    pub fn from_mask(mask: u32) -> Self {
        IndexSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        IndexSet(indices.into_iter().fold(0, |m, i| {
            assert!(i < Self::MAX_SIZE);
            m | (1 << i)
        }))
    }

    /// Builds a set from 1-based labels, as printed.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::from_indices(labels.into_iter().map(|l| l - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        IndexSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        IndexSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Complement inside `{0, .., c-1}`.
    pub fn complement(self, c: usize) -> Self {
        IndexSet(Self::full(c).0 & !self.0)
    }

    pub fn is_subset_of(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// 1-based position of `j` in the sorted set `self ∪ {j}`.
    pub fn position_of(self, j: usize) -> usize {
        self.iter().filter(|&i| i < j).count() + 1
    }

    /// All subsets of `{0, .., c-1}` of size `k`, in colex order.
    pub fn subsets_of_size(c: usize, k: usize) -> Vec<IndexSet> {
        (0..1u32 << c).map(IndexSet).filter(|s| s.len() == k).collect()
    }

    /// All subsets of `{0, .., c-1}`, in colex order.
    pub fn all_subsets(c: usize) -> impl Iterator<Item = IndexSet> {
        (0..1u32 << c).map(IndexSet)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|i| i + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_and_positions() {
        let two = IndexSet::subsets_of_size(3, 2);
        let shown: Vec<String> = two.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{1,2}", "{1,3}", "{2,3}"]);
        let s = IndexSet::from_labels([1, 3]);
        assert_eq!(s.position_of(1), 2);
        assert_eq!(s.position_of(3), 3);
        assert_eq!(IndexSet::empty().position_of(0), 1);
        assert_eq!(s.complement(4).to_string(), "{2,4}");
    }
}
