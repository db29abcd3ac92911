use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of `{1, ..., 64}` stored as a bitmask (bit `p - 1` for position `p`).
///
/// Used for subword positions, facets and monomial supports alike.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PositionSet(u64);

impl PositionSet {
    pub const EMPTY: PositionSet = PositionSet(0);

    pub fn from_bits(bits: u64) -> Self {
        PositionSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            PositionSet(u64::MAX)
        } else {
            PositionSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(p: usize) -> Self {
        assert!((1..=64).contains(&p), "position {p} out of range");
        PositionSet(1u64 << (p - 1))
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, p| s.with(p))
    }

    pub fn contains(self, p: usize) -> bool {
        (1..=64).contains(&p) && self.0 & (1u64 << (p - 1)) != 0
    }

    pub fn with(self, p: usize) -> Self {
        PositionSet(self.0 | Self::singleton(p).0)
    }

    pub fn without(self, p: usize) -> Self {
        PositionSet(self.0 & !Self::singleton(p).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        PositionSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PositionSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PositionSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = PositionSet> {
        let full = self.0;
        let mut sub = Some(full);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(PositionSet(cur))
        })
    }
}

impl fmt::Debug for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for PositionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for PositionSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_positions(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_ops() {
        let a = PositionSet::from_positions([1, 2, 4, 6]);
        let b = PositionSet::from_positions([1, 4, 6, 7]);
        assert_eq!(a.difference(b).to_vec(), vec![2]);
        assert_eq!(a.intersection(b).to_vec(), vec![1, 4, 6]);
        assert_eq!(a.min(), Some(1));
        assert_eq!(b.max(), Some(7));
        assert_eq!(a.to_string(), "{1,2,4,6}");
        assert_eq!(PositionSet::EMPTY.min(), None);
        assert_eq!(PositionSet::full(64).len(), 64);
        assert_eq!(PositionSet::singleton(64).max(), Some(64));
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = PositionSet::from_positions([2, 5, 7]);
        let mut subs: Vec<_> = s.subsets().collect();
        subs.sort();
        subs.dedup();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(PositionSet::EMPTY.subsets().count(), 1);
    }
}
