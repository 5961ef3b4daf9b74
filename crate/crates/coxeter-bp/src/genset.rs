use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the simple generators, stored as a bitmask over 0-based indices.
///
/// Displayed and serialized with 1-based labels, matching the usual numbering
/// of Coxeter diagrams.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    /// The full set `{0, ..., rank-1}`.
    pub fn full(rank: usize) -> GenSet {
        if rank >= 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << rank) - 1)
        }
    }

    pub fn singleton(s: usize) -> GenSet {
        GenSet(1 << s)
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> GenSet {
        GenSet(it.into_iter().fold(0, |m, s| m | (1 << s)))
    }

    /// Builds a set from 1-based labels.
    pub fn from_labels<I: IntoIterator<Item = usize>>(it: I) -> GenSet {
        GenSet::from_indices(it.into_iter().map(|s| s - 1))
    }

    /// The interval of generators `{lo, ..., hi}` (0-based, inclusive); empty if `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> GenSet {
        GenSet::from_indices(lo..=hi)
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }
    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }
    pub fn remove(&mut self, s: usize) {
        self.0 &= !(1 << s);
    }
    pub fn with(self, s: usize) -> GenSet {
        GenSet(self.0 | 1 << s)
    }
    pub fn without(self, s: usize) -> GenSet {
        GenSet(self.0 & !(1 << s))
    }
    pub fn union(self, o: GenSet) -> GenSet {
        GenSet(self.0 | o.0)
    }
    pub fn intersection(self, o: GenSet) -> GenSet {
        GenSet(self.0 & o.0)
    }
    pub fn difference(self, o: GenSet) -> GenSet {
        GenSet(self.0 & !o.0)
    }
    pub fn is_subset(self, o: GenSet) -> bool {
        self.0 & !o.0 == 0
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Iterates over 0-based indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let s = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(s)
            }
        })
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|s| s + 1).collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some((c.wrapping_sub(full)) & full) };
            Some(GenSet(c))
        })
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s + 1)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        GenSet::from_indices(iter)
    }
}

impl Serialize for GenSet {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for GenSet {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(de)?;
        if v.iter().any(|&s| s == 0 || s > 32) {
            return Err(serde::de::Error::custom("generator labels are 1-based and at most 32"));
        }
        Ok(GenSet::from_labels(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = GenSet::from_indices([0, 2, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(GenSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(GenSet::from_indices([0, 2]).to_string(), "{1,3}");
        assert_eq!(GenSet::full(3).labels(), vec![1, 2, 3]);
    }

    #[test]
    fn serde_round_trip() {
        let s = GenSet::from_labels([2, 4]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, "[2,4]");
        let back: GenSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
