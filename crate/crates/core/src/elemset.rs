//! Small subsets of a poset's carrier, stored as a 64-bit mask over element
//! indices (declaration order).

use std::fmt;

/// Index of an element in its poset's declaration order.
pub type Elem = usize;

/// Hard ceiling on carrier size imposed by the mask width.
pub const MAX_ELEMENTS: usize = 64;

/// A set of element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: Elem) -> Self {
        ElemSet(1u64 << x)
    }

    pub fn contains(self, x: Elem) -> bool {
        x < MAX_ELEMENTS && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: Elem) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: Elem) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(self, x: Elem) -> Self {
        ElemSet(self.0 | 1u64 << x)
    }

    pub fn without(self, x: Elem) -> Self {
        ElemSet(self.0 & !(1u64 << x))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest index in the set.
    pub fn first(self) -> Option<Elem> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Elem)
    }

    /// The only member, if the set is a singleton.
    pub fn single(self) -> Option<Elem> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as Elem)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = Elem;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as Elem;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a: ElemSet = [0, 2, 5].into_iter().collect();
        let b: ElemSet = [2, 3].into_iter().collect();
        assert_eq!(a.intersection(b).iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), vec![0, 5]);
        assert!(ElemSet::singleton(2).is_subset(b));
        assert_eq!(b.first(), Some(2));
        assert_eq!(ElemSet::singleton(7).single(), Some(7));
        assert_eq!(a.single(), None);
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(ElemSet::full(3).bits(), 0b111);
    }
}
