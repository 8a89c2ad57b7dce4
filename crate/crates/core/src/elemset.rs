//! Small bitmask sets over element indices of a finite semiring.

/// A subset of `{0, ..., order-1}` stored as a bitmask.
///
/// Orders handled by the subset-scanning operations are small (at most
/// [`SUBSET_SCAN_CAP`](crate::SUBSET_SCAN_CAP)), so 32 bits is plenty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u32);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ElemSet(bits)
    }

    pub fn full(order: usize) -> Self {
        debug_assert!(order <= 32);
        ElemSet(if order == 32 { u32::MAX } else { (1 << order) - 1 })
    }

    pub fn singleton(x: usize) -> Self {
        ElemSet(1 << x)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 & (1 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn with(self, x: usize) -> Self {
        ElemSet(self.0 | (1 << x))
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Iterate members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `{0, ..., order-1}` in ascending mask order.
    pub fn all_subsets(order: usize) -> impl Iterator<Item = ElemSet> {
        debug_assert!(order < 32);
        (0u32..(1 << order)).map(ElemSet)
    }

    /// All subsets of `self`, in ascending mask order.
    pub fn subsets(self) -> impl Iterator<Item = ElemSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            // enumerate submasks of `full` in increasing order
            next = if cur == full {
                None
            } else {
                Some(((cur | !full).wrapping_add(1)) & full)
            };
            Some(ElemSet(cur))
        })
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_ascending() {
        let s: ElemSet = [4, 0, 2].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 4]);
    }

    #[test]
    fn subsets_of_mask() {
        let s: ElemSet = [0, 2].into_iter().collect();
        let subs: Vec<u32> = s.subsets().map(|m| m.bits()).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
    }

    #[test]
    fn subset_relation() {
        let a: ElemSet = [1].into_iter().collect();
        let b: ElemSet = [0, 1].into_iter().collect();
        assert!(a.is_subset_of(b));
        assert!(!b.is_subset_of(a));
        assert!(a.is_subset_of(a));
    }
}
