//! Fixed-universe bitsets used for every subset in the crate: subsets of
//! posets, filters, sublocales.
//!
//! Sets are ordered lexicographically by their membership sequence starting
//! at element 0, with absence before presence. So over a 3-element universe
//! the order starts `{}`, `{2}`, `{1}`, `{1,2}`, `{0}`, ...

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

impl BitSet {
    pub fn empty(universe: usize) -> Self {
        let words = SmallVec::from_elem(0, universe.div_ceil(WORD));
        BitSet { universe, words }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(i);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut set = Self::empty(universe);
        for i in items {
            set.insert(i);
        }
        set
    }

    pub fn from_fn(universe: usize, mut member: impl FnMut(usize) -> bool) -> Self {
        Self::from_indices(universe, (0..universe).filter(|&i| member(i)))
    }

    /// Builds a set from the low bits of `mask`; bit `i` is element `i`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "mask constructor limited to 64 elements");
        let mut set = Self::empty(universe);
        if universe > 0 {
            set.words[0] = mask;
            set.trim();
        }
        set
    }

    /// Size of the ambient universe, not the number of members.
    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> BitSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &BitSet, op: impl Fn(u64, u64) -> u64) -> BitSet {
        debug_assert_eq!(self.universe, other.universe);
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect();
        BitSet { universe: self.universe, words }
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

pub struct Iter<'a> {
    set: &'a BitSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + tz);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for (&a, &b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    // the lowest differing element decides
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 { Ordering::Greater } else { Ordering::Less };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = BitSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.count(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(BitSet::full(130).count(), 130);
        assert_eq!(BitSet::full(130).complement(), BitSet::empty(130));
    }

    #[test]
    fn order_is_membership_lexicographic() {
        let sets: Vec<BitSet> = (0..8).map(|m| BitSet::from_mask(3, m)).collect();
        let mut sorted = sets.clone();
        sorted.sort();
        let seqs: Vec<Vec<bool>> = sorted
            .iter()
            .map(|s| (0..3).map(|i| s.contains(i)).collect())
            .collect();
        let mut expected = seqs.clone();
        expected.sort();
        assert_eq!(seqs, expected);
        assert_eq!(sorted[0], BitSet::empty(3));
        assert_eq!(sorted[1], BitSet::singleton(3, 2));
    }

    proptest! {
        #[test]
        fn set_algebra_matches_vec_bool(a in proptest::collection::vec(any::<bool>(), 0..150),
                                        seed in any::<u64>()) {
            let n = a.len();
            let b: Vec<bool> = (0..n).map(|i| (seed >> (i % 64)) & 1 == 1).collect();
            let sa = BitSet::from_fn(n, |i| a[i]);
            let sb = BitSet::from_fn(n, |i| b[i]);
            let uni = sa.union(&sb);
            let int = sa.intersection(&sb);
            let dif = sa.difference(&sb);
            for i in 0..n {
                prop_assert_eq!(uni.contains(i), a[i] || b[i]);
                prop_assert_eq!(int.contains(i), a[i] && b[i]);
                prop_assert_eq!(dif.contains(i), a[i] && !b[i]);
            }
            prop_assert_eq!(sa.is_subset(&sb), (0..n).all(|i| !a[i] || b[i]));
            prop_assert_eq!(sa.complement().complement(), sa.clone());
            prop_assert_eq!(sa.cmp(&sb), a.cmp(&b));
        }
    }
}
