//! Finite posets and the order-theoretic operators on their subsets.
//!
//! A finite poset is also a finite Priestley space: its topology is
//! discrete, so every subset is clopen, every upset is a clopen upset and
//! the interior and closure operators of the Stone topology are identities.
//! The four operators `int1`, `cl1`, `int2`, `cl2` below are the interior
//! and closure of the open-upset and open-downset topologies under that
//! degeneration.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    /// `up[i]` is `{ j : i <= j }`.
    up: Vec<BitSet>,
    /// `down[i]` is `{ j : j <= i }`.
    down: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.up == other.up
    }
}

impl Eq for Poset {}

impl Poset {
    /// Validates a square boolean matrix where `le[i][j]` means `i <= j`.
    pub fn from_matrix(le: &[Vec<bool>]) -> Result<Poset> {
        let n = le.len();
        for (row, r) in le.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), n });
            }
        }
        Self::from_fn(n, |i, j| le[i][j])
    }

    /// Builds a poset from `(i, j)` pairs meaning `i <= j`. Reflexive pairs
    /// are added; transitive closure is not.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            le[i][j] = true;
        }
        Self::from_matrix(&le)
    }

    pub fn from_fn(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        for i in 0..n {
            if !le(i, i) {
                return Err(Error::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le(i, j) && le(j, i) {
                    return Err(Error::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !le(i, j) {
                    continue;
                }
                for k in 0..n {
                    if le(j, k) && !le(i, k) {
                        return Err(Error::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(Self::from_fn_unchecked(n, le))
    }

    pub(crate) fn from_fn_unchecked(n: usize, le: impl Fn(usize, usize) -> bool) -> Poset {
        let up = (0..n).map(|i| BitSet::from_fn(n, |j| le(i, j))).collect();
        let down = (0..n).map(|i| BitSet::from_fn(n, |j| le(j, i))).collect();
        Poset { n, up, down, labels: None }
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        Self::from_fn_unchecked(n, |i, j| i <= j)
    }

    pub fn antichain(n: usize) -> Poset {
        Self::from_fn_unchecked(n, |i, j| i == j)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.n {
            return Err(Error::LabelCount { found: labels.len(), n: self.n });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    /// `↑i` as a set.
    pub fn up_of(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    /// `↓i` as a set.
    pub fn down_of(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    /// All `(i, j)` with `i <= j`, including the reflexive pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| self.up[i].iter().map(move |j| (i, j))).collect()
    }

    /// Pairs `(i, j)` where `j` covers `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.up[i].iter() {
                if i == j {
                    continue;
                }
                let between = self.up[i].intersection(&self.down[j]);
                if between.count() == 2 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::empty(self.n)
    }

    pub fn whole(&self) -> BitSet {
        BitSet::full(self.n)
    }

    pub fn up_closure(&self, a: &BitSet) -> BitSet {
        let mut out = self.empty_set();
        for i in a {
            out.union_with(&self.up[i]);
        }
        out
    }

    pub fn down_closure(&self, a: &BitSet) -> BitSet {
        let mut out = self.empty_set();
        for i in a {
            out.union_with(&self.down[i]);
        }
        out
    }

    pub fn is_upset(&self, a: &BitSet) -> bool {
        a.iter().all(|i| self.up[i].is_subset(a))
    }

    pub fn is_downset(&self, a: &BitSet) -> bool {
        a.iter().all(|i| self.down[i].is_subset(a))
    }

    pub fn min_elements(&self) -> BitSet {
        BitSet::from_fn(self.n, |i| self.down[i].count() == 1)
    }

    pub fn max_elements(&self) -> BitSet {
        BitSet::from_fn(self.n, |i| self.up[i].count() == 1)
    }

    /// Interior in the open-upset topology: the largest upset inside `a`.
    pub fn int1(&self, a: &BitSet) -> BitSet {
        self.down_closure(&a.complement()).complement()
    }

    /// Closure in the open-upset topology: `↓a`.
    pub fn cl1(&self, a: &BitSet) -> BitSet {
        self.down_closure(a)
    }

    /// Interior in the open-downset topology: the largest downset inside `a`.
    pub fn int2(&self, a: &BitSet) -> BitSet {
        self.up_closure(&a.complement()).complement()
    }

    /// Closure in the open-downset topology: `↑a`.
    pub fn cl2(&self, a: &BitSet) -> BitSet {
        self.up_closure(a)
    }

    /// Every upset, ordered by size and then lexicographically, so the empty
    /// set comes first and the whole carrier last.
    pub fn upsets(&self) -> Vec<BitSet> {
        // Decide elements from the top down: an element may join only when
        // everything strictly above it is already in.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.down[i].count()));
        let mut out = Vec::new();
        let mut current = self.empty_set();
        self.upsets_rec(&order, 0, &mut current, &mut out);
        out.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));
        out
    }

    fn upsets_rec(&self, order: &[usize], pos: usize, current: &mut BitSet, out: &mut Vec<BitSet>) {
        if pos == order.len() {
            out.push(current.clone());
            return;
        }
        let x = order[pos];
        self.upsets_rec(order, pos + 1, current, out);
        if self.up[x].iter().all(|j| j == x || current.contains(j)) {
            current.insert(x);
            self.upsets_rec(order, pos + 1, current, out);
            current.remove(x);
        }
    }

    /// Longest strict chain ending at each element.
    pub fn depths(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| self.down[i].count());
        let mut depth = vec![0; self.n];
        for &i in &order {
            depth[i] = self.down[i]
                .iter()
                .filter(|&j| j != i)
                .map(|j| depth[j] + 1)
                .max()
                .unwrap_or(0);
        }
        depth
    }

    /// Relabels through `perm`: new element `p` is old element `perm[p]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let mut out = Self::from_fn_unchecked(self.n, |i, j| self.le(perm[i], perm[j]));
        out.labels = self
            .labels
            .as_ref()
            .map(|l| perm.iter().map(|&p| l[p].clone()).collect());
        out
    }

    /// Adds a new top-level element whose strict down-set is `below`, which
    /// must be a downset.
    pub fn extend_above(&self, below: &BitSet) -> Poset {
        debug_assert!(self.is_downset(below));
        let n = self.n;
        Self::from_fn_unchecked(n + 1, |i, j| {
            if i == n {
                j == n
            } else if j == n {
                below.contains(i)
            } else {
                self.le(i, j)
            }
        })
    }
}

/// An order-preserving total map between two posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap<'a> {
    source: &'a Poset,
    target: &'a Poset,
    table: Vec<usize>,
}

impl<'a> MonotoneMap<'a> {
    pub fn new(source: &'a Poset, target: &'a Poset, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.len() {
            return Err(Error::TableLength { expected: source.len(), found: table.len() });
        }
        if let Some(&index) = table.iter().find(|&&t| t >= target.len()) {
            return Err(Error::IndexOutOfRange { index, n: target.len() });
        }
        for (i, j) in source.pairs() {
            if !target.le(table[i], table[j]) {
                return Err(Error::NotMonotone(i, j));
            }
        }
        Ok(MonotoneMap { source, target, table })
    }

    pub(crate) fn new_unchecked(source: &'a Poset, target: &'a Poset, table: Vec<usize>) -> Self {
        MonotoneMap { source, target, table }
    }

    pub fn identity(poset: &'a Poset) -> Self {
        MonotoneMap { source: poset, target: poset, table: (0..poset.len()).collect() }
    }

    pub fn source(&self) -> &'a Poset {
        self.source
    }

    pub fn target(&self) -> &'a Poset {
        self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `f[a]`.
    pub fn image(&self, a: &BitSet) -> BitSet {
        BitSet::from_indices(self.target.len(), a.iter().map(|x| self.table[x]))
    }

    /// `f⁻¹(b)`.
    pub fn preimage(&self, b: &BitSet) -> BitSet {
        BitSet::from_fn(self.source.len(), |x| b.contains(self.table[x]))
    }

    /// `self` after `first`.
    pub fn after(&self, first: &MonotoneMap<'a>) -> Result<MonotoneMap<'a>> {
        if first.target != self.source {
            return Err(Error::Incompatible);
        }
        let table = first.table.iter().map(|&x| self.table[x]).collect();
        Ok(MonotoneMap { source: first.source, target: self.target, table })
    }

    /// Bounded morphism test: `↓f⁻¹(y) = f⁻¹(↓y)` for every `y`.
    pub fn is_pmorphism(&self) -> bool {
        self.pmorphism_witness().is_none()
    }

    /// A codomain point where the p-morphism equation fails.
    pub fn pmorphism_witness(&self) -> Option<usize> {
        (0..self.target.len()).find(|&y| {
            let fiber = self.preimage(&BitSet::singleton(self.target.len(), y));
            self.source.down_closure(&fiber) != self.preimage(self.target.down_of(y))
        })
    }
}

/// Enumerates all monotone maps `P -> Q` in lexicographic order of their
/// tables.
pub fn monotone_maps<'a>(source: &'a Poset, target: &'a Poset) -> MonotoneMaps<'a> {
    MonotoneMaps { source, target, table: Vec::with_capacity(source.len()), next_value: 0, done: false }
}

pub struct MonotoneMaps<'a> {
    source: &'a Poset,
    target: &'a Poset,
    table: Vec<usize>,
    next_value: usize,
    done: bool,
}

impl MonotoneMaps<'_> {
    fn fits(&self, value: usize) -> bool {
        let i = self.table.len();
        self.table.iter().enumerate().all(|(j, &tj)| {
            (!self.source.le(j, i) || self.target.le(tj, value))
                && (!self.source.le(i, j) || self.target.le(value, tj))
        })
    }
}

impl<'a> Iterator for MonotoneMaps<'a> {
    type Item = MonotoneMap<'a>;

    fn next(&mut self) -> Option<MonotoneMap<'a>> {
        if self.done {
            return None;
        }
        let n = self.source.len();
        let m = self.target.len();
        loop {
            if self.table.len() == n {
                let out = MonotoneMap::new_unchecked(self.source, self.target, self.table.clone());
                // backtrack for the next call
                match self.table.pop() {
                    Some(last) => self.next_value = last + 1,
                    None => self.done = true,
                }
                return Some(out);
            }
            let mut placed = false;
            while self.next_value < m {
                let v = self.next_value;
                if self.fits(v) {
                    self.table.push(v);
                    self.next_value = 0;
                    placed = true;
                    break;
                }
                self.next_value += 1;
            }
            if !placed {
                match self.table.pop() {
                    Some(last) => self.next_value = last + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}
