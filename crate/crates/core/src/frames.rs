//! Finite frames and maps between them.
//!
//! A finite frame is the same thing as a finite bounded distributive
//! lattice: finite joins are all joins, so the infinite distributive law
//! reduces to binary distributivity. Frames are built by validating a poset
//! and precomputing meet, join and Heyting implication tables.

use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::duality::DualSpace;
use crate::error::{Error, Result};
use crate::order::Poset;

/// Above this size `preserves_all_meets` stops enumerating every subset and
/// checks top plus binary meets instead.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;

#[derive(Debug)]
pub struct Frame {
    poset: Poset,
    meet: Vec<u32>,
    join: Vec<u32>,
    imp: Vec<u32>,
    bottom: usize,
    top: usize,
    spectrum: OnceLock<DualSpace>,
}

impl Clone for Frame {
    fn clone(&self) -> Self {
        Frame {
            poset: self.poset.clone(),
            meet: self.meet.clone(),
            join: self.join.clone(),
            imp: self.imp.clone(),
            bottom: self.bottom,
            top: self.top,
            spectrum: OnceLock::new(),
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

impl Eq for Frame {}

impl Frame {
    pub fn from_poset(poset: Poset) -> Result<Frame> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = poset.down_of(a).intersection(poset.down_of(b));
                let m = lower
                    .iter()
                    .find(|&c| lower.is_subset(poset.down_of(c)))
                    .ok_or(Error::NoMeet(a, b))?;
                let upper = poset.up_of(a).intersection(poset.up_of(b));
                let j = upper
                    .iter()
                    .find(|&c| upper.is_subset(poset.up_of(c)))
                    .ok_or(Error::NoJoin(a, b))?;
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }
        let bottom = (0..n).find(|&i| poset.up_of(i).is_full()).expect("finite lattice has a bottom");
        let top = (0..n).find(|&i| poset.down_of(i).is_full()).expect("finite lattice has a top");
        for a in 0..n {
            for b in 0..n {
                for c in b + 1..n {
                    let lhs = meet[a * n + join[b * n + c] as usize];
                    let rhs = join[meet[a * n + b] as usize * n + meet[a * n + c] as usize];
                    if lhs != rhs {
                        return Err(Error::NotDistributive(a, b, c));
                    }
                }
            }
        }
        let mut imp = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                // ⋁{c : a ∧ c ≤ b}
                let mut acc = bottom;
                for c in 0..n {
                    if poset.le(meet[a * n + c] as usize, b) {
                        acc = join[acc * n + c] as usize;
                    }
                }
                imp[a * n + b] = acc as u32;
            }
        }
        Ok(Frame { poset, meet, join, imp, bottom, top, spectrum: OnceLock::new() })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.poset.le(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    /// Heyting implication `a → b`.
    #[inline]
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.len() + b] as usize
    }

    /// Meet of a set; the empty meet is top.
    pub fn meet_of_set<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a set; the empty join is bottom.
    pub fn join_of_set<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// `a ≰ b` always has a witness `c` with `a ∨ c = 1` and `b ∨ c ≠ 1`.
    pub fn is_subfit(&self) -> bool {
        self.subfit_witness().is_none()
    }

    /// A pair `(a, b)` with `a ≰ b` admitting no separating `c`.
    pub fn subfit_witness(&self) -> Option<(usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                if self.le(a, b) {
                    continue;
                }
                let separated = self
                    .elements()
                    .any(|c| self.join(a, c) == self.top && self.join(b, c) != self.top);
                if !separated {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub(crate) fn spectrum_cell(&self) -> &OnceLock<DualSpace> {
        &self.spectrum
    }
}

/// A total function between the carriers of two frames.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap<'a> {
    source: &'a Frame,
    target: &'a Frame,
    table: Vec<usize>,
}

impl<'a> LatticeMap<'a> {
    pub fn new(source: &'a Frame, target: &'a Frame, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.len() {
            return Err(Error::TableLength { expected: source.len(), found: table.len() });
        }
        if let Some(&index) = table.iter().find(|&&t| t >= target.len()) {
            return Err(Error::IndexOutOfRange { index, n: target.len() });
        }
        Ok(LatticeMap { source, target, table })
    }

    pub(crate) fn new_unchecked(source: &'a Frame, target: &'a Frame, table: Vec<usize>) -> Self {
        LatticeMap { source, target, table }
    }

    pub fn identity(frame: &'a Frame) -> Self {
        LatticeMap { source: frame, target: frame, table: frame.elements().collect() }
    }

    pub fn source(&self) -> &'a Frame {
        self.source
    }

    pub fn target(&self) -> &'a Frame {
        self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// `self` after `first`.
    pub fn after(&self, first: &LatticeMap<'a>) -> Result<LatticeMap<'a>> {
        if !std::ptr::eq(first.target, self.source) && first.target != self.source {
            return Err(Error::Incompatible);
        }
        let table = first.table.iter().map(|&x| self.table[x]).collect();
        Ok(LatticeMap { source: first.source, target: self.target, table })
    }

    pub fn is_monotone(&self) -> bool {
        self.source.poset().pairs().into_iter().all(|(a, b)| self.target.le(self.apply(a), self.apply(b)))
    }

    /// Bounded lattice homomorphism test: binary meets and joins, bottom
    /// and top. For finite frames this is exactly a frame homomorphism.
    pub fn is_frame_hom(&self) -> bool {
        let (s, t) = (self.source, self.target);
        if self.apply(s.bottom()) != t.bottom() || self.apply(s.top()) != t.top() {
            return false;
        }
        s.elements().all(|a| {
            (a..s.len()).all(|b| {
                self.apply(s.meet(a, b)) == t.meet(self.apply(a), self.apply(b))
                    && self.apply(s.join(a, b)) == t.join(self.apply(a), self.apply(b))
            })
        })
    }

    /// `h(⋀S) = ⋀h[S]` for every subset `S`.
    pub fn preserves_all_meets(&self) -> bool {
        let (s, t) = (self.source, self.target);
        if s.len() <= EXHAUSTIVE_SUBSET_LIMIT {
            all_subsets(s.len()).all(|sub| {
                self.apply(s.meet_of_set(sub.iter())) == t.meet_of_set(sub.iter().map(|x| self.apply(x)))
            })
        } else {
            self.apply(s.top()) == t.top()
                && s.elements().all(|a| {
                    (a..s.len()).all(|b| self.apply(s.meet(a, b)) == t.meet(self.apply(a), self.apply(b)))
                })
        }
    }

    /// `h(⋁S) = ⋁h[S]` for every subset `S`.
    pub fn preserves_all_joins(&self) -> bool {
        let (s, t) = (self.source, self.target);
        if s.len() <= EXHAUSTIVE_SUBSET_LIMIT {
            all_subsets(s.len()).all(|sub| {
                self.apply(s.join_of_set(sub.iter())) == t.join_of_set(sub.iter().map(|x| self.apply(x)))
            })
        } else {
            self.apply(s.bottom()) == t.bottom()
                && s.elements().all(|a| {
                    (a..s.len()).all(|b| self.apply(s.join(a, b)) == t.join(self.apply(a), self.apply(b)))
                })
        }
    }

    /// `r(b) = ⋁{a : h(a) ≤ b}`, checked against the adjunction law.
    pub fn right_adjoint(&self) -> Result<LatticeMap<'a>> {
        if !self.preserves_all_joins() {
            return Err(Error::NotJoinPreserving);
        }
        let (s, t) = (self.source, self.target);
        let table = t
            .elements()
            .map(|b| s.join_of_set(s.elements().filter(|&a| t.le(self.apply(a), b))))
            .collect();
        let r = LatticeMap { source: t, target: s, table };
        for a in s.elements() {
            for b in t.elements() {
                if t.le(self.apply(a), b) != s.le(a, r.apply(b)) {
                    return Err(Error::AdjunctionFailure(a, b));
                }
            }
        }
        Ok(r)
    }

    /// `ℓ(b) = ⋀{a : b ≤ h(a)}` when `h` preserves all meets.
    pub fn left_adjoint(&self) -> Option<LatticeMap<'a>> {
        if !self.preserves_all_meets() {
            return None;
        }
        let (s, t) = (self.source, self.target);
        let table = t
            .elements()
            .map(|b| s.meet_of_set(s.elements().filter(|&a| t.le(b, self.apply(a)))))
            .collect();
        let l = LatticeMap { source: t, target: s, table };
        debug_assert!(s
            .elements()
            .all(|a| t.elements().all(|b| s.le(l.apply(b), a) == t.le(b, self.apply(a)))));
        Some(l)
    }

    /// Characterization of right adjoints of frame homomorphisms: preserves
    /// all meets, reflects top, and `r(h(a) → b) = a → r(b)` for the left
    /// adjoint `h`.
    pub fn is_localic_map(&self) -> bool {
        let Some(h) = self.left_adjoint() else {
            return false;
        };
        let (m, l) = (self.source, self.target);
        let reflects_top = m.elements().all(|b| self.apply(b) != l.top() || b == m.top());
        reflects_top
            && l.elements().all(|a| {
                m.elements().all(|b| self.apply(m.imp(h.apply(a), b)) == l.imp(a, self.apply(b)))
            })
    }

    /// Preserves all meets and Heyting implication.
    pub fn is_complete_heyting_hom(&self) -> bool {
        self.preserves_all_meets() && self.heyting_witness().is_none()
    }

    /// A pair `(a, b)` with `h(a → b) ≠ h(a) → h(b)`.
    pub fn heyting_witness(&self) -> Option<(usize, usize)> {
        let (s, t) = (self.source, self.target);
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(s.imp(a, b)) != t.imp(self.apply(a), self.apply(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Frobenius reciprocity `ℓ(a ∧ h(b)) = ℓ(a) ∧ b`, for `ℓ` the left
    /// adjoint of `self`.
    pub fn frobenius_holds(&self, left: &LatticeMap<'a>) -> Result<bool> {
        Ok(self.frobenius_witness(left)?.is_none())
    }

    /// The first `(a, b)`, `a` in the target and `b` in the source, where
    /// Frobenius fails.
    pub fn frobenius_witness(&self, left: &LatticeMap<'a>) -> Result<Option<(usize, usize)>> {
        let (l, m) = (self.source, self.target);
        if left.source != m || left.target != l {
            return Err(Error::Incompatible);
        }
        for b in l.elements() {
            for a in m.elements() {
                if l.le(left.apply(a), b) != m.le(a, self.apply(b)) {
                    return Err(Error::AdjointMismatch(a, b));
                }
            }
        }
        for a in m.elements() {
            for b in l.elements() {
                if left.apply(m.meet(a, self.apply(b))) != l.meet(left.apply(a), b) {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }
}

fn all_subsets(n: usize) -> impl Iterator<Item = BitSet> {
    assert!(n < 64);
    (0u64..1 << n).map(move |mask| BitSet::from_mask(n, mask))
}

/// Enumerates every frame homomorphism `L -> M` by backtracking directly
/// over function tables, pruning on monotonicity and partial preservation.
/// Independent of the duality-based enumeration.
pub fn frame_homs_direct<'a>(source: &'a Frame, target: &'a Frame) -> Vec<LatticeMap<'a>> {
    let n = source.len();
    let mut out = Vec::new();
    let mut table: Vec<Option<usize>> = vec![None; n];
    table[source.bottom()] = Some(target.bottom());
    if source.top() != source.bottom() {
        table[source.top()] = Some(target.top());
    } else if target.top() != target.bottom() {
        return out;
    }
    let order: Vec<usize> = source.elements().filter(|&a| table[a].is_none()).collect();
    homs_rec(source, target, &order, 0, &mut table, &mut out);
    out
}

fn homs_rec<'a>(
    s: &'a Frame,
    t: &'a Frame,
    order: &[usize],
    pos: usize,
    table: &mut Vec<Option<usize>>,
    out: &mut Vec<LatticeMap<'a>>,
) {
    if pos == order.len() {
        let full: Vec<usize> = table.iter().map(|v| v.expect("assigned")).collect();
        let h = LatticeMap::new_unchecked(s, t, full);
        if h.is_frame_hom() {
            out.push(h);
        }
        return;
    }
    let a = order[pos];
    for v in t.elements() {
        table[a] = Some(v);
        let consistent = s.elements().all(|b| {
            let Some(hb) = table[b] else { return true };
            let ok_order = (!s.le(a, b) || t.le(v, hb)) && (!s.le(b, a) || t.le(hb, v));
            let ok_meet = table[s.meet(a, b)].map_or(true, |m| m == t.meet(v, hb));
            let ok_join = table[s.join(a, b)].map_or(true, |j| j == t.join(v, hb));
            ok_order && ok_meet && ok_join
        });
        if consistent {
            homs_rec(s, t, order, pos + 1, table, out);
        }
    }
    table[a] = None;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b4, c2, c3, chain_frame, m3, n5};

    // C3 = {0 < m < 1} is indexed 0, 1, 2. B4 = {0, a, b, 1} is indexed
    // 0, 1, 2, 3 with a, b the atoms.

    #[test]
    fn non_lattices_are_rejected() {
        assert!(matches!(Frame::from_poset(m3()), Err(Error::NotDistributive(..))));
        assert!(matches!(Frame::from_poset(n5()), Err(Error::NotDistributive(..))));
        assert!(matches!(Frame::from_poset(Poset::antichain(2)), Err(Error::NoMeet(0, 1))));
        assert_eq!(Frame::from_poset(Poset::antichain(0)), Err(Error::EmptyLattice));
        // two tops
        let v = Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(Frame::from_poset(v), Err(Error::NoJoin(1, 2)));
    }

    #[test]
    fn set_meets_and_joins() {
        let (c3, b4) = (c3(), b4());
        assert_eq!(c3.meet_of_set([]), c3.top());
        assert_eq!(c3.join_of_set([]), c3.bottom());
        assert_eq!(c3.join_of_set([0, 1]), 1);
        assert_eq!(b4.join_of_set([1, 2]), 3);
        assert_eq!(b4.meet_of_set([1, 2]), 0);
    }

    #[test]
    fn heyting_examples_against_brute_force() {
        let (c3, b4) = (c3(), b4());
        for l in [&c3, &b4] {
            for a in l.elements() {
                assert_eq!(l.imp(a, a), l.top());
                for b in l.elements() {
                    // greatest c with a ∧ c ≤ b, found by scanning
                    let cands: Vec<usize> = l.elements().filter(|&c| l.le(l.meet(a, c), b)).collect();
                    let greatest = cands.iter().copied().find(|&g| cands.iter().all(|&c| l.le(c, g)));
                    assert_eq!(Some(l.imp(a, b)), greatest);
                }
            }
        }
        assert_eq!(c3.imp(1, 0), 0);
        assert_eq!(b4.imp(1, 2), 2);
    }

    #[test]
    fn residuation_on_chains_and_boolean() {
        for l in [chain_frame(5), b4(), c2()] {
            for a in l.elements() {
                for b in l.elements() {
                    for x in l.elements() {
                        assert_eq!(l.le(x, l.imp(a, b)), l.le(l.meet(a, x), b));
                    }
                }
            }
        }
    }

    #[test]
    fn hom_examples() {
        let (c2, c3) = (c2(), c3());
        assert!(LatticeMap::identity(&c3).is_frame_hom());
        let incl = LatticeMap::new(&c2, &c3, vec![0, 2]).unwrap();
        assert!(incl.is_frame_hom());
        let up = LatticeMap::new(&c3, &c2, vec![0, 1, 1]).unwrap();
        let down = LatticeMap::new(&c3, &c2, vec![0, 0, 1]).unwrap();
        assert!(up.is_frame_hom() && down.is_frame_hom());
        for h in [&incl, &up, &down] {
            assert!(h.preserves_all_meets());
            assert!(h.preserves_all_joins());
        }
        assert!(LatticeMap::new(&c2, &c3, vec![0]).is_err());
    }

    #[test]
    fn monotone_non_hom_fails_meet_preservation() {
        // B4 -> C3 sending both atoms to m and top to 1: a ∧ b = 0 ↦ 0 but m ∧ m = m.
        let (b4, c3) = (b4(), c3());
        let h = LatticeMap::new(&b4, &c3, vec![0, 1, 1, 2]).unwrap();
        assert!(h.is_monotone());
        assert!(!h.preserves_all_meets());
        assert!(h.left_adjoint().is_none());
        assert!(LatticeMap::identity(&b4).preserves_all_meets());
    }

    #[test]
    fn adjoint_examples() {
        let (c2, c3) = (c2(), c3());
        let id = LatticeMap::identity(&c3);
        assert_eq!(id.right_adjoint().unwrap(), id);
        assert_eq!(id.left_adjoint().unwrap(), id);
        let incl = LatticeMap::new(&c2, &c3, vec![0, 2]).unwrap();
        assert_eq!(incl.right_adjoint().unwrap().table(), &[0, 0, 1]);
        let down = LatticeMap::new(&c3, &c2, vec![0, 0, 1]).unwrap();
        let l = down.left_adjoint().unwrap();
        assert_eq!(l.table(), &[0, 2]);
        // not join preserving
        let bad = LatticeMap::new(&c3, &c2, vec![1, 1, 1]).unwrap();
        assert_eq!(bad.right_adjoint(), Err(Error::NotJoinPreserving));
    }

    #[test]
    fn localic_examples() {
        let c3 = c3();
        assert!(LatticeMap::identity(&c3).is_localic_map());
        let const_top = LatticeMap::new(&c3, &c3, vec![2, 2, 2]).unwrap();
        assert!(!const_top.is_localic_map());
    }

    #[test]
    fn heyting_and_frobenius_examples() {
        let (c2, c3) = (c2(), c3());
        let id = LatticeMap::identity(&c3);
        assert!(id.is_complete_heyting_hom());
        assert!(id.frobenius_holds(&id).unwrap());

        let down = LatticeMap::new(&c3, &c2, vec![0, 0, 1]).unwrap();
        assert_eq!(down.heyting_witness(), Some((1, 0)));
        assert!(!down.is_complete_heyting_hom());
        let l = down.left_adjoint().unwrap();
        assert!(!down.frobenius_holds(&l).unwrap());

        let incl = LatticeMap::new(&c2, &c3, vec![0, 2]).unwrap();
        assert!(incl.is_complete_heyting_hom());
        let l = incl.left_adjoint().unwrap();
        assert!(incl.frobenius_holds(&l).unwrap());

        // a map that is not the left adjoint is rejected
        let wrong = LatticeMap::new(&c3, &c2, vec![0, 0, 1]).unwrap();
        assert!(matches!(incl.frobenius_holds(&wrong), Err(Error::AdjointMismatch(..))));
    }

    #[test]
    fn subfit_examples() {
        assert!(c2().is_subfit());
        assert!(!c3().is_subfit());
        assert_eq!(c3().subfit_witness(), Some((1, 0)));
        assert!(b4().is_subfit());
        let trivial = Frame::from_poset(Poset::chain(1)).unwrap();
        assert!(trivial.is_subfit());
    }

    #[test]
    fn degenerate_frame_maps() {
        let one = Frame::from_poset(Poset::chain(1)).unwrap();
        let c3 = c3();
        assert_eq!(frame_homs_direct(&c3, &one).len(), 1);
        assert!(frame_homs_direct(&one, &c3).is_empty());
        assert!(LatticeMap::new(&c3, &one, vec![0, 0, 0]).unwrap().is_frame_hom());
    }

    #[test]
    fn adjunction_laws_on_all_direct_homs() {
        let frames = [c2(), c3(), b4(), chain_frame(4)];
        for l in &frames {
            for m in &frames {
                for h in frame_homs_direct(l, m) {
                    assert!(h.preserves_all_meets(), "finite homs preserve all meets");
                    let r = h.right_adjoint().unwrap();
                    for a in l.elements() {
                        assert!(l.le(a, r.apply(h.apply(a))));
                    }
                    for b in m.elements() {
                        assert!(m.le(h.apply(r.apply(b)), b));
                    }
                    assert!(r.is_localic_map());
                    let ell = h.left_adjoint().unwrap();
                    assert_eq!(
                        h.is_complete_heyting_hom(),
                        h.frobenius_holds(&ell).unwrap()
                    );
                }
            }
        }
    }
}
