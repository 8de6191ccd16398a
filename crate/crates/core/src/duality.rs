//! Finite Priestley duality for frames.
//!
//! A finite frame `L` corresponds to the poset `X_L` of its prime filters
//! ordered by inclusion; the Stone map `φ(a) = { x ∈ X_L : a ∈ x }` is an
//! isomorphism from `L` onto the upsets of `X_L`. A frame homomorphism
//! `h: L → M` dualizes to `h⁻¹: X_M → X_L`, and a monotone map `f: X → Y`
//! to `f⁻¹` between upset frames.
//!
//! Every subset of a finite poset is clopen, so the Stone topology of `X_L`
//! (basis `φ(a) ∖ φ(b)`) is discrete here.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::frames::{Frame, LatticeMap};
use crate::order::{monotone_maps, MonotoneMap, Poset};

/// Frames larger than this are refused by [`prime_filters`].
pub const SPECTRUM_LIMIT: usize = 1 << 14;

/// The prime spectrum `X_L` of a frame together with its Stone map.
#[derive(Clone, Debug)]
pub struct DualSpace {
    filters: Vec<BitSet>,
    poset: Poset,
    filter_index: HashMap<BitSet, usize>,
    stone: Vec<BitSet>,
    stone_inverse: HashMap<BitSet, usize>,
}

impl DualSpace {
    pub fn filters(&self) -> &[BitSet] {
        &self.filters
    }

    /// Inclusion order on the filters.
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn index_of_filter(&self, filter: &BitSet) -> Option<usize> {
        self.filter_index.get(filter).copied()
    }

    /// `φ(a)`.
    pub fn stone(&self, a: usize) -> &BitSet {
        &self.stone[a]
    }

    /// The element `a` with `φ(a) = upset`, if any.
    pub fn element_of(&self, upset: &BitSet) -> Option<usize> {
        self.stone_inverse.get(upset).copied()
    }

    /// Basic open `φ(a) ∖ φ(b)` of the Stone topology.
    pub fn basic_open(&self, a: usize, b: usize) -> BitSet {
        self.stone[a].difference(&self.stone[b])
    }
}

/// All prime filters of `frame`, listed in lexicographic order of their
/// bitsets and ordered by inclusion.
pub fn prime_filters(frame: &Frame) -> Result<DualSpace> {
    prime_filters_within(frame, SPECTRUM_LIMIT)
}

fn prime_filters_within(frame: &Frame, limit: usize) -> Result<DualSpace> {
    let n = frame.len();
    if n > limit {
        return Err(Error::FrameTooLarge { size: n, limit });
    }
    let poset = frame.poset();
    // In a finite lattice every filter is principal, so the principal upsets
    // are the only candidates; each is then checked against the axioms.
    let mut filters: Vec<BitSet> = frame
        .elements()
        .map(|a| poset.up_of(a).clone())
        .filter(|f| is_prime_filter(frame, f))
        .collect();
    filters.sort();
    let k = filters.len();
    let order = Poset::from_fn_unchecked(k, |i, j| filters[i].is_subset(&filters[j]));
    let filter_index = filters.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let stone: Vec<BitSet> = frame
        .elements()
        .map(|a| BitSet::from_fn(k, |x| filters[x].contains(a)))
        .collect();
    let stone_inverse = stone.iter().cloned().enumerate().map(|(a, s)| (s, a)).collect();
    Ok(DualSpace { filters, poset: order, filter_index, stone, stone_inverse })
}

/// Nonempty proper upset, closed under binary meets, and prime.
pub fn is_prime_filter(frame: &Frame, set: &BitSet) -> bool {
    if set.is_empty() || set.contains(frame.bottom()) || !frame.poset().is_upset(set) {
        return false;
    }
    let members = set.to_vec();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            if !set.contains(frame.meet(a, b)) {
                return false;
            }
        }
    }
    frame.elements().all(|a| {
        (a..frame.len()).all(|b| !set.contains(frame.join(a, b)) || set.contains(a) || set.contains(b))
    })
}

impl Frame {
    /// The prime spectrum, computed once per frame.
    pub fn spectrum(&self) -> Result<&DualSpace> {
        if self.len() > SPECTRUM_LIMIT {
            return Err(Error::FrameTooLarge { size: self.len(), limit: SPECTRUM_LIMIT });
        }
        Ok(self.spectrum_cell().get_or_init(|| prime_filters(self).expect("size checked")))
    }
}

/// `φ(a)` for `a` in `frame`.
pub fn stone_map(frame: &Frame, a: usize) -> Result<BitSet> {
    Ok(frame.spectrum()?.stone(a).clone())
}

/// The frame of (clopen) upsets of a finite poset.
#[derive(Clone, Debug)]
pub struct UpsetFrame {
    space: Poset,
    upsets: Vec<BitSet>,
    index: HashMap<BitSet, usize>,
    frame: Frame,
}

impl UpsetFrame {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// The poset whose upsets these are.
    pub fn space(&self) -> &Poset {
        &self.space
    }

    pub fn upset(&self, element: usize) -> &BitSet {
        &self.upsets[element]
    }

    pub fn upsets(&self) -> &[BitSet] {
        &self.upsets
    }

    pub fn index_of(&self, upset: &BitSet) -> Option<usize> {
        self.index.get(upset).copied()
    }

    pub fn into_frame(self) -> Frame {
        self.frame
    }
}

/// `ClopUp(X)`, ordered by inclusion. Element 0 is `∅` and the last element
/// is `X`.
pub fn clopup_frame(space: &Poset) -> UpsetFrame {
    let upsets = space.upsets();
    let n = upsets.len();
    let order = Poset::from_fn_unchecked(n, |i, j| upsets[i].is_subset(&upsets[j]));
    let frame = Frame::from_poset(order).expect("upsets of a poset form a distributive lattice");
    let index = upsets.iter().cloned().enumerate().map(|(i, u)| (u, i)).collect();
    UpsetFrame { space: space.clone(), upsets, index, frame }
}

/// The dual `h⁻¹: X_M → X_L` of a frame homomorphism `h: L → M`. Checks
/// `f⁻¹(φ(a)) = φ(h(a))` for every `a`.
pub fn dual_of_hom<'a>(h: &LatticeMap<'a>) -> Result<MonotoneMap<'a>> {
    if !h.is_frame_hom() {
        return Err(Error::NotAHom);
    }
    let (l, m) = (h.source(), h.target());
    let xl = l.spectrum()?;
    let xm = m.spectrum()?;
    let mut table = Vec::with_capacity(xm.len());
    for filter in xm.filters() {
        let pre = BitSet::from_fn(l.len(), |a| filter.contains(h.apply(a)));
        let idx = xl.index_of_filter(&pre).ok_or(Error::NotAHom)?;
        table.push(idx);
    }
    let f = MonotoneMap::new(xm.poset(), xl.poset(), table)?;
    for a in l.elements() {
        if f.preimage(xl.stone(a)) != *xm.stone(h.apply(a)) {
            return Err(Error::StoneNaturalityFailure(a));
        }
    }
    Ok(f)
}

/// `f⁻¹: ClopUp(Y) → ClopUp(X)` for a monotone `f: X → Y`.
pub fn hom_from_monotone<'b>(
    f: &MonotoneMap<'_>,
    upsets_of_target: &'b UpsetFrame,
    upsets_of_source: &'b UpsetFrame,
) -> Result<LatticeMap<'b>> {
    if upsets_of_target.space() != f.target() || upsets_of_source.space() != f.source() {
        return Err(Error::Incompatible);
    }
    let table = upsets_of_target
        .upsets()
        .iter()
        .map(|u| {
            upsets_of_source
                .index_of(&f.preimage(u))
                .expect("preimage of an upset under a monotone map is an upset")
        })
        .collect();
    LatticeMap::new(upsets_of_target.frame(), upsets_of_source.frame(), table)
}

/// The Stone map of a frame as an isomorphism onto the upset frame of its
/// spectrum.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub upsets: UpsetFrame,
    /// `table[a]` is the index of `φ(a)` in `upsets`.
    pub table: Vec<usize>,
}

/// Builds the Stone isomorphism `L → ClopUp(X_L)` and verifies it is a
/// bijection that preserves and reflects order, meets and joins.
pub fn duality_roundtrip(frame: &Frame) -> Result<RoundTrip> {
    let space = frame.spectrum()?;
    let upsets = clopup_frame(space.poset());
    let mut table = Vec::with_capacity(frame.len());
    for a in frame.elements() {
        let idx = upsets.index_of(space.stone(a)).ok_or(Error::RoundTripFailure(a))?;
        table.push(idx);
    }
    let target = upsets.frame();
    if target.len() != frame.len() {
        // injectivity below plus equal sizes gives surjectivity
        let witness = frame.elements().find(|&a| table[..a].contains(&table[a])).unwrap_or(0);
        return Err(Error::RoundTripFailure(witness));
    }
    let mut hit = vec![false; target.len()];
    for a in frame.elements() {
        if std::mem::replace(&mut hit[table[a]], true) {
            return Err(Error::RoundTripFailure(a));
        }
    }
    if table[frame.bottom()] != target.bottom() || table[frame.top()] != target.top() {
        return Err(Error::RoundTripFailure(frame.bottom()));
    }
    for a in frame.elements() {
        for b in frame.elements() {
            let order_ok = frame.le(a, b) == target.le(table[a], table[b]);
            let meet_ok = table[frame.meet(a, b)] == target.meet(table[a], table[b]);
            let join_ok = table[frame.join(a, b)] == target.join(table[a], table[b]);
            if !(order_ok && meet_ok && join_ok) {
                return Err(Error::RoundTripFailure(a));
            }
        }
    }
    Ok(RoundTrip { upsets, table })
}

/// Every frame homomorphism `L → M` paired with its dual, enumerated as
/// monotone maps `X_M → X_L` in lexicographic order and transported back
/// through the Stone maps.
pub fn homs_with_duals<'a>(
    source: &'a Frame,
    target: &'a Frame,
) -> Result<Vec<(MonotoneMap<'a>, LatticeMap<'a>)>> {
    let xl = source.spectrum()?;
    let xm = target.spectrum()?;
    let mut out = Vec::new();
    for f in monotone_maps(xm.poset(), xl.poset()) {
        let table = source
            .elements()
            .map(|a| {
                xm.element_of(&f.preimage(xl.stone(a)))
                    .expect("preimages of upsets are upsets, all of which are Stone images")
            })
            .collect();
        out.push((f, LatticeMap::new(source, target, table)?));
    }
    Ok(out)
}

/// Frame homomorphisms `L → M` via duality.
pub fn frame_homs<'a>(source: &'a Frame, target: &'a Frame) -> Result<Vec<LatticeMap<'a>>> {
    Ok(homs_with_duals(source, target)?.into_iter().map(|(_, h)| h).collect())
}
