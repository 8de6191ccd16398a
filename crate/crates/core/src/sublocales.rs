//! Nuclei, sublocales and open localic maps.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::frames::{Frame, LatticeMap};

/// Sublocale enumeration refuses frames above this size.
pub const SUBLOCALE_ENUMERATION_LIMIT: usize = 20;
/// Nucleus enumeration refuses frames above this size.
pub const NUCLEUS_ENUMERATION_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NucleusFailure {
    NotInflationary(usize),
    NotIdempotent(usize),
    NotMeetPreserving(usize, usize),
}

impl fmt::Display for NucleusFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NucleusFailure::NotInflationary(a) => write!(f, "a ≤ ν(a) fails at {a}"),
            NucleusFailure::NotIdempotent(a) => write!(f, "ν(ν(a)) ≤ ν(a) fails at {a}"),
            NucleusFailure::NotMeetPreserving(a, b) => write!(f, "ν(a ∧ b) = ν(a) ∧ ν(b) fails at ({a}, {b})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SublocaleFailure {
    MissingTop,
    NotMeetClosed(usize, usize),
    NotImplicationClosed { x: usize, s: usize },
}

impl fmt::Display for SublocaleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SublocaleFailure::MissingTop => write!(f, "top (the empty meet) is missing"),
            SublocaleFailure::NotMeetClosed(a, b) => write!(f, "meet of members {a} and {b} is missing"),
            SublocaleFailure::NotImplicationClosed { x, s } => write!(f, "{x} → {s} is missing"),
        }
    }
}

/// First violated nucleus axiom, if any.
pub fn check_nucleus(frame: &Frame, table: &[usize]) -> Option<NucleusFailure> {
    if let Some(a) = frame.elements().find(|&a| !frame.le(a, table[a])) {
        return Some(NucleusFailure::NotInflationary(a));
    }
    if let Some(a) = frame.elements().find(|&a| !frame.le(table[table[a]], table[a])) {
        return Some(NucleusFailure::NotIdempotent(a));
    }
    for a in frame.elements() {
        for b in a..frame.len() {
            if table[frame.meet(a, b)] != frame.meet(table[a], table[b]) {
                return Some(NucleusFailure::NotMeetPreserving(a, b));
            }
        }
    }
    None
}

pub fn is_nucleus(frame: &Frame, table: &[usize]) -> bool {
    table.len() == frame.len() && table.iter().all(|&t| t < frame.len()) && check_nucleus(frame, table).is_none()
}

/// First violated sublocale axiom, if any. In a finite frame, closure under
/// all meets is closure under binary meets plus containing top.
pub fn check_sublocale(frame: &Frame, members: &BitSet) -> Option<SublocaleFailure> {
    if !members.contains(frame.top()) {
        return Some(SublocaleFailure::MissingTop);
    }
    let list = members.to_vec();
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i + 1..] {
            if !members.contains(frame.meet(a, b)) {
                return Some(SublocaleFailure::NotMeetClosed(a, b));
            }
        }
    }
    for &s in &list {
        for x in frame.elements() {
            if !members.contains(frame.imp(x, s)) {
                return Some(SublocaleFailure::NotImplicationClosed { x, s });
            }
        }
    }
    None
}

pub fn is_sublocale(frame: &Frame, members: &BitSet) -> bool {
    members.universe() == frame.len() && check_sublocale(frame, members).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nucleus<'a> {
    frame: &'a Frame,
    table: Vec<usize>,
}

impl<'a> Nucleus<'a> {
    pub fn new(frame: &'a Frame, table: Vec<usize>) -> Result<Self> {
        if table.len() != frame.len() {
            return Err(Error::TableLength { expected: frame.len(), found: table.len() });
        }
        if let Some(&index) = table.iter().find(|&&t| t >= frame.len()) {
            return Err(Error::IndexOutOfRange { index, n: frame.len() });
        }
        match check_nucleus(frame, &table) {
            Some(fail) => Err(Error::NotANucleus(fail.to_string())),
            None => Ok(Nucleus { frame, table }),
        }
    }

    pub fn frame(&self) -> &'a Frame {
        self.frame
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// `S_ν = ν[L]`.
    pub fn sublocale(&self) -> Sublocale<'a> {
        let members = BitSet::from_indices(self.frame.len(), self.table.iter().copied());
        debug_assert!(check_sublocale(self.frame, &members).is_none());
        Sublocale { frame: self.frame, members }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublocale<'a> {
    frame: &'a Frame,
    members: BitSet,
}

impl<'a> Sublocale<'a> {
    pub fn new(frame: &'a Frame, members: BitSet) -> Result<Self> {
        if members.universe() != frame.len() {
            return Err(Error::TableLength { expected: frame.len(), found: members.universe() });
        }
        match check_sublocale(frame, &members) {
            Some(fail) => Err(Error::NotASublocale(fail.to_string())),
            None => Ok(Sublocale { frame, members }),
        }
    }

    pub fn frame(&self) -> &'a Frame {
        self.frame
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    /// `ν_S(a) = ⋀{ s ∈ S : a ≤ s }`.
    pub fn nucleus(&self) -> Nucleus<'a> {
        let l = self.frame;
        let table = l
            .elements()
            .map(|a| l.meet_of_set(self.members.iter().filter(|&s| l.le(a, s))))
            .collect::<Vec<_>>();
        debug_assert!(check_nucleus(l, &table).is_none());
        Nucleus { frame: l, table }
    }
}

/// The open sublocale `𝔬(a) = { a → x }` with its nucleus `x ↦ a → x`.
pub fn open_sublocale(frame: &Frame, a: usize) -> (Sublocale<'_>, Nucleus<'_>) {
    let table: Vec<usize> = frame.elements().map(|x| frame.imp(a, x)).collect();
    let nucleus = Nucleus::new(frame, table).expect("x ↦ a → x is a nucleus");
    let sub = nucleus.sublocale();
    (sub, nucleus)
}

/// Every sublocale of `frame`, in lexicographic order of member sets.
pub fn all_sublocales(frame: &Frame) -> Result<Vec<Sublocale<'_>>> {
    let n = frame.len();
    if n > SUBLOCALE_ENUMERATION_LIMIT {
        return Err(Error::SizeRefused { n, max: SUBLOCALE_ENUMERATION_LIMIT });
    }
    let mut out = Vec::new();
    let mut current = BitSet::singleton(n, frame.top());
    let mut excluded = BitSet::empty(n);
    let order: Vec<usize> = frame.elements().filter(|&a| a != frame.top()).collect();
    sublocales_rec(frame, &order, 0, &mut current, &mut excluded, &mut out);
    out.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(out)
}

fn sublocales_rec<'a>(
    frame: &'a Frame,
    order: &[usize],
    pos: usize,
    current: &mut BitSet,
    excluded: &mut BitSet,
    out: &mut Vec<Sublocale<'a>>,
) {
    if pos == order.len() {
        if check_sublocale(frame, current).is_none() {
            out.push(Sublocale { frame, members: current.clone() });
        }
        return;
    }
    let a = order[pos];
    // exclude a: no included pair may have a as its meet
    let meet_forces_a = current
        .iter()
        .any(|s| current.iter().any(|t| frame.meet(s, t) == a));
    if !meet_forces_a {
        excluded.insert(a);
        sublocales_rec(frame, order, pos + 1, current, excluded, out);
        excluded.remove(a);
    }
    // include a: its meets with members must not be already excluded
    let blocked = current.iter().any(|s| excluded.contains(frame.meet(s, a)))
        || frame.elements().any(|x| excluded.contains(frame.imp(x, a)));
    if !blocked {
        current.insert(a);
        sublocales_rec(frame, order, pos + 1, current, excluded, out);
        current.remove(a);
    }
}

/// Every nucleus on `frame`, found by searching inflationary tables.
pub fn all_nuclei(frame: &Frame) -> Result<Vec<Nucleus<'_>>> {
    let n = frame.len();
    if n > NUCLEUS_ENUMERATION_LIMIT {
        return Err(Error::SizeRefused { n, max: NUCLEUS_ENUMERATION_LIMIT });
    }
    let mut out = Vec::new();
    let mut table = vec![0; n];
    nuclei_rec(frame, 0, &mut table, &mut out);
    Ok(out)
}

fn nuclei_rec<'a>(frame: &'a Frame, a: usize, table: &mut Vec<usize>, out: &mut Vec<Nucleus<'a>>) {
    if a == frame.len() {
        if check_nucleus(frame, table).is_none() {
            out.push(Nucleus { frame, table: table.clone() });
        }
        return;
    }
    for v in frame.poset().up_of(a).iter() {
        table[a] = v;
        // monotone on the prefix
        let ok = (0..a).all(|b| {
            (!frame.le(b, a) || frame.le(table[b], v)) && (!frame.le(a, b) || frame.le(v, table[b]))
        });
        if ok {
            nuclei_rec(frame, a + 1, table, out);
        }
    }
}

/// The image `r[S]` of a sublocale under a localic map `r: M → L`, checked
/// to be a sublocale whose nucleus is `r ∘ ν_S ∘ h` with `h` the left
/// adjoint of `r`.
pub fn image_sublocale<'a>(r: &LatticeMap<'a>, sub: &Sublocale<'_>) -> Result<Sublocale<'a>> {
    let h = localic_left_adjoint(r)?;
    image_along(r, &h, sub)
}

/// [`image_sublocale`] for many sublocales of the same frame, checking
/// once that `r` is localic.
pub fn image_sublocales<'a>(r: &LatticeMap<'a>, subs: &[Sublocale<'_>]) -> Result<Vec<Sublocale<'a>>> {
    let h = localic_left_adjoint(r)?;
    subs.iter().map(|sub| image_along(r, &h, sub)).collect()
}

fn localic_left_adjoint<'a>(r: &LatticeMap<'a>) -> Result<LatticeMap<'a>> {
    if !r.is_localic_map() {
        return Err(Error::NotLocalic);
    }
    r.left_adjoint().ok_or(Error::NotLocalic)
}

fn image_along<'a>(r: &LatticeMap<'a>, h: &LatticeMap<'a>, sub: &Sublocale<'_>) -> Result<Sublocale<'a>> {
    if sub.frame() != r.source() {
        return Err(Error::Incompatible);
    }
    let l = r.target();
    let members = BitSet::from_indices(l.len(), sub.members().iter().map(|s| r.apply(s)));
    let image = Sublocale::new(l, members)?;
    let nu_image = image.nucleus();
    let nu_s = sub.nucleus();
    for a in l.elements() {
        if nu_image.apply(a) != r.apply(nu_s.apply(h.apply(a))) {
            return Err(Error::IdentityViolation(a));
        }
    }
    Ok(image)
}

/// Result of testing a localic map for openness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Openness {
    /// `witnesses[a] = b` with `r[𝔬(a)] = 𝔬(b)`, `b` the smallest index.
    Open { witnesses: Vec<usize> },
    /// `r[𝔬(a)]` is not open for this `a`.
    NotOpen { a: usize },
}

impl Openness {
    pub fn is_open(&self) -> bool {
        matches!(self, Openness::Open { .. })
    }
}

/// Tests whether every `r[𝔬(a)]` is an open sublocale, both as a set
/// equality `r[𝔬(a)] = 𝔬(b)` and as a nucleus equality `r ν_a h = ν_b`.
/// The two formulations must agree.
pub fn open_localic_map(r: &LatticeMap<'_>) -> Result<Openness> {
    let h = localic_left_adjoint(r)?;
    let (m, l) = (r.source(), r.target());
    let opens_l: Vec<(Sublocale<'_>, Nucleus<'_>)> = l.elements().map(|b| open_sublocale(l, b)).collect();
    let mut witnesses = Vec::with_capacity(m.len());
    for a in m.elements() {
        let (sub_a, nu_a) = open_sublocale(m, a);
        let image = image_along(r, &h, &sub_a)?;
        let composite: Vec<usize> = l.elements().map(|x| r.apply(nu_a.apply(h.apply(x)))).collect();
        let by_set = opens_l.iter().position(|(s, _)| s.members() == image.members());
        let by_nucleus = opens_l.iter().position(|(_, nu)| nu.table() == composite.as_slice());
        if by_set.is_some() != by_nucleus.is_some() {
            return Err(Error::EquivalenceViolation(format!(
                "openness formulations disagree at a = {a}: set match {by_set:?}, nucleus match {by_nucleus:?}"
            )));
        }
        match by_set {
            Some(b) => witnesses.push(b),
            None => return Ok(Openness::NotOpen { a }),
        }
    }
    Ok(Openness::Open { witnesses })
}

pub fn is_open_localic_map(r: &LatticeMap<'_>) -> Result<bool> {
    Ok(open_localic_map(r)?.is_open())
}
