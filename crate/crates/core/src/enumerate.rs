//! Posets up to isomorphism, and the finite frames they dualize to.
//!
//! Posets on `n` points are grown from those on `n - 1` points by adding a
//! new maximal element above some downset, then deduplicated by canonical
//! form. The canonical form of a poset is the lexicographically smallest
//! column-major upper-triangular encoding of its order over relabellings
//! that sort elements by `(depth, |↓x|, |↑x|)`. Sorting by depth makes each
//! such relabelling a linear extension, and the key is invariant under
//! isomorphism, so the minimum is an isomorphism invariant.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::duality::clopup_frame;
use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::order::Poset;

pub const MAX_CATALOG_SIZE: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<bool>,
}

/// Canonical form of `poset` and the relabelling achieving it
/// (`perm[new] = old`).
pub fn canonical_form(poset: &Poset) -> (CanonicalForm, Vec<usize>) {
    let n = poset.len();
    let depth = poset.depths();
    let key = |x: usize| (depth[x], poset.down_of(x).count(), poset.up_of(x).count());
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&x| key(x));
    // slot_key[p]: the key any element placed at position p must have
    let slot_key: Vec<_> = sorted.iter().map(|&x| key(x)).collect();

    let mut search = Search {
        poset,
        slot_key: &slot_key,
        key: &key,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
    };
    search.run();
    let (bits, perm) = search.best.expect("at least one relabelling");
    (CanonicalForm { n, bits }, perm)
}

struct Search<'p, K> {
    poset: &'p Poset,
    slot_key: &'p [(usize, usize, usize)],
    key: &'p K,
    perm: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl<K: Fn(usize) -> (usize, usize, usize)> Search<'_, K> {
    fn run(&mut self) {
        let n = self.poset.len();
        let j = self.perm.len();
        if j == n {
            if self.best.as_ref().map_or(true, |(b, _)| self.bits < *b) {
                self.best = Some((self.bits.clone(), self.perm.clone()));
            }
            return;
        }
        for e in 0..n {
            if self.used[e] || (self.key)(e) != self.slot_key[j] {
                continue;
            }
            let start = self.bits.len();
            for i in 0..j {
                self.bits.push(self.poset.le(self.perm[i], e));
            }
            let worse = self
                .best
                .as_ref()
                .is_some_and(|(b, _)| self.bits.as_slice() > &b[..self.bits.len()]);
            if !worse {
                self.perm.push(e);
                self.used[e] = true;
                self.run();
                self.used[e] = false;
                self.perm.pop();
            }
            self.bits.truncate(start);
        }
    }
}

pub fn are_isomorphic(p: &Poset, q: &Poset) -> bool {
    p.len() == q.len() && canonical_form(p).0 == canonical_form(q).0
}

/// All posets of one size, one canonical representative per isomorphism
/// class, sorted by canonical form.
#[derive(Clone, Debug)]
pub struct PosetCatalog {
    pub size: usize,
    pub representatives: Vec<Poset>,
}

static CATALOGS: [OnceLock<PosetCatalog>; MAX_CATALOG_SIZE + 1] = [const { OnceLock::new() }; MAX_CATALOG_SIZE + 1];

/// Posets on `n` points up to isomorphism, `1 <= n <= 7`. Memoized.
pub fn all_posets(n: usize) -> Result<&'static PosetCatalog> {
    if n == 0 || n > MAX_CATALOG_SIZE {
        return Err(Error::SizeRefused { n, max: MAX_CATALOG_SIZE });
    }
    Ok(CATALOGS[n].get_or_init(|| build_catalog(n)))
}

fn build_catalog(n: usize) -> PosetCatalog {
    let smaller: Vec<Poset> = if n == 1 {
        vec![Poset::antichain(0)]
    } else {
        all_posets(n - 1).expect("in range").representatives.clone()
    };
    let mut classes: BTreeMap<CanonicalForm, Poset> = BTreeMap::new();
    for p in &smaller {
        for up in p.upsets() {
            let below = up.complement();
            let grown = p.extend_above(&below);
            let (form, perm) = canonical_form(&grown);
            classes.entry(form).or_insert_with(|| grown.relabel(&perm));
        }
    }
    PosetCatalog { size: n, representatives: classes.into_values().collect() }
}

/// The upset frame of every representative of size `n`: each finite frame
/// whose spectrum has `n` points, once up to isomorphism.
pub fn catalog_frames(n: usize) -> Result<Vec<Frame>> {
    Ok(all_posets(n)?
        .representatives
        .iter()
        .map(|p| clopup_frame(p).into_frame())
        .collect())
}

/// Catalog frames for spectra of size `1..=max`, concatenated; a frame's
/// position in this list is its canonical instance index.
pub fn frames_up_to(max: usize) -> Result<Vec<Frame>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(catalog_frames(n)?);
    }
    Ok(out)
}
