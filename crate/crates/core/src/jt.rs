//! Priestley-side characterizations of open localic maps, and the harness
//! that checks them against the algebraic ones.
//!
//! For a frame homomorphism `h: L → M` with right adjoint `r` and dual
//! `f: X_M → X_L` the six conditions are:
//!
//! | flag            | statement                                              |
//! |-----------------|--------------------------------------------------------|
//! | `alg_open`      | `r` sends open sublocales to open sublocales           |
//! | `alg_heyting`   | `h` preserves all meets and `→`                        |
//! | `alg_frobenius` | `h` has a left adjoint `ℓ` with `ℓ(a ∧ h b) = ℓ a ∧ b` |
//! | `pr_cond1`      | `f[U]` is an upset for every upset `U`                 |
//! | `pr_cond2`      | `f` is a p-morphism                                    |
//! | `pr_cond3`      | `↑(f[U] ∩ V) = ↑f[U] ∩ V` for all upsets `U`, `V`      |
//!
//! On finite posets every set is clopen, so the "is clopen" clauses of the
//! Priestley conditions hold vacuously; reports carry `finite_degenerate`
//! to say so.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::duality::{dual_of_hom, homs_with_duals};
use crate::error::{Error, Result};
use crate::frames::{Frame, LatticeMap};
use crate::order::MonotoneMap;
use crate::sublocales::{open_localic_map, Openness};

/// An upset `U` of the domain with `f[U]` not an upset.
pub fn priestley_cond1_witness(f: &MonotoneMap<'_>) -> Option<BitSet> {
    let target = f.target();
    f.source().upsets().into_iter().find(|u| !target.is_upset(&f.image(u)))
}

pub fn priestley_cond1(f: &MonotoneMap<'_>) -> bool {
    priestley_cond1_witness(f).is_none()
}

/// The p-morphism condition; the accompanying "`↑f[U]` is clopen" clause is
/// vacuous on finite posets.
pub fn priestley_cond2(f: &MonotoneMap<'_>) -> bool {
    f.is_pmorphism()
}

/// Upsets `(U, V)` with `↑(f[U] ∩ V) ≠ ↑f[U] ∩ V`.
pub fn priestley_cond3_witness(f: &MonotoneMap<'_>) -> Option<(BitSet, BitSet)> {
    let y = f.target();
    let target_upsets = y.upsets();
    for u in f.source().upsets() {
        let image = f.image(&u);
        let up_image = y.up_closure(&image);
        for v in &target_upsets {
            if y.up_closure(&image.intersection(v)) != up_image.intersection(v) {
                return Some((u, v.clone()));
            }
        }
    }
    None
}

pub fn priestley_cond3(f: &MonotoneMap<'_>) -> bool {
    priestley_cond3_witness(f).is_none()
}

/// For `a ∈ M` and `b, c ∈ L`: `b ≤ (r ν_a h)(c)` iff
/// `φ(b) ∩ f[φ(a)] ⊆ φ(c)`.
pub fn image_nucleus_spatial_check(h: &LatticeMap<'_>) -> Result<bool> {
    let r = h.right_adjoint()?;
    let f = dual_of_hom(h)?;
    let (l, m) = (h.source(), h.target());
    let (xl, xm) = (l.spectrum()?, m.spectrum()?);
    for a in m.elements() {
        let image = f.image(xm.stone(a));
        for c in l.elements() {
            let rhs_c = r.apply(m.imp(a, h.apply(c)));
            for b in l.elements() {
                let algebraic = l.le(b, rhs_c);
                let spatial = xl.stone(b).intersection(&image).is_subset(xl.stone(c));
                if algebraic != spatial {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `φ(ℓ(a)) = ↑f[φ(a)]` for every `a ∈ M`.
pub fn left_adjoint_spatial_check(h: &LatticeMap<'_>) -> Result<bool> {
    let left = h.left_adjoint().ok_or(Error::AdjointAbsent)?;
    let f = dual_of_hom(h)?;
    let (l, m) = (h.source(), h.target());
    let (xl, xm) = (l.spectrum()?, m.spectrum()?);
    Ok(m.elements().all(|a| *xl.stone(left.apply(a)) == xl.poset().up_closure(&f.image(xm.stone(a)))))
}

/// `f⁻¹ int₁ F = int₁ f⁻¹ F` for every (closed) upset `F` of `X_L`. On
/// finite spaces `int₁` fixes upsets, so this holds for every homomorphism.
pub fn int1_exchange_check(h: &LatticeMap<'_>) -> Result<bool> {
    let f = dual_of_hom(h)?;
    let (xm, xl) = (f.source(), f.target());
    Ok(xl
        .upsets()
        .iter()
        .all(|fset| f.preimage(&xl.int1(fset)) == xm.int1(&f.preimage(fset))))
}

/// `f[U]` is an upset for every Stone image `U = φ(a)`; on finite spaces
/// this is also the open-upset formulation of the first condition.
fn cond1_on_stone_images(h: &LatticeMap<'_>, f: &MonotoneMap<'_>) -> Result<bool> {
    let xm = h.target().spectrum()?;
    Ok(h.target().elements().all(|a| f.target().is_upset(&f.image(xm.stone(a)))))
}

/// `f[↑x] = ⋂{ f[U] : x ∈ U, U an upset }` for every `x`.
pub fn upset_image_intersection_check(f: &MonotoneMap<'_>) -> bool {
    let (x, y) = (f.source(), f.target());
    let upsets = x.upsets();
    (0..x.len()).all(|p| {
        let mut meet = y.whole();
        for u in upsets.iter().filter(|u| u.contains(p)) {
            meet.intersect_with(&f.image(u));
        }
        meet == f.image(x.up_of(p))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub source: usize,
    pub target: usize,
    pub map_index: usize,
    /// Table of `h: L → M`.
    pub hom: Vec<usize>,
    /// Table of the dual `f: X_M → X_L`.
    pub dual: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub open: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heyting: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond1: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond3: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JtReport {
    pub instance: Instance,
    pub alg_open: bool,
    pub alg_heyting: bool,
    pub alg_frobenius: bool,
    pub pr_cond1: bool,
    pub pr_cond2: bool,
    pub pr_cond3: bool,
    pub image_nucleus_spatial: bool,
    pub left_adjoint_spatial: bool,
    pub int1_exchange: bool,
    /// First condition restated over open upsets (Stone images here).
    pub cond1_open_upsets: bool,
    pub finite_degenerate: bool,
    pub witnesses: Witnesses,
    /// All six condition flags agree.
    pub equivalent: bool,
}

impl JtReport {
    pub fn flags(&self) -> [bool; 6] {
        [self.alg_open, self.alg_heyting, self.alg_frobenius, self.pr_cond1, self.pr_cond2, self.pr_cond3]
    }

    /// Every harness assertion that failed on this instance.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.equivalent {
            out.push("six-way equivalence");
        }
        if !self.image_nucleus_spatial {
            out.push("spatial image nucleus");
        }
        if !self.left_adjoint_spatial {
            out.push("left adjoint as up-closed image");
        }
        if !self.int1_exchange {
            out.push("int1 exchange");
        }
        if self.cond1_open_upsets != self.pr_cond1 {
            out.push("open-upset restatement of condition 1");
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Evaluates every condition for one homomorphism and its dual.
pub fn jt_report(h: &LatticeMap<'_>, f: &MonotoneMap<'_>, instance: Instance) -> Result<JtReport> {
    let r = h.right_adjoint()?;
    let mut witnesses = Witnesses::default();

    let alg_open = match open_localic_map(&r)? {
        Openness::Open { .. } => true,
        Openness::NotOpen { a } => {
            witnesses.open = Some(a);
            false
        }
    };
    let alg_heyting = h.is_complete_heyting_hom();
    witnesses.heyting = h.heyting_witness();
    let alg_frobenius = match h.left_adjoint() {
        Some(left) => {
            witnesses.frobenius = h.frobenius_witness(&left)?;
            witnesses.frobenius.is_none()
        }
        None => false,
    };

    witnesses.cond1 = priestley_cond1_witness(f).map(|u| u.to_vec());
    witnesses.cond2 = f.pmorphism_witness();
    witnesses.cond3 = priestley_cond3_witness(f).map(|(u, v)| (u.to_vec(), v.to_vec()));
    let pr_cond1 = witnesses.cond1.is_none();
    let pr_cond2 = witnesses.cond2.is_none();
    let pr_cond3 = witnesses.cond3.is_none();

    let flags = [alg_open, alg_heyting, alg_frobenius, pr_cond1, pr_cond2, pr_cond3];
    let equivalent = flags.iter().all(|&b| b == flags[0]);
    Ok(JtReport {
        instance,
        alg_open,
        alg_heyting,
        alg_frobenius,
        pr_cond1,
        pr_cond2,
        pr_cond3,
        image_nucleus_spatial: image_nucleus_spatial_check(h)?,
        left_adjoint_spatial: match left_adjoint_spatial_check(h) {
            Ok(v) => v,
            Err(Error::AdjointAbsent) => false,
            Err(e) => return Err(e),
        },
        int1_exchange: int1_exchange_check(h)?,
        cond1_open_upsets: cond1_on_stone_images(h, f)?,
        finite_degenerate: true,
        witnesses,
        equivalent,
    })
}

/// Reports for every frame homomorphism `L → M`, enumerated as monotone
/// maps between the dual posets in lexicographic order.
pub fn jt_reports(source: &Frame, target: &Frame, ids: (usize, usize)) -> Result<Vec<JtReport>> {
    homs_with_duals(source, target)?
        .iter()
        .enumerate()
        .map(|(map_index, (f, h))| {
            let instance = Instance {
                source: ids.0,
                target: ids.1,
                map_index,
                hom: h.table().to_vec(),
                dual: f.table().to_vec(),
            };
            jt_report(h, f, instance)
        })
        .collect()
}

/// Like [`jt_reports`], but fails on the first inconsistent report.
pub fn verify_jt(source: &Frame, target: &Frame) -> Result<Vec<JtReport>> {
    let reports = jt_reports(source, target, (0, 0))?;
    if let Some(bad) = reports.iter().find(|r| !r.is_consistent()) {
        let payload = serde_json::to_string(bad).unwrap_or_default();
        return Err(Error::EquivalenceViolation(format!("{}: {payload}", bad.violations().join(", "))));
    }
    Ok(reports)
}

/// `L` is subfit iff every point of `X_L` is minimal (density of the
/// minimal points in a discrete space).
pub fn subfit_dual_check(frame: &Frame) -> Result<bool> {
    let algebraic = frame.is_subfit();
    let x = frame.spectrum()?.poset();
    let spatial = x.min_elements() == x.whole();
    if algebraic != spatial {
        return Err(Error::EquivalenceViolation(format!(
            "subfit = {algebraic} but min X_L = X_L is {spatial}; witness {:?}",
            frame.subfit_witness()
        )));
    }
    Ok(algebraic)
}

/// With `min Y = Y`, every monotone `f: X → Y` must be a p-morphism.
pub fn subfit_forces_pmorphism_check(f: &MonotoneMap<'_>) -> Result<bool> {
    let y = f.target();
    if y.min_elements() != y.whole() {
        return Err(Error::PreconditionFailed("minimal points of the codomain are not dense".into()));
    }
    match f.pmorphism_witness() {
        None => Ok(true),
        Some(point) => Err(Error::EquivalenceViolation(format!(
            "map {:?} into a space with dense minimal points is not a p-morphism at {point}",
            f.table()
        ))),
    }
}

/// For subfit `L` and every homomorphism `h: L → M`: the right adjoint is
/// open iff `h` preserves all meets and all joins.
pub fn subfit_openness_check(source: &Frame, target: &Frame) -> Result<bool> {
    if !source.is_subfit() {
        return Err(Error::NotSubfit);
    }
    for (_, h) in homs_with_duals(source, target)? {
        let open = open_localic_map(&h.right_adjoint()?)?.is_open();
        let complete = h.preserves_all_meets() && h.preserves_all_joins();
        if open != complete {
            return Err(Error::EquivalenceViolation(format!(
                "hom {:?}: open = {open}, complete lattice hom = {complete}",
                h.table()
            )));
        }
    }
    Ok(true)
}
