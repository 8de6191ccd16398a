mod common;

use common::all_tables;
use pointfree::duality::{frame_homs, homs_with_duals, is_prime_filter};
use pointfree::frames::frame_homs_direct;
use pointfree::{
    catalog_frames, clopup_frame, dual_of_hom, duality_roundtrip, frames_up_to, hom_from_monotone, monotone_maps,
    BitSet, Frame, MonotoneMap,
};

/// Prime filters by filtering every subset of the carrier against the
/// axioms, written out directly.
fn brute_prime_filters(frame: &Frame) -> Vec<BitSet> {
    let n = frame.len();
    let mut out: Vec<BitSet> = (0u64..1 << n)
        .map(|mask| BitSet::from_mask(n, mask))
        .filter(|f| {
            let members = f.to_vec();
            !f.is_empty()
                && !f.contains(frame.bottom())
                && members.iter().all(|&a| frame.elements().all(|b| !frame.le(a, b) || f.contains(b)))
                && members.iter().all(|&a| members.iter().all(|&b| f.contains(frame.meet(a, b))))
                && frame.elements().all(|a| {
                    frame.elements().all(|b| !f.contains(frame.join(a, b)) || f.contains(a) || f.contains(b))
                })
        })
        .collect();
    out.sort();
    out
}

#[test]
fn spectra_match_subset_filtering() {
    for frame in frames_up_to(3).unwrap() {
        let space = frame.spectrum().unwrap();
        assert_eq!(space.filters(), brute_prime_filters(&frame).as_slice());
        for f in space.filters() {
            assert!(is_prime_filter(&frame, f));
        }
    }
}

#[test]
fn prime_filters_are_generated_by_join_irreducibles() {
    for frame in frames_up_to(4).unwrap() {
        let space = frame.spectrum().unwrap();
        let irreducibles: Vec<usize> = frame
            .elements()
            .filter(|&j| {
                j != frame.bottom()
                    && frame.elements().all(|a| {
                        frame.elements().all(|b| frame.join(a, b) != j || a == j || b == j)
                    })
            })
            .collect();
        assert_eq!(irreducibles.len(), space.len());
        for f in space.filters() {
            let generators: Vec<usize> =
                irreducibles.iter().copied().filter(|&j| *f == *frame.poset().up_of(j)).collect();
            assert_eq!(generators.len(), 1);
        }
    }
}

#[test]
fn round_trip_on_catalog() {
    for frame in frames_up_to(4).unwrap() {
        let rt = duality_roundtrip(&frame).unwrap();
        assert_eq!(rt.table.len(), frame.len());
        let space = frame.spectrum().unwrap();
        for a in frame.elements() {
            assert!(space.poset().is_upset(space.stone(a)));
        }
    }
    // spot check at five points: every sixth frame
    for frame in catalog_frames(5).unwrap().iter().step_by(6) {
        duality_roundtrip(frame).unwrap();
    }
}

#[test]
fn hom_counts_match_monotone_map_counts() {
    let frames = frames_up_to(3).unwrap();
    for l in &frames {
        for m in &frames {
            let direct = frame_homs_direct(l, m).len();
            let xl = l.spectrum().unwrap().poset();
            let xm = m.spectrum().unwrap().poset();
            // monotone maps counted by filtering every function table
            let brute = all_tables(xm.len(), xl.len())
                .into_iter()
                .filter(|t| MonotoneMap::new(xm, xl, t.clone()).is_ok())
                .count();
            assert_eq!(direct, brute);
            assert_eq!(monotone_maps(xm, xl).count(), brute);
        }
    }
}

#[test]
fn homs_and_duals_are_mutually_inverse() {
    let frames = frames_up_to(3).unwrap();
    for l in &frames {
        let rt_l = duality_roundtrip(l).unwrap();
        for m in &frames {
            let rt_m = duality_roundtrip(m).unwrap();
            let homs = frame_homs(l, m).unwrap();
            for h in &homs {
                let f = dual_of_hom(h).unwrap();
                let back = hom_from_monotone(&f, &rt_l.upsets, &rt_m.upsets).unwrap();
                // back ∘ φ_L = φ_M ∘ h
                for a in l.elements() {
                    assert_eq!(back.apply(rt_l.table[a]), rt_m.table[h.apply(a)]);
                }
            }
            for (f, h) in homs_with_duals(l, m).unwrap() {
                assert_eq!(dual_of_hom(&h).unwrap(), f);
            }
        }
    }
}

#[test]
fn dual_is_contravariant() {
    let frames = frames_up_to(2).unwrap();
    for a in &frames {
        for b in &frames {
            for c in &frames {
                for h1 in frame_homs(a, b).unwrap() {
                    for h2 in frame_homs(b, c).unwrap() {
                        let comp = h2.after(&h1).unwrap();
                        let lhs = dual_of_hom(&comp).unwrap();
                        let rhs = dual_of_hom(&h1).unwrap().after(&dual_of_hom(&h2).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn upset_frames_of_small_posets() {
    let point = pointfree::Poset::chain(1);
    assert_eq!(clopup_frame(&point).frame().len(), 2);
    let chain = pointfree::Poset::chain(2);
    let upsets = clopup_frame(&chain);
    assert_eq!(upsets.frame().len(), 3);
    // constant map onto the top of a 2-chain pulls {t} back to everything
    let f = MonotoneMap::new(&chain, &chain, vec![1, 1]).unwrap();
    let h = hom_from_monotone(&f, &upsets, &upsets).unwrap();
    assert!(h.is_frame_hom());
    let top_only = upsets.index_of(&BitSet::singleton(2, 1)).unwrap();
    assert_eq!(h.apply(top_only), upsets.frame().top());
    assert_eq!(h.apply(upsets.frame().bottom()), upsets.frame().bottom());
}
