use pointfree::jt::{jt_reports, upset_image_intersection_check, verify_jt};
use pointfree::{all_posets, frames_up_to, monotone_maps, BitSet, Frame, LatticeMap, MonotoneMap};

/// `r[𝔬(a)] = 𝔬(b)` for some `b`, for every `a`, computed from tables.
fn brute_open(h: &LatticeMap<'_>) -> bool {
    let (l, m) = (h.source(), h.target());
    let r: Vec<usize> = m.elements().map(|b| l.join_of_set(l.elements().filter(|&a| m.le(h.apply(a), b)))).collect();
    let open_in_l: Vec<BitSet> =
        l.elements().map(|b| BitSet::from_indices(l.len(), l.elements().map(|y| l.imp(b, y)))).collect();
    m.elements().all(|a| {
        let image = BitSet::from_indices(l.len(), m.elements().map(|x| r[m.imp(a, x)]));
        open_in_l.contains(&image)
    })
}

fn brute_heyting(h: &LatticeMap<'_>) -> bool {
    let (l, m) = (h.source(), h.target());
    l.elements().all(|a| l.elements().all(|b| h.apply(l.imp(a, b)) == m.imp(h.apply(a), h.apply(b))))
}

/// `↓f⁻¹(y) = f⁻¹(↓y)` for every `y`.
fn brute_pmorphism(f: &MonotoneMap<'_>) -> bool {
    let (x, y) = (f.source(), f.target());
    (0..y.len()).all(|q| {
        let lhs: Vec<usize> =
            (0..x.len()).filter(|&p| (0..x.len()).any(|p2| x.le(p, p2) && f.apply(p2) == q)).collect();
        let rhs: Vec<usize> = (0..x.len()).filter(|&p| y.le(f.apply(p), q)).collect();
        lhs == rhs
    })
}

#[test]
fn six_conditions_agree_with_oracles() {
    let frames = frames_up_to(3).unwrap();
    for (i, l) in frames.iter().enumerate() {
        for (j, m) in frames.iter().enumerate() {
            let reports = jt_reports(l, m, (i, j)).unwrap();
            for report in &reports {
                assert!(report.is_consistent(), "{report:?}");
                let h = LatticeMap::new(l, m, report.instance.hom.clone()).unwrap();
                let xl = l.spectrum().unwrap().poset();
                let xm = m.spectrum().unwrap().poset();
                let f = MonotoneMap::new(xm, xl, report.instance.dual.clone()).unwrap();
                assert_eq!(report.alg_open, brute_open(&h));
                assert_eq!(report.alg_heyting, brute_heyting(&h));
                assert_eq!(report.pr_cond2, brute_pmorphism(&f));
            }
        }
    }
}

#[test]
fn verify_jt_on_small_pairs() {
    let frames = frames_up_to(2).unwrap();
    for l in &frames {
        for m in &frames {
            assert!(!verify_jt(l, m).unwrap().is_empty());
        }
    }
}

#[test]
fn negative_and_positive_instances() {
    let c3 = Frame::from_poset(pointfree::Poset::chain(3)).unwrap();
    let c2 = Frame::from_poset(pointfree::Poset::chain(2)).unwrap();
    let reports = jt_reports(&c3, &c2, (0, 0)).unwrap();
    let down = reports.iter().find(|r| r.instance.hom == vec![0, 0, 1]).unwrap();
    assert_eq!(down.flags(), [false; 6]);
    let up = reports.iter().find(|r| r.instance.hom == vec![0, 1, 1]).unwrap();
    assert_eq!(up.flags(), [true; 6]);
}

#[test]
fn images_of_principal_upsets_are_intersections() {
    for a in 1..=4 {
        for b in 1..=3 {
            for x in &all_posets(a).unwrap().representatives {
                for y in &all_posets(b).unwrap().representatives {
                    for f in monotone_maps(x, y) {
                        assert!(upset_image_intersection_check(&f));
                    }
                }
            }
        }
    }
}
