use pointfree::duality::frame_homs;
use pointfree::fixtures::{m3, n5};
use pointfree::{frames_up_to, Error, Frame};

#[test]
fn implication_is_residuated() {
    for frame in frames_up_to(4).unwrap() {
        for a in frame.elements() {
            for b in frame.elements() {
                let ab = frame.imp(a, b);
                for x in frame.elements() {
                    assert_eq!(frame.le(x, ab), frame.le(frame.meet(a, x), b));
                }
            }
        }
    }
}

#[test]
fn adjoints_of_every_hom() {
    let frames = frames_up_to(3).unwrap();
    for l in &frames {
        for m in &frames {
            for h in frame_homs(l, m).unwrap() {
                assert!(h.preserves_all_meets(), "finite frame homs preserve all meets");
                let r = h.right_adjoint().unwrap();
                assert!(r.is_localic_map());
                for a in l.elements() {
                    assert!(l.le(a, r.apply(h.apply(a))));
                    for b in m.elements() {
                        assert_eq!(m.le(h.apply(a), b), l.le(a, r.apply(b)));
                    }
                }
                for b in m.elements() {
                    assert!(m.le(h.apply(r.apply(b)), b));
                }
                let left = h.left_adjoint().expect("meet-preserving maps have left adjoints");
                let frobenius = h.frobenius_holds(&left).unwrap();
                assert_eq!(h.is_complete_heyting_hom(), frobenius);
            }
        }
    }
}

#[test]
fn right_adjoints_are_localic_up_to_sixteen_elements() {
    let frames = frames_up_to(4).unwrap();
    let small: Vec<&Frame> = frames.iter().filter(|f| f.len() <= 6).collect();
    for l in &frames {
        for m in &small {
            for h in frame_homs(l, m).unwrap() {
                assert!(h.right_adjoint().unwrap().is_localic_map());
            }
        }
    }
}

#[test]
fn left_adjoint_exists_exactly_when_meets_are_preserved() {
    // all monotone tables between a few small frames, homs or not
    let frames = frames_up_to(2).unwrap();
    for l in &frames {
        for m in &frames {
            for table in common_tables(l.len(), m.len()) {
                let Ok(g) = pointfree::LatticeMap::new(l, m, table) else { continue };
                assert_eq!(g.left_adjoint().is_some(), g.preserves_all_meets());
                match g.right_adjoint() {
                    Ok(_) => assert!(g.preserves_all_joins()),
                    Err(e) => assert_eq!(e, Error::NotJoinPreserving),
                }
            }
        }
    }
}

fn common_tables(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| (0..m).map(move |v| [t.clone(), vec![v]].concat()))
            .collect();
    }
    out
}

#[test]
fn non_distributive_lattices_are_rejected() {
    assert!(matches!(Frame::from_poset(m3()), Err(Error::NotDistributive(..))));
    assert!(matches!(Frame::from_poset(n5()), Err(Error::NotDistributive(..))));
}

#[test]
fn one_element_frame() {
    let one = Frame::from_poset(pointfree::Poset::chain(1)).unwrap();
    assert_eq!(one.bottom(), one.top());
    assert!(one.is_subfit());
}
