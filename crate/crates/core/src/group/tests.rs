use super::probes::{
    is_directed_bounded, is_strong_unit_bounded, rip_interpolant_search, srip_bounded, RipOutcome,
    SripVerdict, Verdict,
};
use super::PoGroup;
use crate::element::Element;

fn e29(a: i64, b: i64) -> Element {
    Element::vec(&[a, b])
}

#[test]
fn leq_examples() {
    let g = PoGroup::cone_ex29();
    // (0+3)-(1+0) = 2 >= 2, so (1,0) <= (0,3) via the jump branch.
    assert!(g.leq(&e29(1, 0), &e29(0, 3)).unwrap());
    assert!(g.leq(&e29(1, 0), &e29(1, 0)).unwrap());
    let z2 = PoGroup::int_vec(2).unwrap();
    assert!(!z2.leq(&e29(0, 1), &e29(3, 0)).unwrap());
}

#[test]
fn leq_rejects_carrier_mismatch() {
    let g = PoGroup::int();
    assert!(g.leq(&Element::int(1), &Element::vec(&[1, 2])).is_err());
}

#[test]
fn lex_cone_examples() {
    let zz = PoGroup::lex(PoGroup::int(), PoGroup::int());
    assert!(zz
        .in_cone(&Element::pair(Element::int(1), Element::int(-5)))
        .unwrap());
    let zs3 = PoGroup::lex(PoGroup::int(), PoGroup::s3());
    assert!(zs3.caps().directed);
    assert!(!zs3.caps().abelian);
    let zz2 = PoGroup::lex(PoGroup::int(), PoGroup::int_vec(2).unwrap());
    assert!(!zz2
        .in_cone(&Element::pair(Element::int(0), Element::vec(&[1, -1])))
        .unwrap());
}

#[test]
fn lex_capability_derivation() {
    let z = PoGroup::int;
    assert!(PoGroup::lex(z(), z()).caps().linear);
    assert!(PoGroup::lex(z(), PoGroup::int_vec(2).unwrap()).caps().lattice);
    assert!(!PoGroup::lex(PoGroup::int_vec(2).unwrap(), z()).caps().lattice);
    assert!(PoGroup::lex(z(), PoGroup::heisenberg()).caps().lattice);
    assert!(!PoGroup::lex(z(), PoGroup::heisenberg()).caps().abelian);
    // Trivial factors reduce to the other side.
    let c1 = PoGroup::cyclic(1).unwrap();
    assert!(PoGroup::lex(c1.clone(), z()).caps().directed);
    assert!(PoGroup::lex(z(), c1.clone()).caps().directed);
    // Non-directed nontrivial left factor.
    assert!(!PoGroup::lex(PoGroup::s3(), z()).caps().directed);
    // Torsion metadata.
    assert!(!PoGroup::lex(z(), PoGroup::s3()).caps().torsion_free);
    assert!(PoGroup::lex(z(), PoGroup::heisenberg()).caps().torsion_free);
}

#[test]
fn heisenberg_examples() {
    let h = PoGroup::heisenberg();
    let x = Element::tri(1, 0, 0);
    let y = Element::tri(0, 1, 0);
    assert_eq!(h.add(&x, &y).unwrap(), Element::tri(1, 1, 1));
    assert_eq!(h.add(&y, &x).unwrap(), Element::tri(1, 1, 0));
    assert!(h.in_cone(&Element::tri(0, 0, 5)).unwrap());
    // The center is fixed by conjugation.
    for g in h.box_elements(2) {
        let c = Element::tri(0, 0, 1);
        let conj = h
            .add(&h.add(&g, &c).unwrap(), &h.neg(&g).unwrap())
            .unwrap();
        assert_eq!(conj, c);
    }
}

#[test]
fn heisenberg_cone_closed_under_conjugation() {
    let h = PoGroup::heisenberg();
    let elems = h.box_elements(4);
    for x in &elems {
        if !h.in_cone(x).unwrap() {
            continue;
        }
        for g in &elems {
            let conj = h
                .add(&h.add(g, x).unwrap(), &h.neg(g).unwrap())
                .unwrap();
            assert!(h.in_cone(&conj).unwrap(), "conjugate of {x} by {g} left the cone");
        }
    }
}

#[test]
fn order_axioms_on_radius_boxes() {
    // Radius 5 boxes on rank-1/2 carriers and smaller boxes where the
    // carrier is larger; reflexivity, antisymmetry, transitivity.
    for (g, r) in [
        (PoGroup::int(), 5),
        (PoGroup::int_vec(2).unwrap(), 5),
        (PoGroup::cone_ex29(), 5),
        (PoGroup::cone_ex210(), 5),
        (PoGroup::heisenberg(), 2),
        (PoGroup::s3(), 1),
        (PoGroup::lex(PoGroup::int(), PoGroup::s3()), 2),
    ] {
        let elems = g.box_elements(r);
        for x in &elems {
            assert!(g.leq(x, x).unwrap(), "{}: reflexivity at {x}", g.describe());
        }
        for x in &elems {
            for y in &elems {
                if g.leq(x, y).unwrap() && g.leq(y, x).unwrap() {
                    assert_eq!(x, y, "{}: antisymmetry", g.describe());
                }
            }
        }
        // Transitivity on a thinner sample to keep the scan cheap.
        let step = (elems.len() / 20).max(1);
        let sample: Vec<&Element> = elems.iter().step_by(step).collect();
        for x in &sample {
            for y in &sample {
                if !g.leq(x, y).unwrap() {
                    continue;
                }
                for z in &sample {
                    if g.leq(y, z).unwrap() {
                        assert!(g.leq(x, z).unwrap(), "{}: transitivity", g.describe());
                    }
                }
            }
        }
    }
}

#[test]
fn translation_invariance_sampled() {
    for g in [
        PoGroup::cone_ex29(),
        PoGroup::heisenberg(),
        PoGroup::lex(PoGroup::int(), PoGroup::s3()),
    ] {
        let elems = g.box_elements(2);
        let step = (elems.len() / 12).max(1);
        let sample: Vec<&Element> = elems.iter().step_by(step).collect();
        for x in &sample {
            for y in &sample {
                if !g.leq(x, y).unwrap() {
                    continue;
                }
                for t in &sample {
                    for h in &sample {
                        let lx = g.add(&g.add(t, x).unwrap(), h).unwrap();
                        let ly = g.add(&g.add(t, y).unwrap(), h).unwrap();
                        assert!(g.leq(&lx, &ly).unwrap(), "{}: translation", g.describe());
                    }
                }
            }
        }
    }
}

#[test]
fn lex_reassociation_agrees_on_cone_membership() {
    let a = PoGroup::int();
    let left = PoGroup::lex(PoGroup::lex(a.clone(), a.clone()), a.clone());
    let right = PoGroup::lex(a.clone(), PoGroup::lex(a.clone(), a.clone()));
    for x in -2i64..=2 {
        for y in -2i64..=2 {
            for z in -2i64..=2 {
                let l = Element::pair(
                    Element::pair(Element::int(x), Element::int(y)),
                    Element::int(z),
                );
                let r = Element::pair(
                    Element::int(x),
                    Element::pair(Element::int(y), Element::int(z)),
                );
                assert_eq!(
                    left.in_cone(&l).unwrap(),
                    right.in_cone(&r).unwrap(),
                    "reassociation at ({x},{y},{z})"
                );
            }
        }
    }
}

#[test]
fn capability_chain_linear_lattice_directed() {
    for g in PoGroup::registry() {
        let c = g.caps();
        if c.linear {
            assert!(c.lattice, "{}: linear must imply lattice", g.describe());
        }
        if c.lattice {
            assert!(c.directed, "{}: lattice must imply directed", g.describe());
        }
    }
}

#[test]
fn meets_are_infima_on_sampled_pairs() {
    for (g, r) in [
        (PoGroup::int_vec(2).unwrap(), 3),
        (PoGroup::heisenberg(), 2),
        (PoGroup::lex(PoGroup::int(), PoGroup::int()), 2),
        (PoGroup::lex(PoGroup::int(), PoGroup::int_vec(2).unwrap()), 1),
    ] {
        let elems = g.box_elements(r);
        let step = (elems.len() / 25).max(1);
        let sample: Vec<&Element> = elems.iter().step_by(step).collect();
        for x in &sample {
            for y in &sample {
                let m = g.meet(x, y).unwrap();
                assert!(g.leq(&m, x).unwrap() && g.leq(&m, y).unwrap());
                for z in &sample {
                    if g.leq(z, x).unwrap() && g.leq(z, y).unwrap() {
                        assert!(
                            g.leq(z, &m).unwrap(),
                            "{}: {z} is a lower bound of {x},{y} above the meet {m}",
                            g.describe()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn lower_bound_bounds_every_argument() {
    let g = PoGroup::lex(PoGroup::int(), PoGroup::heisenberg());
    let xs: Vec<Element> = g.box_elements(1).into_iter().step_by(17).collect();
    let d = g.lower_bound(&xs).unwrap();
    for x in &xs {
        assert!(g.leq(&d, x).unwrap());
    }
    assert!(PoGroup::cone_ex29()
        .lower_bound(&[e29(0, 0), e29(1, 0)])
        .is_err());
}

#[test]
fn directedness_probe() {
    match is_directed_bounded(&PoGroup::s3(), 0).unwrap() {
        Verdict::Refuted { witness, .. } => {
            assert_ne!(witness[0], witness[1]);
            // Re-verify: no upper bound anywhere in the finite carrier.
            let g = PoGroup::s3();
            for z in g.enumerate_all(16).unwrap() {
                assert!(
                    !(g.leq(&witness[0], &z).unwrap() && g.leq(&witness[1], &z).unwrap()),
                    "claimed witness has an upper bound"
                );
            }
        }
        v => panic!("expected refutation for S3, got {v:?}"),
    }
    assert!(is_directed_bounded(&PoGroup::int_vec(2).unwrap(), 0)
        .unwrap()
        .is_certified());
    assert!(is_directed_bounded(&PoGroup::cone_ex29(), 0)
        .unwrap()
        .is_certified());
    // lex with a trivially ordered nontrivial left factor is refuted.
    let g = PoGroup::lex(PoGroup::s3(), PoGroup::int());
    assert!(is_directed_bounded(&g, 0).unwrap().is_refuted());
}

#[test]
fn strong_unit_probe() {
    let zg = PoGroup::lex(PoGroup::int(), PoGroup::s3());
    let u = Element::pair(Element::int(1), Element::Finite(0));
    assert!(is_strong_unit_bounded(&zg, &u, 3).unwrap().is_certified());

    let z2 = PoGroup::int_vec(2).unwrap();
    assert!(is_strong_unit_bounded(&z2, &Element::vec(&[1, 1]), 3)
        .unwrap()
        .is_certified());
    match is_strong_unit_bounded(&z2, &Element::vec(&[1, 0]), 3).unwrap() {
        Verdict::Refuted { witness, .. } => assert_eq!(witness[0], Element::vec(&[0, 1])),
        v => panic!("expected refutation, got {v:?}"),
    }
    // Negative u is a precondition error.
    assert!(is_strong_unit_bounded(&PoGroup::int(), &Element::int(-1), 3).is_err());
    // Preset cones certify their strong unit.
    assert!(
        is_strong_unit_bounded(&PoGroup::cone_ex29(), &Element::vec(&[1, 0]), 3)
            .unwrap()
            .is_certified()
    );
    assert!(
        is_strong_unit_bounded(&PoGroup::heisenberg(), &Element::tri(1, 0, 0), 3)
            .unwrap()
            .is_certified()
    );
    match is_strong_unit_bounded(&PoGroup::heisenberg(), &Element::tri(0, 1, 0), 3).unwrap() {
        Verdict::Refuted { witness, .. } => assert_eq!(witness[0], Element::tri(1, 0, 0)),
        v => panic!("expected refutation, got {v:?}"),
    }
}

#[test]
fn srip_probe() {
    match srip_bounded(&PoGroup::int(), 3).unwrap() {
        SripVerdict::Refuted { witness, .. } => {
            assert_eq!(witness.0, Element::int(0));
            assert_eq!(witness.2, Element::int(1));
        }
        v => panic!("expected refutation for Z, got {v:?}"),
    }
    match srip_bounded(&PoGroup::heisenberg(), 1).unwrap() {
        SripVerdict::Refuted { witness, .. } => {
            assert_eq!(witness.0, Element::tri(0, 0, 0));
            assert_eq!(witness.2, Element::tri(0, 0, 1));
        }
        v => panic!("expected refutation for heisenberg, got {v:?}"),
    }
    assert_eq!(
        srip_bounded(&PoGroup::int(), 0).unwrap(),
        SripVerdict::NoViolationFound
    );
    // Trivially ordered finite groups have no strict pairs at all.
    assert_eq!(
        srip_bounded(&PoGroup::s3(), 1).unwrap(),
        SripVerdict::NoViolationFound
    );
}

#[test]
fn rip_search_certifies_preset_counterexamples() {
    let g = PoGroup::cone_ex29();
    let out = rip_interpolant_search(&g, &e29(1, 0), &e29(0, 1), &e29(0, 3), &e29(3, 0)).unwrap();
    assert!(matches!(out, RipOutcome::CertifiedNone { .. }), "{out:?}");

    let g = PoGroup::cone_ex210();
    let out = rip_interpolant_search(&g, &e29(1, 0), &e29(0, 1), &e29(0, 2), &e29(2, 0)).unwrap();
    assert!(matches!(out, RipOutcome::CertifiedNone { .. }), "{out:?}");

    // A quadruple in Z^2 interpolates via the componentwise max.
    let z2 = PoGroup::int_vec(2).unwrap();
    let out =
        rip_interpolant_search(&z2, &e29(1, 0), &e29(0, 1), &e29(1, 1), &e29(2, 2)).unwrap();
    assert!(matches!(out, RipOutcome::Interpolant(_)), "{out:?}");
}

#[test]
fn certified_interval_enumeration_matches_brute_force_scan() {
    // Independent oracle: a wide box scan with the raw order predicate.
    let g = PoGroup::cone_ex29();
    for u in [e29(1, 0), e29(2, 0), e29(1, 1), e29(3, 0), e29(2, 1)] {
        let fast = g.interval_from_zero(&u, 10_000).unwrap();
        let mut slow: Vec<Element> = Vec::new();
        for x in g.box_elements(10) {
            if g.in_cone(&x).unwrap() && g.leq(&x, &u).unwrap() {
                slow.push(x);
            }
        }
        let mut fast_sorted = fast.clone();
        fast_sorted.sort();
        slow.sort();
        assert_eq!(fast_sorted, slow, "interval [0,{u}] mismatch");
    }
    // Units with large coordinate sums are certified infinite.
    assert!(g.interval_from_zero(&e29(4, 0), 10_000).is_err());

    let g10 = PoGroup::cone_ex210();
    let got = g10.interval_from_zero(&e29(1, 0), 100).unwrap();
    assert_eq!(got, vec![e29(0, 0), e29(1, 0)]);
    assert!(g10.interval_from_zero(&e29(2, 0), 100).is_err());
}

#[test]
fn interval_enumeration_on_lex_carriers() {
    let g = PoGroup::lex(PoGroup::int(), PoGroup::s3());
    let u = Element::pair(Element::int(3), Element::Finite(0));
    let interval = g.interval_from_zero(&u, 100).unwrap();
    assert_eq!(interval.len(), 14);
    let infinite = PoGroup::lex(PoGroup::int(), PoGroup::int());
    let u = Element::pair(Element::int(1), Element::int(0));
    assert!(infinite.interval_from_zero(&u, 1000).is_err());
}

#[test]
fn element_parse_format_round_trip() {
    let cases: Vec<(PoGroup, &str)> = vec![
        (PoGroup::int(), "-7"),
        (PoGroup::int_vec(2).unwrap(), "(3,-4)"),
        (PoGroup::heisenberg(), "(1,-2,3)"),
        (PoGroup::s3(), "(123)"),
        (PoGroup::lex(PoGroup::int(), PoGroup::s3()), "(2,(12))"),
        (
            PoGroup::lex(PoGroup::int(), PoGroup::int_vec(2).unwrap()),
            "(-1,(0,5))",
        ),
    ];
    for (g, s) in cases {
        let x = g.parse_element(s).unwrap();
        assert_eq!(g.format_element(&x), s);
    }
    assert!(PoGroup::int().parse_element("(1,2)").is_err());
    assert!(PoGroup::s3().parse_element("(14)").is_err());
}

#[test]
fn overflow_is_a_hard_error() {
    let g = PoGroup::int();
    let big = Element::int(i64::MAX);
    assert!(g.add(&big, &Element::int(1)).is_err());
    let h = PoGroup::heisenberg();
    let spike = Element::tri(i64::MAX / 2, i64::MAX / 2, 0);
    assert!(h.add(&spike, &spike).is_err());
}
