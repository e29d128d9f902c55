use super::*;
use crate::group::PoGroup;

fn lex_s3_group() -> PoGroup {
    PoGroup::lex(PoGroup::int(), PoGroup::s3())
}

fn lex_s3(m: i64) -> FinitePea {
    lex_s3_interval(m).unwrap()
}

#[test]
fn chains_and_diamond_pass_axioms() {
    for k in 1..=6 {
        assert!(chain(k).check_axioms().is_valid(), "chain length {k}");
    }
    assert!(diamond().check_axioms().is_valid());
}

#[test]
fn lex_s3_interval_is_valid_with_14_elements() {
    let pea = lex_s3(3);
    assert_eq!(pea.len(), 14);
    assert!(pea.check_axioms().is_valid());
}

#[test]
fn deleting_an_entry_is_detected() {
    let pea = chain(3);
    let triples: Vec<(String, String, String)> = pea
        .defined_sums()
        .into_iter()
        .filter(|&(a, b, _)| !(pea.name(a) == "1" && pea.name(b) == "2"))
        .map(|(a, b, c)| {
            (
                pea.name(a).to_string(),
                pea.name(b).to_string(),
                pea.name(c).to_string(),
            )
        })
        .collect();
    let names = pea.names().to_vec();
    let mutated = FinitePea::new(names, "0", "3", &triples).unwrap();
    match mutated.check_axioms() {
        AxiomCheck::Violation { axiom, witness } => {
            assert!(
                matches!(axiom, Axiom::Pe1 | Axiom::Pe3),
                "unexpected axiom {axiom}"
            );
            assert!(!witness.is_empty());
        }
        AxiomCheck::Valid => panic!("mutation not detected"),
    }
}

#[test]
fn gamma_membership_examples() {
    let g = PoGroup::cone_ex29();
    let e = gamma(&g, &Element::vec(&[1, 0])).unwrap();
    let elems = e.elements(100).unwrap();
    assert_eq!(elems.len(), 2);

    let zs3 = lex_s3_group();
    let e = gamma(&zs3, &zs3.parse_element("(3,e)").unwrap()).unwrap();
    assert!(e.contains(&zs3.parse_element("(2,(12))").unwrap()).unwrap());
    assert!(!e.contains(&zs3.parse_element("(0,(12))").unwrap()).unwrap());

    // Negative units are rejected.
    assert!(gamma(&PoGroup::int(), &Element::int(-1)).is_err());
}

#[test]
fn materialize_counts_and_budget() {
    let four = gamma(&PoGroup::int(), &Element::int(3))
        .unwrap()
        .materialize(10)
        .unwrap();
    assert_eq!(four.len(), 4);

    assert_eq!(lex_s3(3).len(), 14);

    let zz = PoGroup::lex(PoGroup::int(), PoGroup::int());
    let e = gamma(&zz, &zz.parse_element("(1,0)").unwrap()).unwrap();
    assert!(e.materialize(1000).is_err());
}

#[test]
fn derived_operations_on_the_chain() {
    let c4 = chain(3);
    let one = c4.id("1").unwrap();
    let two = c4.id("2").unwrap();
    assert_eq!(c4.comp_left(one).unwrap(), two);
    assert_eq!(c4.comp_right(one).unwrap(), two);
    assert_eq!(c4.nfold(one, 0), Some(c4.zero()));
    assert_eq!(c4.nfold(one, 3), Some(c4.unit()));
    assert_eq!(c4.nfold(two, 2), None);
    assert!(c4.left_minus(two, one).is_err());
}

#[test]
fn complements_in_the_lex_interval() {
    let zs3 = lex_s3_group();
    let e = gamma(&zs3, &zs3.parse_element("(3,e)").unwrap()).unwrap();
    for g in ["e", "(12)", "(13)", "(23)", "(123)", "(132)"] {
        let a = zs3.parse_element(&format!("(1,{g})")).unwrap();
        let left = e.comp_left(&a).unwrap();
        let right = e.comp_right(&a).unwrap();
        // Both complements are (2, g^-1): the second components must cancel
        // on the respective sides.
        let ginv = PoGroup::s3()
            .neg(&PoGroup::s3().parse_element(g).unwrap())
            .unwrap();
        let expected = Element::pair(Element::int(2), ginv);
        assert_eq!(left, expected);
        assert_eq!(right, expected);
    }

    // nfold of (1,0) reaches the unit.
    let c = zs3.parse_element("(1,e)").unwrap();
    assert_eq!(
        e.nfold(&c, 3).unwrap(),
        Some(zs3.parse_element("(3,e)").unwrap())
    );
}

#[test]
fn commutativity_examples() {
    let (comm, _) = chain(3).is_commutative();
    assert!(comm);

    let pea = lex_s3(3);
    let (comm, witness) = pea.is_commutative();
    assert!(!comm);
    let (a, b) = witness.unwrap();
    assert_ne!(pea.try_add(a, b), pea.try_add(b, a));

    // The 8-element interval at unit (2,e) is commutative: the only defined
    // middle sums pair inverse elements on both sides.
    let (comm, _) = lex_s3(2).is_commutative();
    assert!(comm);
}

#[test]
fn self_inverse_complements_with_noncommutative_addition() {
    let pea = lex_s3(3);
    for a in 0..pea.len() {
        assert_eq!(pea.comp_left(a).unwrap(), pea.comp_right(a).unwrap());
    }
    assert!(!pea.is_commutative().0);
}

#[test]
fn ideal_examples() {
    let c4 = chain(3);
    let zero_only = vec![c4.zero()];
    assert_eq!(c4.ideals().unwrap(), vec![zero_only.clone()]);
    assert_eq!(c4.maximal_ideals().unwrap(), vec![zero_only]);

    let d = diamond();
    let ideals = d.ideals().unwrap();
    assert_eq!(ideals.len(), 3);
    assert_eq!(d.maximal_ideals().unwrap().len(), 2);

    let pea = lex_s3(3);
    let max = pea.maximal_ideals().unwrap();
    assert_eq!(max.len(), 1);
    assert_eq!(max[0], vec![pea.id("(0,e)").unwrap()]);
}

#[test]
fn homomorphism_examples() {
    let c4 = chain(3);
    let identity: Vec<usize> = (0..c4.len()).collect();
    assert!(c4.is_homomorphism(&identity, &c4).unwrap().is_ok());

    let c2 = chain(1);
    // Collapse 0,1,2 to zero and send 3 to the unit: 1+2=3 breaks it.
    let map = vec![
        c2.zero(),
        c2.zero(),
        c2.zero(),
        c2.unit(),
    ];
    let fail = c4.is_homomorphism(&map, &c2).unwrap().unwrap_err();
    assert_eq!(fail, (c4.id("1").unwrap(), c4.id("2").unwrap()));
}

#[test]
fn induced_order_is_bounded_partial_order() {
    for pea in [chain(3), diamond(), lex_s3(2), lex_s3(3)] {
        for a in 0..pea.len() {
            assert!(pea.leq(pea.zero(), a));
            assert!(pea.leq(a, pea.unit()));
            assert!(pea.leq(a, a));
            for b in 0..pea.len() {
                if pea.leq(a, b) && pea.leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in 0..pea.len() {
                    if pea.leq(a, b) && pea.leq(b, c) {
                        assert!(pea.leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn two_sided_order_characterization() {
    for pea in [chain(4), diamond(), lex_s3(3)] {
        for a in 0..pea.len() {
            for b in 0..pea.len() {
                let right = pea.solve_right(a, b).is_some();
                let left = pea.solve_left(a, b).is_some();
                assert_eq!(
                    right, left,
                    "one-sided witness in {} vs {}",
                    pea.name(a),
                    pea.name(b)
                );
                assert_eq!(right, pea.leq(a, b));
            }
        }
    }
}

#[test]
fn complement_round_trips() {
    for pea in [chain(3), diamond(), lex_s3(3)] {
        for a in 0..pea.len() {
            let l = pea.comp_left(a).unwrap();
            assert_eq!(pea.comp_right(l).unwrap(), a, "(a-)~ = a");
            let r = pea.comp_right(a).unwrap();
            assert_eq!(pea.comp_left(r).unwrap(), a, "(a~)- = a");
        }
    }
}

#[test]
fn materialized_table_agrees_with_group_level_operations() {
    let zs3 = lex_s3_group();
    let u = zs3.parse_element("(3,e)").unwrap();
    let interval = gamma(&zs3, &u).unwrap();
    let pea = interval.materialize(20).unwrap();
    let elems: Vec<Element> = pea
        .names()
        .iter()
        .map(|n| zs3.parse_element(n).unwrap())
        .collect();
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let table = pea.try_add(i, j).map(|k| elems[k].clone());
            let direct = interval.try_add(a, b).unwrap();
            assert_eq!(table, direct);
            let table_leq = pea.leq(i, j);
            let group_leq = zs3.leq(a, b).unwrap();
            assert_eq!(table_leq, group_leq);
        }
    }
}
