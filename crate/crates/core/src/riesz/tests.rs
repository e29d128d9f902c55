use super::*;
use crate::pea::{chain, diamond, gamma, lex_s3_interval, FinitePea};
use crate::element::Element;
use crate::group::PoGroup;

fn lex_s3(m: i64) -> FinitePea {
    lex_s3_interval(m).unwrap()
}

fn ex29_algebra() -> FinitePea {
    let g = PoGroup::cone_ex29();
    gamma(&g, &Element::vec(&[1, 0]))
        .unwrap()
        .materialize(10)
        .unwrap()
}

#[test]
fn com_examples() {
    let c4 = chain(3);
    for b in 0..c4.len() {
        assert!(com(&c4, c4.zero(), b));
    }
    assert!(com(&c4, c4.id("1").unwrap(), c4.id("2").unwrap()));

    let pea = lex_s3(3);
    let a = pea.id("(1,(12))").unwrap();
    let b = pea.id("(1,(13))").unwrap();
    assert!(!com(&pea, a, b));
}

#[test]
fn rip_examples() {
    assert!(check_rip(&chain(3)).verdict.holds());
    assert!(check_rip(&diamond()).verdict.holds());
    assert!(check_rip(&ex29_algebra()).verdict.holds());
}

#[test]
fn rdp_family_on_the_two_element_algebra() {
    let e = ex29_algebra();
    assert_eq!(e.len(), 2);
    assert!(check_rdp(&e).verdict.holds());
    assert!(check_rdp1(&e).verdict.holds());
    assert!(check_rdp2(&e).verdict.holds());
}

#[test]
fn rdp_fails_on_the_lex_interval_with_verified_witness() {
    let pea = lex_s3(3);
    let report = check_rdp(&pea);
    let Verdict::Fails { witness, .. } = &report.verdict else {
        panic!("expected rdp failure");
    };
    let quad: Vec<usize> = witness.iter().map(|n| pea.id(n).unwrap()).collect();
    assert!(verify_no_table_brute_force(
        &pea,
        [quad[0], quad[1], quad[2], quad[3]]
    ));

    // The conjugation quadruple (1,g)+(1,h) = (1,h)+(1,h^-1gh) with g=(12),
    // h=(13) admits no table either.
    let a1 = pea.id("(1,(12))").unwrap();
    let a2 = pea.id("(1,(13))").unwrap();
    let b1 = pea.id("(1,(13))").unwrap();
    let b2 = pea.id("(1,(23))").unwrap();
    let s1 = pea.try_add(a1, a2).unwrap();
    let s2 = pea.try_add(b1, b2).unwrap();
    assert_eq!(s1, s2, "the quadruple has equal sums");
    assert!(verify_no_table_brute_force(&pea, [a1, a2, b1, b2]));
    // rdp1 and rdp2 fail along with rdp.
    assert!(!check_rdp1(&pea).verdict.holds());
    assert!(!check_rdp2(&pea).verdict.holds());
}

#[test]
fn rdp2_on_the_diamond() {
    assert!(check_rdp2(&diamond()).verdict.holds());
}

#[test]
fn rdp_fails_even_on_the_commutative_8_element_interval() {
    // Commutativity does not rescue refinement over a non-directed factor:
    // (1,g)+(1,g^-1) = (1,h)+(1,h^-1) admits no table when g != h.
    let pea = lex_s3(2);
    assert!(pea.is_commutative().0);
    let report = check_rdp(&pea);
    let Verdict::Fails { witness, .. } = &report.verdict else {
        panic!("expected rdp failure");
    };
    let quad: Vec<usize> = witness.iter().map(|n| pea.id(n).unwrap()).collect();
    assert!(verify_no_table_brute_force(
        &pea,
        [quad[0], quad[1], quad[2], quad[3]]
    ));
}

#[test]
fn holds_verdicts_carry_revalidating_tables() {
    for pea in [chain(4), diamond(), ex29_algebra()] {
        let (report, tables) = check_rdp_with_tables(&pea);
        assert!(report.verdict.holds());
        assert!(!tables.is_empty());
        for t in &tables {
            assert!(t.revalidate(&pea));
        }
        let (report1, tables1) = check_rdp1_with_tables(&pea);
        assert!(report1.verdict.holds());
        for t in &tables1 {
            assert!(t.revalidate(&pea));
            assert!(com(&pea, t.table[1], t.table[2]));
        }
    }
}

#[test]
fn mn_rdp_examples() {
    let c4 = chain(3);
    // Single-row case is a pass-through of the column splits.
    assert!(check_mn_rdp(&c4, 1, 3, false).unwrap().verdict.holds());
    // The 2x2 case coincides with the plain table checker by definition.
    assert_eq!(
        check_mn_rdp(&c4, 2, 2, false).unwrap().verdict.holds(),
        check_rdp(&c4).verdict.holds()
    );
    assert!(check_mn_rdp(&c4, 2, 3, false).unwrap().verdict.holds());
    assert!(check_mn_rdp(&c4, 3, 3, true).unwrap().verdict.holds());
    assert!(check_mn_rdp(&c4, 0, 2, false).is_err());
}

#[test]
fn mn_rdp_agrees_with_table_checkers_on_small_models() {
    for pea in enumerate_peas(4).unwrap() {
        let plain = check_mn_rdp(&pea, 2, 2, false).unwrap().verdict.holds();
        assert_eq!(plain, check_rdp(&pea).verdict.holds());
        let with_com = check_mn_rdp(&pea, 2, 2, true).unwrap().verdict.holds();
        assert_eq!(with_com, check_rdp1(&pea).verdict.holds());
    }
}

#[test]
fn enumeration_counts_and_validity() {
    let upto2 = enumerate_peas(2).unwrap();
    assert_eq!(upto2.len(), 1, "exactly the 2-chain");
    let upto3 = enumerate_peas(3).unwrap();
    assert_eq!(upto3.len(), 2, "the 2-chain and the 3-chain");
    for pea in enumerate_peas(4).unwrap() {
        assert!(pea.check_axioms().is_valid());
    }
    assert!(enumerate_peas(7).is_err());
}

#[test]
fn three_chain_appears_in_the_catalog() {
    let c3 = chain(2);
    let found = enumerate_peas(3).unwrap().into_iter().any(|pea| {
        pea.len() == 3 && {
            // Isomorphic to the 3-chain: a+a = 1 for the middle element.
            let mid = (0..3).find(|&i| i != pea.zero() && i != pea.unit()).unwrap();
            pea.try_add(mid, mid) == Some(pea.unit())
        }
    });
    assert!(found);
    assert!(check_rip(&c3).verdict.holds());
}

#[test]
fn audit_is_consistent_on_known_instances() {
    for pea in [chain(3), lex_s3(3), diamond(), ex29_algebra()] {
        let audit = implication_audit(&pea);
        assert!(audit.consistent(), "violations: {:?}", audit.violations);
    }
}

#[test]
fn audit_on_the_small_catalog_flags_only_the_interpolation_equivalence() {
    // The one-directional implications rdp2 => rdp1 => rdp => rdp0 never
    // fire on the catalog. The rdp0 <=> rip leg is genuinely violated by
    // the horizontal glue of two 3-chains ({0,a,b,1} with a+a = b+b = 1):
    // c = 1 interpolates its only incomparable quadruple, yet b <= a+a has
    // no decomposition below a. The audit reports that honestly.
    let mut equivalence_breaks = 0;
    for pea in enumerate_peas(4).unwrap() {
        let audit = implication_audit(&pea);
        for v in &audit.violations {
            assert_eq!(v, "rdp0 is false but rip is true", "unexpected: {v}");
            equivalence_breaks += 1;
        }
    }
    assert_eq!(equivalence_breaks, 1, "exactly the glue algebra at size 4");
}

#[test]
fn commutative_small_models_have_rdp_iff_rdp1() {
    for pea in enumerate_peas(4).unwrap() {
        if pea.is_commutative().0 {
            assert_eq!(
                check_rdp(&pea).verdict.holds(),
                check_rdp1(&pea).verdict.holds()
            );
        }
    }
}

#[test]
fn report_lines_are_scriptable() {
    let report = check_rdp(&lex_s3(3));
    let line = report.line();
    assert!(line.starts_with("rdp: FAILS witness="), "{line}");
    assert!(check_rip(&chain(2)).line().ends_with("HOLDS"));
}
