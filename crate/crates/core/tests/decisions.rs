mod common;

use common::shape;
use grpfact_core::catalog::Catalog;
use grpfact_core::classify::{is_multifold, is_multifold_with, seed_store};
use grpfact_core::engine::{decide, exhaustive_search, theorem6_hypotheses, EvidenceMethod};
use grpfact_core::{Outcome, SearchBudget};

fn evidence_kind(o: &Outcome) -> &'static str {
    match o {
        Outcome::NoneComplete(ev) => match ev.method {
            EvidenceMethod::Theorem6 { .. } => "theorem6",
            EvidenceMethod::ExhaustiveComplete { .. } => "search",
        },
        Outcome::Found(_) => "found",
        Outcome::Inconclusive(_) => "inconclusive",
    }
}

#[test]
fn refined_shapes_fall_to_the_involution_criterion() {
    let cat = Catalog::builtin();
    let budget = SearchBudget::default();
    for (id, s, merged) in [("(C2 x C2 x C2) : C7", "2,2,7,2", "(2,14,2)"), ("C3 x A4", "2,3,3,2", "(2,9,2)")] {
        let g = cat.build(id).unwrap();
        let o = decide(&g, &shape(s), &budget, None).unwrap();
        assert_eq!(evidence_kind(&o), "theorem6", "{id}");
        let Outcome::NoneComplete(ev) = o else { unreachable!() };
        let EvidenceMethod::Theorem6 { merged_to, .. } = ev.method else { unreachable!() };
        assert_eq!(merged_to.to_string(), merged);
    }
}

#[test]
fn search_confirms_small_refined_negative() {
    let cat = Catalog::builtin();
    let g = cat.build("C3 x A4").unwrap();
    let o = exhaustive_search(&g, &shape("2,3,3,2"), &SearchBudget::default()).unwrap();
    assert_eq!(evidence_kind(&o), "search");
}

#[test]
fn centralizer_split_in_the_order_56_group() {
    let cat = Catalog::builtin();
    let g = cat.build("(C2 x C2 x C2) : C7").unwrap();
    let rec = theorem6_hypotheses(&g);
    assert!(rec.holds());
    assert_eq!((rec.sylow2_order, rec.centralizer_order, rec.odd_part_order), (8, 8, 1));
    let a5 = theorem6_hypotheses(&cat.build("A5").unwrap());
    assert_eq!((a5.sylow2_order, a5.centralizer_order, a5.odd_part_order), (4, 4, 1));
}

#[test]
fn verdicts_for_small_groups() {
    let cat = Catalog::builtin();
    let budget = SearchBudget::default();
    let store = seed_store(&cat).unwrap();
    let sl = is_multifold_with(&cat.build("SL(2,3)").unwrap(), &budget, Some(&store), None).unwrap();
    assert!(sl.multifold);
    assert_eq!(sl.outcomes.len(), 2);
    let s4 = is_multifold(&cat.build("S4").unwrap(), &budget).unwrap();
    assert!(s4.multifold && s4.failing_shape.is_none());
    let g = is_multifold(&cat.build("(C3 x C3) : C4").unwrap(), &budget).unwrap();
    assert!(g.multifold);
    assert_eq!(g.outcomes.len(), 4);
}

#[test]
fn negatives_have_no_certificate_for_any_refinement() {
    let cat = Catalog::builtin();
    let budget = SearchBudget::default();
    for id in ["A4", "C3 x A4", "(C2 x C2) : C9"] {
        let g = cat.build(id).unwrap();
        let v = is_multifold(&g, &budget).unwrap();
        let failing = v.failing_shape.unwrap();
        let check = v.cross_check.unwrap();
        assert!(check.outcome.is_none());
        assert!(failing.refines(&check.shape));
        for k in 3..=failing.len() {
            for s in grpfact_core::engine::ordered_factorizations(g.order(), k) {
                if s.refines(&check.shape) {
                    let o = decide(&g, &s, &budget, None).unwrap();
                    assert!(o.is_none(), "{id} {s}");
                }
            }
        }
    }
}
