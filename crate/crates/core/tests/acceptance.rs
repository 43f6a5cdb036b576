//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

mod common;

use std::time::{Duration, Instant};

use grpfact_core::catalog::{Catalog, ORDER_48};
use grpfact_core::classify::{classify_catalog, s5_suite, sl23_certificate, EXPECTED_NEGATIVES};
use grpfact_core::engine::{
    chain_peel_strategy, exact_cover_search, exhaustive_search, ordered_factorizations, prime_shapes,
    prime_shapes_mod_reversal, sandwich_strategy, theorem6_applicable, EvidenceMethod,
};
use grpfact_core::gf2::{gf2_exactness_check, verify_identities};
use grpfact_core::subgroups::{all_subgroups_clt, is_clt, is_supersolvable, maximal_subgroup_orders, subgroups_of_order};
use grpfact_core::{verify_certificate, FactorizationCertificate, Group, Outcome, SearchBudget};

type Check = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Check + 'a>);

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn none_complete(o: &Outcome) -> Result<u64, String> {
    match o {
        Outcome::NoneComplete(ev) => match &ev.method {
            EvidenceMethod::ExhaustiveComplete { complete: true, nodes_visited, .. } => Ok(*nodes_visited),
            other => Err(format!("unexpected evidence {other:?}")),
        },
        other => Err(format!("outcome {}", other.status())),
    }
}

fn both_checks(g: &Group, c: &FactorizationCertificate) -> Result<(), String> {
    verify_certificate(g, c).map_err(|e| e.to_string())?;
    match gf2_exactness_check(g, &c.masks()) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("{} {}: group algebra check failed", g.id(), c.shape)),
        Err(e) => Err(e.to_string()),
    }
}

fn c1(cat: &Catalog) -> Check {
    let g = cat.build("A4").map_err(|e| e.to_string())?;
    let start = Instant::now();
    let o = exhaustive_search(&g, &common::shape("2,3,2"), &SearchBudget::default()).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    let nodes = none_complete(&o)?;
    if t >= Duration::from_secs(1) {
        return Err(format!("took {}", secs(t)));
    }
    Ok(format!("A4 (2,3,2) none, {nodes} nodes, {}", secs(t)))
}

fn c2(cat: &Catalog) -> Check {
    let g = cat.build("A5").map_err(|e| e.to_string())?;
    let budget = SearchBudget { max_time: Duration::from_secs(3600), ..SearchBudget::default() };
    let start = Instant::now();
    let o = exhaustive_search(&g, &common::shape("2,3,5,2"), &budget).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    let nodes = none_complete(&o)?;
    let target = if t < Duration::from_secs(300) { "within the 5 min target" } else { "over the 5 min target" };
    Ok(format!("A5 (2,3,5,2) none, {nodes} nodes, {} single-threaded, {target}", secs(t)))
}

fn c3(cat: &Catalog) -> Check {
    let mut parts = Vec::new();
    for (id, shape) in [
        ("A4", "2,3,2"),
        ("C3 x A4", "2,9,2"),
        ("(C2 x C2) : C9", "2,9,2"),
        ("(C2 x C2 x C2) : C7", "2,14,2"),
        ("A5", "2,15,2"),
        ("C5 x A4", "2,15,2"),
    ] {
        let g = cat.build(id).map_err(|e| e.to_string())?;
        if !theorem6_applicable(&g) {
            return Err(format!("{id}: involution criterion does not hold"));
        }
        let start = Instant::now();
        let o = exact_cover_search(&g, &common::shape(shape), &SearchBudget::default()).map_err(|e| e.to_string())?;
        none_complete(&o).map_err(|e| format!("{id} ({shape}): {e}"))?;
        let t = start.elapsed();
        if t >= Duration::from_secs(600) {
            return Err(format!("{id}: {}", secs(t)));
        }
        parts.push(format!("{id} {}", secs(t)));
    }
    for id in ["S4", "SL(2,3)", "C2 x A4", "(C3 x C3) : C4", "S5"] {
        if theorem6_applicable(&cat.build(id).map_err(|e| e.to_string())?) {
            return Err(format!("{id}: criterion should fail"));
        }
    }
    Ok(format!("criterion holds and searches complete: {}", parts.join(", ")))
}

fn c4(cat: &Catalog) -> Check {
    let start = Instant::now();
    let r = classify_catalog(cat, 60, &SearchBudget::default(), None).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    if r.negatives != EXPECTED_NEGATIVES {
        return Err(format!("negatives {:?}", r.negatives));
    }
    if r.verdicts.len() != 20 {
        return Err(format!("{} verdicts", r.verdicts.len()));
    }
    let inconclusive = r.verdicts.iter().flat_map(|v| &v.outcomes).any(|o| o.outcome.status() == "inconclusive");
    if inconclusive || t >= Duration::from_secs(1800) {
        return Err(format!("inconclusive {inconclusive}, {}", secs(t)));
    }
    Ok(format!("negatives {:?}, {}", r.negatives, secs(t)))
}

fn c5(cat: &Catalog) -> Check {
    let e = |x: grpfact_core::Error| x.to_string();
    let mut count = 0;
    let s4 = cat.build("S4").map_err(e)?;
    for shape in prime_shapes_mod_reversal(24) {
        let c = chain_peel_strategy(&s4, &shape).ok_or(format!("S4 {shape}"))?;
        both_checks(&s4, &c)?;
        count += 1;
    }
    let s5 = cat.build("S5").map_err(e)?;
    let report = s5_suite(cat).map_err(e)?;
    if report.entries.len() != 10 {
        return Err(format!("S5: {} classes", report.entries.len()));
    }
    for entry in &report.entries {
        both_checks(&s5, &entry.certificate)?;
        count += 1;
    }
    let (sl, c) = sl23_certificate(cat).map_err(e)?;
    both_checks(&sl, &c)?;
    count += 1;
    let g = cat.build("(C3 x C3) : C4").map_err(e)?;
    let c = sandwich_strategy(&g, &common::shape("3,2,2,3")).ok_or("(C3 x C3) : C4 (3,2,2,3)")?;
    both_checks(&g, &c)?;
    count += 1;
    let r = classify_catalog(cat, 48, &SearchBudget::default(), None).map_err(e)?;
    for id in ORDER_48 {
        let v = r.verdicts.iter().find(|v| v.group_id == id).ok_or(format!("{id} missing"))?;
        if !v.multifold || v.outcomes.len() != 3 {
            return Err(format!("{id} not multifold"));
        }
        let g = cat.build(id).map_err(e)?;
        for o in &v.outcomes {
            both_checks(&g, o.outcome.certificate().ok_or(format!("{id} {}", o.shape))?)?;
            count += 1;
        }
    }
    Ok(format!("{count} certificates pass both checks"))
}

fn c6(cat: &Catalog) -> Check {
    let start = Instant::now();
    let mut store = grpfact_core::engine::CertificateStore::new();
    let r = verify_identities(cat, &mut store).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    if !r.all_hold() || r.checks.len() != 4 || t >= Duration::from_secs(1) {
        return Err(format!("{} identities, {}", r.checks.len(), secs(t)));
    }
    Ok(format!("4 identities hold, {}", secs(t)))
}

fn c7(cat: &Catalog) -> Check {
    let mut n = 0;
    for entry in cat.entries() {
        let g = cat.build(&entry.id).map_err(|e| e.to_string())?;
        if all_subgroups_clt(&g) != is_supersolvable(&g) {
            return Err(format!("{} disagrees", entry.id));
        }
        n += 1;
    }
    let a4 = cat.build("A4").map_err(|e| e.to_string())?;
    let s4 = cat.build("S4").map_err(|e| e.to_string())?;
    if is_clt(&a4) || !subgroups_of_order(&a4, 6).is_empty() || !is_clt(&s4) {
        return Err("A4/S4 witnesses".into());
    }
    Ok(format!("equivalence on {n} groups; A4 has no subgroup of order 6, S4 is CLT"))
}

fn c8(cat: &Catalog) -> Check {
    for id in ORDER_48 {
        let g = cat.build(id).map_err(|e| e.to_string())?;
        let got = maximal_subgroup_orders(&g);
        let want = cat.entry(id).map_err(|e| e.to_string())?.maximal_orders.clone();
        if Some(&got) != want.as_ref() {
            return Err(format!("{id}: {got:?} vs {want:?}"));
        }
    }
    Ok("all ten rows match".into())
}

fn c9() -> Check {
    let cases = common::CASES;
    common::prefix_exactness(cases)?;
    common::reversal_and_merge(cases)?;
    common::translation_conjugation(cases)?;
    common::gf2_matches_product(cases)?;
    common::double_coset_formula(cases)?;
    let pairs = common::exact_cover_agreement()?;
    Ok(format!("5 suites x {cases} cases; exact cover = exhaustive on all {pairs} 3-shape pairs"))
}

fn c10() -> Check {
    let expected = [(24, 4, 2), (48, 5, 3), (120, 20, 10), (36, 6, 4), (56, 4, 2), (60, 12, 6)];
    for (n, total, classes) in expected {
        let got = (prime_shapes(n).len(), prime_shapes_mod_reversal(n).len());
        if got != (total, classes) {
            return Err(format!("{n}: {got:?}"));
        }
    }
    if ordered_factorizations(24, 2).len() != 6 {
        return Err("ordered factorizations of 24 into 2".into());
    }
    Ok("24:4/2 48:5/3 120:20/10 36:6/4 56:4/2 60:12/6".into())
}

fn main() {
    let cat = Catalog::builtin();
    let criteria: Vec<Criterion> = vec![
        (1, "A4 (2,3,2) exhaustive", Box::new(|| c1(&cat))),
        (2, "A5 (2,3,5,2) exhaustive", Box::new(|| c2(&cat))),
        (3, "involution criterion cross-check", Box::new(|| c3(&cat))),
        (4, "classification to order 60", Box::new(|| c4(&cat))),
        (5, "positive certificates", Box::new(|| c5(&cat))),
        (6, "group algebra identities", Box::new(|| c6(&cat))),
        (7, "CLT and supersolvability", Box::new(|| c7(&cat))),
        (8, "order-48 maximal subgroups", Box::new(|| c8(&cat))),
        (9, "property suites", Box::new(c9)),
        (10, "shape combinatorics", Box::new(c10)),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (n, name, check) in criteria {
        if !filter.is_empty() && !filter.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(msg) => println!("criterion {n:>2} PASS  {name}: {msg} [{}]", secs(start.elapsed())),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {msg} [{}]", secs(start.elapsed()));
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
