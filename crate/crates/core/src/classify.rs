//! Multifold factorizability of every catalog group up to a given order.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, Tag};
use crate::engine::chain::Peeler;
use crate::engine::{
    chain_peel_strategy, decide, exact_cover_search, prime_shapes_mod_reversal, sandwich_with_pair,
    theorem6_route, try_constructions, verify_certificate, CertificateStore, EvidenceMethod,
    FactorizationCertificate, Method, Outcome, SearchBudget, Shape,
};
use crate::error::{Error, Result};
use crate::gf2::{gf2_exactness_check, verify_identities};
use crate::group::{parse_permutation, Group, Permutation};
use crate::mask::SubsetMask;
use crate::subgroups::is_supersolvable;

/// Per-(group, shape) outcomes kept between runs.
pub trait OutcomeCache: Sync {
    fn get(&self, g: &Group, shape: &Shape) -> Option<Outcome>;
    fn put(&self, g: &Group, shape: &Shape, outcome: &Outcome);
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShapeResult {
    pub shape: Shape,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupVerdict {
    pub group_id: String,
    pub order: usize,
    pub supersolvable: bool,
    pub multifold: bool,
    pub outcomes: Vec<ShapeResult>,
    pub failing_shape: Option<Shape>,
    /// complete search of the `(2, n/4, 2)` target behind a structural negative
    pub cross_check: Option<ShapeResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub max_order: usize,
    pub verdicts: Vec<GroupVerdict>,
    /// sorted by order, then id
    pub negatives: Vec<String>,
    /// supersolvable control groups, checked through the same path
    pub controls: Vec<GroupVerdict>,
    pub elapsed_secs: f64,
}

/// Groups of order at most 60 with a prime shape that does not factor.
pub const EXPECTED_NEGATIVES: [&str; 6] =
    ["A4", "(C2 x C2) : C9", "C3 x A4", "(C2 x C2 x C2) : C7", "A5", "C5 x A4"];

/// The explicit `(2,2,3,2)` factorization of SL(2,3):
/// `{e,a}{e,b}{e,t,t^-1}{e,-e}` with `t` upper unitriangular.
pub fn sl23_certificate(catalog: &Catalog) -> Result<(Group, FactorizationCertificate)> {
    let (g, names) = catalog.build_named("SL(2,3)")?;
    let s: HashMap<&str, usize> = names.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let set = |words: &[&str]| -> Result<SubsetMask> {
        words.iter().map(|w| g.eval_word(w, &s)).collect::<Result<SubsetMask>>()
    };
    let masks = [set(&["e", "a"])?, set(&["e", "b"])?, set(&["e", "t", "t^-1"])?, set(&["e", "a^2"])?];
    let cert = FactorizationCertificate::from_masks(&g, &masks, Method::Manual)?;
    Ok((g, cert))
}

/// Certificates that no strategy needs to rediscover.
pub fn seed_store(catalog: &Catalog) -> Result<CertificateStore> {
    let mut store = CertificateStore::new();
    verify_identities(catalog, &mut store)?;
    let (g, cert) = sl23_certificate(catalog)?;
    store.insert(&g, cert)?;
    Ok(store)
}

fn both_checks(g: &Group, cert: &FactorizationCertificate) -> Result<()> {
    verify_certificate(g, cert)?;
    if !gf2_exactness_check(g, &cert.masks())? {
        return Err(Error::VerifyFailed(format!("{} {}: group algebra check failed", g.id(), cert.shape)));
    }
    Ok(())
}

fn cached_or(
    g: &Group,
    shape: &Shape,
    cache: Option<&dyn OutcomeCache>,
    run: impl FnOnce() -> Result<Outcome>,
) -> Result<Outcome> {
    if let Some(hit) = cache.and_then(|c| c.get(g, shape)) {
        let usable = match &hit {
            Outcome::Found(cert) => verify_certificate(g, cert).is_ok(),
            Outcome::NoneComplete(_) => true,
            Outcome::Inconclusive(_) => false,
        };
        if usable {
            return Ok(hit);
        }
    }
    let out = run()?;
    if let Some(c) = cache {
        c.put(g, shape, &out);
    }
    Ok(out)
}

/// Decides every prime-shape class of `g`, stopping at the first negative.
///
/// Cheap constructions and the involution criterion run over all classes
/// before any search, so a structural negative is found without searching.
pub fn is_multifold_with(
    g: &Group,
    budget: &SearchBudget,
    store: Option<&CertificateStore>,
    cache: Option<&dyn OutcomeCache>,
) -> Result<GroupVerdict> {
    let supersolvable = is_supersolvable(g);
    let mut verdict = GroupVerdict {
        group_id: g.id().to_string(),
        order: g.order(),
        supersolvable,
        multifold: true,
        outcomes: Vec::new(),
        failing_shape: None,
        cross_check: None,
    };
    if g.order() < 4 {
        return Ok(verdict);
    }
    let shapes = prime_shapes_mod_reversal(g.order());
    let mut slots: Vec<Option<Outcome>> = vec![None; shapes.len()];
    for (slot, shape) in slots.iter_mut().zip(&shapes) {
        let cert = if supersolvable { chain_peel_strategy(g, shape) } else { try_constructions(g, shape, store) };
        *slot = cert.map(Outcome::Found);
    }
    let negative = shapes
        .iter()
        .zip(&slots)
        .find_map(|(s, o)| if o.is_none() { theorem6_route(g, s) } else { None });
    if let Some(ev) = negative {
        let i = shapes.iter().position(|s| *s == ev.shape).expect("shape from the list");
        slots[i] = Some(Outcome::NoneComplete(ev));
    } else {
        for (slot, shape) in slots.iter_mut().zip(&shapes) {
            if slot.is_some() {
                continue;
            }
            let out = cached_or(g, shape, cache, || decide(g, shape, budget, store))?;
            let stop = !out.is_found();
            *slot = Some(out);
            if stop {
                break;
            }
        }
    }
    for (shape, slot) in shapes.into_iter().zip(slots) {
        let Some(outcome) = slot else { continue };
        match &outcome {
            Outcome::Found(cert) => both_checks(g, cert)?,
            Outcome::NoneComplete(ev) => {
                verdict.multifold = false;
                if verdict.failing_shape.is_none() {
                    verdict.failing_shape = Some(shape.clone());
                    verdict.cross_check = cross_check(g, &ev.method, budget, cache)?;
                }
            }
            Outcome::Inconclusive(_) => {
                return Err(Error::BudgetExhausted { group: g.id().to_string(), shape: shape.to_string() })
            }
        }
        verdict.outcomes.push(ShapeResult { shape, outcome });
    }
    Ok(verdict)
}

pub fn is_multifold(g: &Group, budget: &SearchBudget) -> Result<GroupVerdict> {
    is_multifold_with(g, budget, None, None)
}

/// A structural negative is confirmed by a complete exact-cover search.
fn cross_check(
    g: &Group,
    method: &EvidenceMethod,
    budget: &SearchBudget,
    cache: Option<&dyn OutcomeCache>,
) -> Result<Option<ShapeResult>> {
    let EvidenceMethod::Theorem6 { merged_to, .. } = method else { return Ok(None) };
    let outcome = cached_or(g, merged_to, cache, || exact_cover_search(g, merged_to, budget))?;
    match outcome {
        Outcome::NoneComplete(_) => Ok(Some(ShapeResult { shape: merged_to.clone(), outcome })),
        Outcome::Found(_) => Err(Error::VerifyFailed(format!(
            "{} has a {} factorization despite the involution criterion",
            g.id(),
            merged_to
        ))),
        Outcome::Inconclusive(_) => {
            Err(Error::BudgetExhausted { group: g.id().to_string(), shape: merged_to.to_string() })
        }
    }
}

/// Verdicts for every non-supersolvable entry and every control up to `max_order`.
pub fn classify_catalog(
    catalog: &Catalog,
    max_order: usize,
    budget: &SearchBudget,
    cache: Option<&dyn OutcomeCache>,
) -> Result<ClassificationReport> {
    let start = Instant::now();
    let store = seed_store(catalog)?;
    let run = |tag: Tag| -> Result<Vec<GroupVerdict>> {
        let entries: Vec<_> = catalog.with_tag(tag).filter(|e| e.order <= max_order).collect();
        if let Some(e) = entries.iter().find(|e| !e.is_buildable()) {
            return Err(Error::CatalogIncomplete(format!("{} has no generators", e.id)));
        }
        entries
            .par_iter()
            .map(|e| is_multifold_with(&catalog.build(&e.id)?, budget, Some(&store), cache))
            .collect()
    };
    let verdicts = run(Tag::NonSupersolvable)?;
    let controls = run(Tag::Control)?;
    let mut neg: Vec<&GroupVerdict> = verdicts.iter().filter(|v| !v.multifold).collect();
    neg.sort_by(|a, b| (a.order, &a.group_id).cmp(&(b.order, &b.group_id)));
    let negatives = neg.iter().map(|v| v.group_id.clone()).collect();
    Ok(ClassificationReport { max_order, verdicts, negatives, controls, elapsed_secs: start.elapsed().as_secs_f64() })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct S5Entry {
    pub shape: Shape,
    /// how the certificate was built
    pub route: String,
    pub certificate: FactorizationCertificate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct S5Report {
    pub entries: Vec<S5Entry>,
}

/// Shape, generators of `A`, generators of `B`, label. Empty generator
/// lists stand for Sylow 2- and 3-subgroups.
type S5Pair = ([usize; 5], &'static [&'static str], &'static [&'static str], &'static str);

/// Subgroup pairs `(A, B)` with the shape they produce around a transversal.
const S5_PAIRS: [S5Pair; 6] = [
    ([2, 2, 2, 5, 3], &[], &[], "Sylow 2 | Sylow 3"),
    ([2, 2, 5, 2, 3], &["(1,2)(3,4)", "(1,3)(2,4)"], &["(1,2)", "(1,2,3)"], "V | S3"),
    ([2, 3, 2, 5, 2], &["(1,2)", "(1,2,3)"], &["(1,2,3,4,5)", "(1,5)(2,4)"], "S3 | D5"),
    ([2, 2, 3, 5, 2], &["(1,2,3)", "(1,2)(3,4)"], &["(1,2)"], "A4 | C2"),
    ([2, 2, 5, 3, 2], &["(1,2)(3,4)", "(1,3)(2,4)"], &["(1,2)", "(1,2,3)"], "V | S3"),
    ([2, 5, 2, 2, 3], &["(1,2)"], &["(1,2,3)", "(1,2)(3,4)"], "C2 | A4"),
];

/// Certificates for all prime-shape classes of S5: a Sylow 5-subgroup
/// beside S4 when 5 is at an end, otherwise a subgroup pair from [`S5_PAIRS`].
pub fn s5_suite(catalog: &Catalog) -> Result<S5Report> {
    let g = catalog.build("S5")?;
    let fail = |what: String| Error::ConstructionError { id: "S5".into(), detail: what };
    let gens: Vec<Permutation> =
        ["(1,2,3,4,5)", "(1,2)"].iter().map(|s| parse_permutation(5, s)).collect::<Result<_>>()?;
    let (h, perms) = Group::permutation_group("S5", 5, &gens)?;
    if h.table_rows() != g.table_rows() {
        return Err(fail("catalog S5 uses different generators".into()));
    }
    let span = |words: &[&str]| -> Result<SubsetMask> {
        let mut idx = Vec::new();
        for w in words {
            let p = parse_permutation(5, w)?;
            idx.push(perms.iter().position(|q| *q == p).ok_or_else(|| fail(format!("{w} not found")))?);
        }
        Ok(g.closure(SubsetMask::from_indices(idx)))
    };
    let s4 = span(&["(1,2)", "(1,2,3,4)"])?;
    let p5 = g.sylow(5)?.mask();
    let mut peeler = Peeler::new(&g);
    let mut entries = Vec::new();
    for shape in prime_shapes_mod_reversal(120) {
        let parts = shape.parts();
        let (masks, route) = if parts[0] == 5 || parts[4] == 5 {
            let at_front = parts[0] == 5;
            let rest = if at_front { &parts[1..] } else { &parts[..4] };
            let inner = peeler.peel(s4, rest).ok_or_else(|| fail(format!("S4 does not peel as {rest:?}")))?;
            let masks: Vec<SubsetMask> = if at_front {
                std::iter::once(p5).chain(inner).collect()
            } else {
                inner.into_iter().chain(std::iter::once(p5)).collect()
            };
            (masks, if at_front { "C5 . S4" } else { "S4 . C5" }.to_string())
        } else {
            let (row, a, b, label) = S5_PAIRS
                .iter()
                .find(|(row, ..)| row[..] == *parts || row.iter().rev().eq(parts.iter()))
                .ok_or_else(|| fail(format!("no subgroup pair for {shape}")))?;
            let (a, b) = if a.is_empty() {
                (g.sylow(2)?.mask(), g.sylow(3)?.mask())
            } else {
                (span(a)?, span(b)?)
            };
            let row_shape = Shape::new(row.to_vec())?;
            let cert = sandwich_with_pair(&g, &row_shape, a, b)
                .ok_or_else(|| fail(format!("pair {label} does not give {row_shape}")))?;
            let cert = if row_shape == shape { cert } else { cert.reversed(&g) };
            (cert.masks(), format!("pair {label}"))
        };
        let certificate = FactorizationCertificate::from_masks(&g, &masks, Method::Sandwich)?;
        both_checks(&g, &certificate)?;
        entries.push(S5Entry { shape, route, certificate });
    }
    Ok(S5Report { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl23_explicit_certificate() {
        let (g, cert) = sl23_certificate(&Catalog::builtin()).unwrap();
        both_checks(&g, &cert).unwrap();
        assert_eq!(cert.shape.to_string(), "(2,2,3,2)");
    }

    #[test]
    fn small_verdicts() {
        let cat = Catalog::builtin();
        let budget = SearchBudget::default();
        let a4 = is_multifold(&cat.build("A4").unwrap(), &budget).unwrap();
        assert!(!a4.multifold);
        assert_eq!(a4.failing_shape.unwrap().to_string(), "(2,3,2)");
        assert!(a4.cross_check.unwrap().outcome.is_none());
        let s4 = is_multifold(&cat.build("S4").unwrap(), &budget).unwrap();
        assert!(s4.multifold);
        assert_eq!(s4.outcomes.len(), 2);
        let c2 = is_multifold(&Group::cyclic(2).unwrap(), &budget).unwrap();
        assert!(c2.multifold && c2.outcomes.is_empty());
    }

    #[test]
    fn s5_all_classes() {
        let report = s5_suite(&Catalog::builtin()).unwrap();
        assert_eq!(report.entries.len(), 10);
        let ends = report.entries.iter().filter(|e| e.route.contains("C5")).count();
        assert_eq!(ends, 4);
    }
}
