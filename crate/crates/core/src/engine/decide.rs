//! The decision cascade: constructions first, then certified non-existence,
//! then complete search.

use std::collections::HashSet;
use std::time::Instant;

use super::certificate::{verify_certificate, FactorizationCertificate, Method};
use super::chain::chain_peel_strategy;
use super::exact_cover::{exact_cover_search, MAX_OUTER_PRODUCT};
use super::exhaustive::exhaustive_search;
use super::outcome::{Decision, Outcome, SearchBudget};
use super::sandwich::sandwich_strategy;
use super::shape::Shape;
use super::store::CertificateStore;
use super::theorem6::theorem6_route;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::SubsetMask;
use crate::subgroups::{all_subgroups, coset_transversal, Side};

/// Chain peel, sandwich and stored certificates, in that order.
pub fn try_constructions(g: &Group, shape: &Shape, store: Option<&CertificateStore>) -> Option<FactorizationCertificate> {
    if shape.len() == 1 {
        return FactorizationCertificate::from_masks(g, &[g.full_mask()], Method::Chain).ok();
    }
    chain_peel_strategy(g, shape)
        .or_else(|| sandwich_strategy(g, shape))
        .or_else(|| store.and_then(|s| s.lookup(g, shape)))
}

/// Subgroups of the given order, one per conjugacy class.
fn subgroup_classes_of_order(g: &Group, order: usize) -> Vec<SubsetMask> {
    let mut seen: HashSet<SubsetMask> = HashSet::new();
    let mut out = Vec::new();
    for &h in all_subgroups(g).masks().iter().filter(|h| h.len() == order) {
        if seen.contains(&h) {
            continue;
        }
        seen.extend(g.elements().map(|x| g.conjugate_mask(h, x)));
        out.push(h);
    }
    out
}

/// `G = T H` (or `H T`) with `H` factored by a full recursive decision.
fn lift(g: &Group, shape: &Shape, budget: &SearchBudget) -> Result<Option<FactorizationCertificate>> {
    let n = g.order();
    for side in [Side::Left, Side::Right] {
        let (index, rest) = match side {
            Side::Left => (shape.first(), shape.tail(1)),
            Side::Right => (shape.last(), shape.head(1)),
        };
        let Some(rest) = rest else { continue };
        for h in subgroup_classes_of_order(g, n / index) {
            let (sub, elems) = g.subgroup_as_group(h)?;
            let Outcome::Found(inner) = decide(&sub, &rest, budget, None)? else { continue };
            let mut masks: Vec<SubsetMask> = inner
                .masks()
                .iter()
                .map(|m| m.iter().map(|i| elems[i]).collect())
                .collect();
            let t = coset_transversal(g, h, side);
            match side {
                Side::Left => masks.insert(0, t),
                Side::Right => masks.push(t),
            }
            return Ok(Some(FactorizationCertificate::from_masks(g, &masks, inner.method)?));
        }
    }
    Ok(None)
}

fn search(g: &Group, shape: &Shape, budget: &SearchBudget) -> Result<Outcome> {
    if shape.len() == 3 && shape.first() * shape.last() <= MAX_OUTER_PRODUCT {
        exact_cover_search(g, shape, budget)
    } else {
        exhaustive_search(g, shape, budget)
    }
}

fn checked(g: &Group, cert: FactorizationCertificate) -> Result<Decision> {
    verify_certificate(g, &cert)?;
    Ok(Outcome::Found(cert))
}

/// Decides whether `g` has a factorization of the given shape.
///
/// Every certificate is re-verified before it is returned.
pub fn decide(g: &Group, shape: &Shape, budget: &SearchBudget, store: Option<&CertificateStore>) -> Result<Decision> {
    if shape.product() != g.order() {
        return Err(Error::BadShape(format!("shape {} does not multiply to |G| = {}", shape, g.order())));
    }
    let start = Instant::now();
    if let Some(cert) = try_constructions(g, shape, store) {
        return checked(g, cert);
    }
    if let Some(mut ev) = theorem6_route(g, shape) {
        ev.elapsed_secs = start.elapsed().as_secs_f64();
        return Ok(Outcome::NoneComplete(ev));
    }
    if let Some(cert) = lift(g, shape, budget)? {
        return checked(g, cert);
    }
    match search(g, shape, budget)? {
        Outcome::Found(cert) => checked(g, cert),
        other => Ok(other),
    }
}
