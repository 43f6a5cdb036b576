//! Three-part shapes `(a, m, b)` as exact cover of `G` by translates `A x B`.
//!
//! `A` is normalized like the first factor of the exhaustive search, `B`
//! contains the identity, and the middle factor contains the identity, so the
//! block `A B` is always used.

use std::time::Instant;

use super::certificate::{FactorizationCertificate, Method};
use super::outcome::{EvidenceMethod, NonexistenceEvidence, Outcome, SearchBudget, SearchKind, SearchStats};
use super::shape::Shape;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::SubsetMask;

pub const MAX_OUTER_PRODUCT: usize = 16;

pub const NORMALIZATIONS: [&str; 3] = [
    "identity_in_every_factor",
    "first_factor_class_representative",
    "block_ab_forced",
];

struct Cover<'a> {
    g: &'a Group,
    budget: &'a SearchBudget,
    start: Instant,
    nodes: u64,
    stopped: bool,
}

impl Cover<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024)
            && (self.nodes > self.budget.max_nodes || self.start.elapsed() > self.budget.max_time)
        {
            self.stopped = true;
        }
        !self.stopped
    }

    /// Translates `A x B` of full size, deduplicated, least `x` kept.
    fn blocks(&self, a: SubsetMask, b: SubsetMask) -> Vec<(u128, usize)> {
        let size = a.len() * b.len();
        let mut out: Vec<(u128, usize)> = Vec::new();
        for x in self.g.elements() {
            let blk = self.g.product(self.g.right_translate(a, x), b);
            if blk.len() == size && !out.iter().any(|&(m, _)| m == blk.0) {
                out.push((blk.0, x));
            }
        }
        out
    }

    fn cover(&mut self, blocks: &[(u128, usize)], uncovered: u128, chosen: &mut Vec<usize>) -> bool {
        if uncovered == 0 {
            return true;
        }
        if !self.tick() {
            return false;
        }
        let live: Vec<(u128, usize)> = blocks.iter().copied().filter(|&(m, _)| m & !uncovered == 0).collect();
        // element with fewest candidate blocks, ties to the least index
        let mut best = (usize::MAX, 0usize);
        let mut bits = uncovered;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let count = live.iter().filter(|&&(m, _)| m >> u & 1 == 1).count();
            if count < best.0 {
                best = (count, u);
                if count == 0 {
                    return false;
                }
            }
        }
        let u = best.1;
        for &(m, x) in live.iter().filter(|&&(m, _)| m >> u & 1 == 1) {
            chosen.push(x);
            if self.cover(&live, uncovered & !m, chosen) {
                return true;
            }
            chosen.pop();
            if self.stopped {
                return false;
            }
        }
        false
    }
}

/// k-subsets of `pool` in lexicographic order of their sorted index lists.
fn subsets(pool: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            if !go(pool, k, i + 1, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    go(pool, k, 0, &mut Vec::new(), f)
}

pub fn exact_cover_search(g: &Group, shape: &Shape, budget: &SearchBudget) -> Result<Outcome> {
    if shape.len() != 3 || shape.first() * shape.last() > MAX_OUTER_PRODUCT {
        return Err(Error::BadShape(format!(
            "exact cover takes (a, m, b) with ab <= {MAX_OUTER_PRODUCT}, got {shape}"
        )));
    }
    if shape.product() != g.order() {
        return Err(Error::BadShape(format!("shape {} does not multiply to |G| = {}", shape, g.order())));
    }
    let (na, nb) = (shape.first(), shape.last());
    let mut cv = Cover { g, budget, start: Instant::now(), nodes: 0, stopped: false };
    let classes = g.conjugacy_classes();
    let non_identity: Vec<usize> = (1..g.order()).collect();
    let mut found: Option<(SubsetMask, Vec<usize>, SubsetMask)> = None;

    for c in 1..classes.len() {
        let rep = classes[c][0];
        let mut pool: Vec<usize> = classes[c..].iter().flatten().copied().filter(|&x| x != rep).collect();
        pool.sort_unstable();
        let done = !subsets(&pool, na - 2, &mut |rest| {
            let a = SubsetMask::from_indices([0, rep].into_iter().chain(rest.iter().copied()));
            subsets(&non_identity, nb - 1, &mut |bs| {
                if !cv.tick() {
                    return false;
                }
                let b = SubsetMask::from_indices(std::iter::once(0).chain(bs.iter().copied()));
                let ab = g.product(a, b);
                if ab.len() != na * nb {
                    return true;
                }
                let blocks = cv.blocks(a, b);
                let mut chosen = vec![0];
                if cv.cover(&blocks, g.full_mask().0 & !ab.0, &mut chosen) {
                    found = Some((a, chosen, b));
                    return false;
                }
                !cv.stopped
            })
        });
        if done {
            break;
        }
    }
    let elapsed = cv.start.elapsed().as_secs_f64();
    if let Some((a, t, b)) = found {
        let t = SubsetMask::from_indices(t);
        let cert = FactorizationCertificate::from_masks(g, &[a, t, b], Method::Exhaustive)?;
        return Ok(Outcome::Found(cert));
    }
    if cv.stopped {
        return Ok(Outcome::Inconclusive(SearchStats { nodes_visited: cv.nodes, elapsed_secs: elapsed }));
    }
    Ok(Outcome::NoneComplete(NonexistenceEvidence {
        group_id: g.id().to_string(),
        shape: shape.clone(),
        method: EvidenceMethod::ExhaustiveComplete {
            search: SearchKind::ExactCover,
            nodes_visited: cv.nodes,
            normalizations_used: NORMALIZATIONS.iter().map(|s| s.to_string()).collect(),
            complete: true,
        },
        elapsed_secs: elapsed,
    }))
}
