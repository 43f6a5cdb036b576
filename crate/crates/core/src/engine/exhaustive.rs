//! Depth-first search over normalized factor tuples.
//!
//! Normalizations: every factor contains the identity; elements of a factor
//! are chosen in ascending index order; the first factor contains the
//! representative of the first conjugacy class it meets, and otherwise only
//! elements of later classes; a final factor of size 2 is read off from the
//! complement of `P^-1 P`.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::certificate::{FactorizationCertificate, Method};
use super::outcome::{EvidenceMethod, NonexistenceEvidence, Outcome, SearchBudget, SearchKind, SearchStats};
use super::shape::Shape;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::SubsetMask;

pub const NORMALIZATIONS: [&str; 4] = [
    "identity_in_every_factor",
    "ascending_within_factor",
    "first_factor_class_representative",
    "last_pair_by_complement",
];

const CHECK_EVERY: u64 = 1 << 12;

#[derive(Clone, Copy, Debug)]
struct Node {
    factor: usize,
    // elements in the current factor, identity included
    placed: usize,
    // next element must have a larger index
    last: usize,
    pool: u128,
    prefix: u128,
    diff: u128,
    current: u128,
    forbidden: u128,
}

enum Step {
    Node(Node),
    Solution(Option<usize>),
    Dead,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Flow {
    Exhausted,
    Found,
    Stopped,
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    // least frontier index with a solution
    best: AtomicUsize,
}

struct Ctx<'a> {
    g: &'a Group,
    parts: &'a [usize],
    full: u128,
    budget: &'a SearchBudget,
    start: Instant,
    shared: &'a Shared,
}

struct Worker<'a> {
    ctx: &'a Ctx<'a>,
    local: u64,
    index: usize,
}

#[inline]
fn above(last: usize) -> u128 {
    if last >= 127 {
        0
    } else {
        !0u128 << (last + 1)
    }
}

impl<'a> Ctx<'a> {
    fn translate(&self, mask: u128, x: usize) -> u128 {
        self.g.right_translate(SubsetMask(mask), x).0
    }

    /// `P^-1 P`.
    fn quotient_set(&self, p: u128) -> u128 {
        let pm = SubsetMask(p);
        let mut out = 0u128;
        for y in pm.iter() {
            out |= self.g.left_translate(pm, self.g.inv(y)).0;
        }
        out
    }

    /// Least `d` with `P d = G \ P`, which is the least `d` outside `P^-1 P`
    /// when `|P| = |G| / 2`.
    fn complement_translate(&self, p: u128) -> Option<usize> {
        let rest = self.full & !p;
        let mut cands = rest;
        'next: while cands != 0 {
            let d = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let mut bits = p & !1;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if p >> self.g.mul(x, d) & 1 == 1 {
                    continue 'next;
                }
            }
            return Some(d);
        }
        None
    }

    fn place(&self, node: &Node, x: usize) -> Node {
        let placed = node.placed + 1;
        // a completed factor gets a fresh forbidden set in `advance`
        let forbidden = if placed == self.parts[node.factor] {
            node.forbidden
        } else {
            node.forbidden | self.translate(node.diff, x)
        };
        Node {
            placed,
            last: x,
            current: node.current | self.translate(node.prefix, x),
            forbidden,
            ..*node
        }
    }

    fn advance(&self, node: Node) -> Step {
        let k = self.parts.len();
        if node.placed < self.parts[node.factor] {
            return Step::Node(node);
        }
        let f = node.factor + 1;
        if f == k {
            return Step::Solution(None);
        }
        let prefix = node.current;
        if f == k - 1 && self.parts[f] == 2 {
            return match self.complement_translate(prefix) {
                Some(d) => Step::Solution(Some(d)),
                None => Step::Dead,
            };
        }
        let diff = self.quotient_set(prefix);
        let free = self.full & !diff;
        if f == k - 1 && (free.count_ones() as usize) < self.parts[f] - 1 {
            return Step::Dead;
        }
        Step::Node(Node {
            factor: f,
            placed: 1,
            last: 0,
            pool: self.full & !1,
            prefix,
            diff,
            current: prefix,
            forbidden: diff,
        })
    }

    fn roots(&self) -> Vec<(Step, Vec<u8>)> {
        let classes = self.g.conjugacy_classes();
        let mut out = Vec::new();
        for c in 1..classes.len() {
            let rep = classes[c][0];
            let mut pool = 0u128;
            for class in &classes[c..] {
                for &x in class {
                    pool |= 1u128 << x;
                }
            }
            pool &= !(1u128 << rep);
            let node = Node {
                factor: 0,
                placed: 2,
                last: 0,
                pool,
                prefix: 1,
                diff: 1,
                current: 1 | (1u128 << rep),
                forbidden: 1 | (1u128 << rep),
            };
            out.push((self.advance(node), vec![rep as u8]));
        }
        out
    }

    /// One level of expansion, in search order.
    fn children(&self, node: &Node, path: &[u8]) -> Vec<(Step, Vec<u8>)> {
        let mut out = Vec::new();
        let need = self.parts[node.factor] - node.placed;
        let mut cands = node.pool & !node.forbidden & above(node.last);
        while cands != 0 && cands.count_ones() as usize >= need {
            let x = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let mut p = path.to_vec();
            p.push(x as u8);
            out.push((self.advance(self.place(node, x)), p));
        }
        out
    }

    fn certificate(&self, path: &[u8]) -> FactorizationCertificate {
        let mut masks = Vec::new();
        let mut it = path.iter();
        for &m in self.parts {
            let mut f = SubsetMask::singleton(0);
            for _ in 1..m {
                f.insert(*it.next().expect("complete path") as usize);
            }
            masks.push(f);
        }
        FactorizationCertificate::from_masks(self.g, &masks, Method::Exhaustive).expect("valid shape")
    }
}

impl<'a> Worker<'a> {
    #[inline]
    fn tick(&mut self) -> bool {
        self.local += 1;
        if !self.local.is_multiple_of(CHECK_EVERY) {
            return true;
        }
        let ctx = self.ctx;
        let total = ctx.shared.nodes.fetch_add(CHECK_EVERY, Ordering::Relaxed) + CHECK_EVERY;
        if ctx.shared.stop.load(Ordering::Relaxed) {
            return false;
        }
        if ctx.shared.best.load(Ordering::Relaxed) < self.index {
            return false;
        }
        if total > ctx.budget.max_nodes || ctx.start.elapsed() > ctx.budget.max_time {
            ctx.shared.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn dfs(&mut self, node: &Node, path: &mut Vec<u8>) -> Flow {
        let ctx = self.ctx;
        let need = ctx.parts[node.factor] - node.placed;
        let mut cands = node.pool & !node.forbidden & above(node.last);
        while cands != 0 && cands.count_ones() as usize >= need {
            let x = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if !self.tick() {
                return Flow::Stopped;
            }
            path.push(x as u8);
            match ctx.advance(ctx.place(node, x)) {
                Step::Node(child) => match self.dfs(&child, path) {
                    Flow::Exhausted => {}
                    other => return other,
                },
                Step::Solution(extra) => {
                    if let Some(d) = extra {
                        path.push(d as u8);
                    }
                    return Flow::Found;
                }
                Step::Dead => {}
            }
            path.pop();
        }
        Flow::Exhausted
    }

    fn run(&mut self, step: Step, mut path: Vec<u8>) -> (Flow, Vec<u8>) {
        match step {
            Step::Dead => (Flow::Exhausted, path),
            Step::Solution(extra) => {
                if let Some(d) = extra {
                    path.push(d as u8);
                }
                (Flow::Found, path)
            }
            Step::Node(node) => {
                let flow = self.dfs(&node, &mut path);
                (flow, path)
            }
        }
    }
}

fn check_shape(g: &Group, shape: &Shape) -> Result<()> {
    if shape.product() != g.order() {
        return Err(Error::BadShape(format!(
            "shape {} does not multiply to |G| = {}",
            shape,
            g.order()
        )));
    }
    Ok(())
}

/// Complete search for a factorization of the given shape.
pub fn exhaustive_search(g: &Group, shape: &Shape, budget: &SearchBudget) -> Result<Outcome> {
    check_shape(g, shape)?;
    let start = Instant::now();
    if shape.len() == 1 {
        let cert = FactorizationCertificate::from_masks(g, &[g.full_mask()], Method::Exhaustive)?;
        return Ok(Outcome::Found(cert));
    }
    let shared = Shared { nodes: AtomicU64::new(0), stop: AtomicBool::new(false), best: AtomicUsize::new(usize::MAX) };
    let ctx = Ctx {
        g,
        parts: shape.parts(),
        full: g.full_mask().0,
        budget,
        start,
        shared: &shared,
    };
    let mut items = ctx.roots();
    if budget.parallel {
        let target = 64 * rayon::current_num_threads().max(1);
        for _ in 0..g.order() {
            if items.len() >= target || !items.iter().any(|(s, _)| matches!(s, Step::Node(_))) {
                break;
            }
            items = items
                .into_iter()
                .flat_map(|(s, p)| match s {
                    Step::Node(node) => ctx.children(&node, &p),
                    other => vec![(other, p)],
                })
                .collect();
        }
    }
    let results: Vec<(Flow, Vec<u8>, u64)> = if budget.parallel {
        items
            .into_par_iter()
            .enumerate()
            .map(|(index, (step, path))| {
                let mut w = Worker { ctx: &ctx, local: 0, index };
                let (flow, path) = w.run(step, path);
                if flow == Flow::Found {
                    shared.best.fetch_min(index, Ordering::Relaxed);
                }
                (flow, path, w.local)
            })
            .collect()
    } else {
        let mut out = Vec::new();
        for (index, (step, path)) in items.into_iter().enumerate() {
            let mut w = Worker { ctx: &ctx, local: 0, index };
            let (flow, path) = w.run(step, path);
            out.push((flow, path, w.local));
            if flow != Flow::Exhausted {
                break;
            }
        }
        out
    };
    let nodes: u64 = results.iter().map(|r| r.2).sum();
    let elapsed = start.elapsed().as_secs_f64();
    // the first non-exhausted item decides, in search order
    for (flow, path, _) in &results {
        match flow {
            Flow::Exhausted => continue,
            Flow::Found => return Ok(Outcome::Found(ctx.certificate(path))),
            Flow::Stopped => return Ok(Outcome::Inconclusive(SearchStats { nodes_visited: nodes, elapsed_secs: elapsed })),
        }
    }
    Ok(Outcome::NoneComplete(NonexistenceEvidence {
        group_id: g.id().to_string(),
        shape: shape.clone(),
        method: EvidenceMethod::ExhaustiveComplete {
            search: SearchKind::Exhaustive,
            nodes_visited: nodes,
            normalizations_used: NORMALIZATIONS.iter().map(|s| s.to_string()).collect(),
            complete: true,
        },
        elapsed_secs: elapsed,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::certificate::verify_certificate;
    use crate::group::parse_permutation;

    fn pgroup(deg: usize, gens: &[&str]) -> Group {
        let gens: Vec<_> = gens.iter().map(|s| parse_permutation(deg, s).unwrap()).collect();
        Group::from_permutation_generators("g", deg, &gens).unwrap()
    }

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_groups_factor() {
        let g = Group::cyclic(12).unwrap();
        for s in ["(2,2,3)", "(3,2,2)", "(2,3,2)", "(12)", "(4,3)"] {
            let out = exhaustive_search(&g, &shape(s), &SearchBudget::default()).unwrap();
            verify_certificate(&g, out.certificate().unwrap()).unwrap();
        }
    }

    #[test]
    fn a4_has_no_232() {
        let a4 = pgroup(4, &["(1,2,3)", "(1,2)(3,4)"]);
        let out = exhaustive_search(&a4, &shape("(2,3,2)"), &SearchBudget::default()).unwrap();
        assert!(out.is_none(), "{out:?}");
        let out = exhaustive_search(&a4, &shape("(2,2,3)"), &SearchBudget::default()).unwrap();
        verify_certificate(&a4, out.certificate().unwrap()).unwrap();
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let s4 = pgroup(4, &["(1,2)", "(1,2,3,4)"]);
        for s in ["(2,3,2,2)", "(2,2,3,2)", "(3,2,2,2)"] {
            let seq = exhaustive_search(&s4, &shape(s), &SearchBudget::default()).unwrap();
            let par = exhaustive_search(&s4, &shape(s), &SearchBudget::default().parallel(true)).unwrap();
            assert_eq!(seq.certificate(), par.certificate());
            verify_certificate(&s4, seq.certificate().unwrap()).unwrap();
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let a5 = pgroup(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let out = exhaustive_search(&a5, &shape("(2,3,5,2)"), &SearchBudget::nodes(10_000)).unwrap();
        assert!(matches!(out, Outcome::Inconclusive(_)));
    }

    #[test]
    fn wrong_product_is_rejected() {
        let g = Group::cyclic(6).unwrap();
        assert!(exhaustive_search(&g, &shape("(2,2)"), &SearchBudget::default()).is_err());
    }
}
