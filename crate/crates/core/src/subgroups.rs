//! Subgroup lattice, CLT and supersolvability tests, coset transversals.

use std::collections::HashSet;

use crate::group::{Group, SubgroupHandle};
use crate::mask::SubsetMask;

/// Every subgroup of a group, sorted by (order, sorted element list).
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    subgroups: Vec<SubsetMask>,
}

impl SubgroupSet {
    pub fn masks(&self) -> &[SubsetMask] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.subgroups.iter().map(|m| m.len()).collect()
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.subgroups.binary_search_by(|m| sort_key(*m).cmp(&sort_key(mask))).is_ok()
    }
}

fn sort_key(m: SubsetMask) -> (usize, Vec<usize>) {
    (m.len(), m.to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// representatives `t` of cosets `tH`
    Left,
    /// representatives `t` of cosets `Ht`
    Right,
}

/// All subgroups: cyclic subgroups, then joins with cyclic subgroups to a fixed point.
pub fn all_subgroups(g: &Group) -> &SubgroupSet {
    g.caches.subgroups.get_or_init(|| {
        let n = g.order();
        let mut cyclic: Vec<SubsetMask> = Vec::new();
        let mut seen: HashSet<SubsetMask> = HashSet::new();
        for x in 0..n {
            let c = g.closure(SubsetMask::singleton(x));
            if seen.insert(c) {
                cyclic.push(c);
            }
        }
        let mut found: Vec<SubsetMask> = cyclic.clone();
        let mut head = 0;
        while head < found.len() {
            let h = found[head];
            head += 1;
            for &c in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let j = g.closure(h.union(c));
                if seen.insert(j) {
                    found.push(j);
                }
            }
        }
        found.sort_by_cached_key(|m| sort_key(*m));
        SubgroupSet { subgroups: found }
    })
}

pub fn subgroups_of_order(g: &Group, m: usize) -> Vec<SubgroupHandle> {
    all_subgroups(g)
        .masks()
        .iter()
        .filter(|h| h.len() == m)
        .map(|&h| SubgroupHandle::new_unchecked(g, h))
        .collect()
}

/// Subgroups of `g` contained in `h`.
pub fn subgroups_within(g: &Group, h: SubsetMask) -> impl Iterator<Item = SubsetMask> + '_ {
    all_subgroups(g).masks().iter().copied().filter(move |k| k.is_subset(h))
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Whether `g` has a subgroup of every order dividing `|g|`.
pub fn is_clt(g: &Group) -> bool {
    subgroup_is_clt(g, g.full_mask())
}

/// CLT test for a subgroup `h` of `g`, using `g`'s lattice.
pub fn subgroup_is_clt(g: &Group, h: SubsetMask) -> bool {
    let orders: HashSet<usize> = subgroups_within(g, h).map(|k| k.len()).collect();
    divisors(h.len()).iter().all(|d| orders.contains(d))
}

/// Whether every subgroup of `g` has the CLT property.
pub fn all_subgroups_clt(g: &Group) -> bool {
    all_subgroups(g).masks().iter().all(|&h| subgroup_is_clt(g, h))
}

/// Supersolvability by peeling normal subgroups of prime order.
///
/// If `N` is normal of prime order, `G` is supersolvable iff `G/N` is, so
/// the first such `N` decides.
pub fn is_supersolvable(g: &Group) -> bool {
    *g.caches.supersolvable.get_or_init(|| {
        if g.order() == 1 {
            return true;
        }
        let candidate = (1..g.order())
            .filter(|&x| crate::group::is_prime(g.element_order(x)))
            .map(|x| g.closure(SubsetMask::singleton(x)))
            .find(|&c| g.is_normal(c));
        match candidate {
            None => false,
            Some(c) => {
                let q = g
                    .quotient(&SubgroupHandle::new_unchecked(g, c))
                    .expect("normal subgroup");
                is_supersolvable(&q)
            }
        }
    })
}

/// A transversal of `h` in `g` with the least element of each coset; contains 0.
pub fn coset_transversal(g: &Group, h: SubsetMask, side: Side) -> SubsetMask {
    coset_transversal_within(g, g.full_mask(), h, side)
}

/// Transversal of `h` in an overgroup `k` (both subgroups of `g`).
pub fn coset_transversal_within(g: &Group, k: SubsetMask, h: SubsetMask, side: Side) -> SubsetMask {
    let mut covered = SubsetMask::EMPTY;
    let mut reps = SubsetMask::EMPTY;
    for x in k.iter() {
        if covered.contains(x) {
            continue;
        }
        reps.insert(x);
        let coset = match side {
            Side::Left => g.left_translate(h, x),
            Side::Right => g.right_translate(h, x),
        };
        covered = covered.union(coset);
    }
    reps
}

/// Maximal subgroups, one per conjugacy class.
pub fn maximal_subgroup_classes(g: &Group) -> Vec<SubgroupHandle> {
    let all = all_subgroups(g).masks();
    let full = g.full_mask();
    let proper: Vec<SubsetMask> = all.iter().copied().filter(|&h| h != full).collect();
    let maximal: Vec<SubsetMask> = proper
        .iter()
        .copied()
        .filter(|&h| !proper.iter().any(|&k| k != h && h.is_subset(k)))
        .collect();
    let mut reps = Vec::new();
    let mut covered: HashSet<SubsetMask> = HashSet::new();
    for h in maximal {
        if covered.contains(&h) {
            continue;
        }
        for x in g.elements() {
            covered.insert(g.conjugate_mask(h, x));
        }
        reps.push(SubgroupHandle::new_unchecked(g, h));
    }
    reps
}

/// Orders of maximal subgroups up to conjugacy, descending.
pub fn maximal_subgroup_orders(g: &Group) -> Vec<usize> {
    let mut orders: Vec<usize> = maximal_subgroup_classes(g).iter().map(|h| h.order()).collect();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    orders
}
