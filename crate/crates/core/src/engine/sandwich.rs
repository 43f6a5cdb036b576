//! `G = A T B` with subgroups `A`, `B` such that every double coset `AxB` has
//! size `|A||B|`, and `T` a set of double coset representatives.

use super::certificate::{FactorizationCertificate, Method};
use super::chain::Peeler;
use super::shape::Shape;
use crate::group::{Group, SubgroupHandle};
use crate::mask::SubsetMask;
use crate::subgroups::all_subgroups;

/// Least representative and size of every double coset `A x B`.
pub fn double_cosets(g: &Group, a: &SubgroupHandle, b: &SubgroupHandle) -> (Vec<usize>, Vec<usize>) {
    let mut covered = SubsetMask::EMPTY;
    let (mut reps, mut sizes) = (Vec::new(), Vec::new());
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        let d = g.product(g.right_translate(a.mask(), x), b.mask());
        covered = covered.union(d);
        reps.push(x);
        sizes.push(d.len());
    }
    (reps, sizes)
}

/// `|A x B|` from `|A| |B| / |A^x ∩ B|`.
pub fn double_coset_size_formula(g: &Group, a: SubsetMask, b: SubsetMask, x: usize) -> usize {
    let ax = g.conjugate_mask(a, x);
    a.len() * b.len() / ax.intersection(b).len()
}

fn reps_if_regular(g: &Group, a: SubsetMask, b: SubsetMask) -> Option<SubsetMask> {
    let size = a.len() * b.len();
    let mut covered = SubsetMask::EMPTY;
    let mut reps = SubsetMask::EMPTY;
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        let d = g.product(g.right_translate(a, x), b);
        if d.len() != size {
            return None;
        }
        covered = covered.union(d);
        reps.insert(x);
    }
    Some(reps)
}

/// Tries the pair `(a, b)` against every split `prefix | middle | suffix` of `shape`.
pub fn sandwich_with_pair(g: &Group, shape: &Shape, a: SubsetMask, b: SubsetMask) -> Option<FactorizationCertificate> {
    let parts = shape.parts();
    let k = parts.len();
    let mut peeler = Peeler::new(g);
    let reps = reps_if_regular(g, a, b)?;
    for i in 1..k {
        if parts[..i].iter().product::<usize>() != a.len() {
            continue;
        }
        for j in i..k {
            if parts[j..].iter().product::<usize>() != b.len() {
                continue;
            }
            let middle = &parts[i..j];
            if middle.iter().product::<usize>() != reps.len() {
                continue;
            }
            let Some(fa) = peeler.peel(a, &parts[..i]) else { continue };
            let Some(fb) = peeler.peel(b, &parts[j..]) else { continue };
            let mid: Option<Vec<SubsetMask>> = match middle.len() {
                0 => Some(Vec::new()),
                1 => Some(vec![reps]),
                _ => all_subgroups(g)
                    .masks()
                    .iter()
                    .filter(|t| t.len() == reps.len())
                    .filter(|&&t| g.product(g.product(a, t.to_owned()), b).len() == g.order())
                    .find_map(|&t| peeler.peel(t, middle)),
            };
            if let Some(mid) = mid {
                let masks: Vec<SubsetMask> = fa.into_iter().chain(mid).chain(fb).collect();
                return FactorizationCertificate::from_masks(g, &masks, Method::Sandwich).ok();
            }
        }
    }
    None
}

/// Searches subgroup pairs `(A, B)`, `A` up to conjugacy.
pub fn sandwich_strategy(g: &Group, shape: &Shape) -> Option<FactorizationCertificate> {
    let parts = shape.parts();
    let k = parts.len();
    if k < 3 {
        return None;
    }
    let subs = all_subgroups(g).masks();
    let prefix_orders: Vec<usize> = (1..k).map(|i| parts[..i].iter().product()).collect();
    let suffix_orders: Vec<usize> = (1..k).map(|j| parts[j..].iter().product()).collect();
    let mut seen_a: Vec<SubsetMask> = Vec::new();
    for &a in subs.iter().filter(|a| prefix_orders.contains(&a.len())) {
        if seen_a.iter().any(|&s| s.len() == a.len() && g.elements().any(|x| g.conjugate_mask(s, x) == a)) {
            continue;
        }
        seen_a.push(a);
        for &b in subs.iter().filter(|b| suffix_orders.contains(&b.len())) {
            if a.len() * b.len() > g.order() || !a.intersection(b).eq(&SubsetMask::singleton(0)) {
                continue;
            }
            if let Some(c) = sandwich_with_pair(g, shape, a, b) {
                return Some(c);
            }
        }
    }
    None
}
