//! Factorizations along subgroup chains: `K = T H` with `T` a transversal.

use std::collections::HashSet;

use super::certificate::{FactorizationCertificate, Method};
use super::shape::Shape;
use crate::group::Group;
use crate::mask::SubsetMask;
use crate::subgroups::{all_subgroups, coset_transversal_within, Side};

/// Factors a subgroup `k` of `g` with the given parts by peeling transversals.
pub(crate) struct Peeler<'a> {
    g: &'a Group,
    failed: HashSet<(u128, Vec<usize>)>,
}

impl<'a> Peeler<'a> {
    pub(crate) fn new(g: &'a Group) -> Self {
        Peeler { g, failed: HashSet::new() }
    }

    pub(crate) fn peel(&mut self, k: SubsetMask, parts: &[usize]) -> Option<Vec<SubsetMask>> {
        if parts.iter().product::<usize>() != k.len() {
            return None;
        }
        if parts.len() == 1 {
            return Some(vec![k]);
        }
        let key = (k.0, parts.to_vec());
        if self.failed.contains(&key) {
            return None;
        }
        let g = self.g;
        let subs: Vec<SubsetMask> = all_subgroups(g)
            .masks()
            .iter()
            .copied()
            .filter(|h| h.len() * parts[0] == k.len() || h.len() * parts[parts.len() - 1] == k.len())
            .filter(|h| h.is_subset(k))
            .collect();
        let (first, last) = (parts[0], parts[parts.len() - 1]);
        for &h in &subs {
            if h.len() * first == k.len() {
                if let Some(rest) = self.peel(h, &parts[1..]) {
                    let t = coset_transversal_within(g, k, h, Side::Left);
                    let mut out = vec![t];
                    out.extend(rest);
                    return Some(out);
                }
            }
            if h.len() * last == k.len() {
                if let Some(mut rest) = self.peel(h, &parts[..parts.len() - 1]) {
                    rest.push(coset_transversal_within(g, k, h, Side::Right));
                    return Some(rest);
                }
            }
        }
        self.failed.insert(key);
        None
    }
}

/// Peels transversals of subgroups of index `shape.first` or `shape.last`,
/// recursively. `None` says nothing about existence.
pub fn chain_peel_strategy(g: &Group, shape: &Shape) -> Option<FactorizationCertificate> {
    let masks = Peeler::new(g).peel(g.full_mask(), shape.parts())?;
    FactorizationCertificate::from_masks(g, &masks, Method::Chain).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::certificate::verify_certificate;
    use crate::engine::shape::prime_shapes;
    use crate::group::parse_permutation;

    fn pgroup(deg: usize, gens: &[&str]) -> Group {
        let gens: Vec<_> = gens.iter().map(|s| parse_permutation(deg, s).unwrap()).collect();
        Group::from_permutation_generators("g", deg, &gens).unwrap()
    }

    #[test]
    fn supersolvable_groups_peel_every_shape() {
        let d8 = pgroup(4, &["(1,2,3,4)", "(1,3)"]);
        let c3c4 = Group::semidirect_product(&Group::cyclic(3).unwrap(), 4, &[0, 2, 1]).unwrap();
        for g in [Group::cyclic(24).unwrap(), d8, c3c4] {
            for s in prime_shapes(g.order()) {
                let cert = chain_peel_strategy(&g, &s).expect("supersolvable");
                verify_certificate(&g, &cert).unwrap();
            }
        }
    }

    #[test]
    fn s4_and_a4() {
        let s4 = pgroup(4, &["(1,2)", "(1,2,3,4)"]);
        let cert = chain_peel_strategy(&s4, &"(2,2,2,3)".parse().unwrap()).unwrap();
        verify_certificate(&s4, &cert).unwrap();
        let a4 = pgroup(4, &["(1,2,3)", "(1,2)(3,4)"]);
        assert!(chain_peel_strategy(&a4, &"(2,3,2)".parse().unwrap()).is_none());
        assert!(chain_peel_strategy(&a4, &"(3,2,2)".parse().unwrap()).is_some());
    }
}
