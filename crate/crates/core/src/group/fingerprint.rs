use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::structure::is_prime;
use super::Group;

/// Isomorphism invariants used to check catalog constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: usize,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
    /// conjugacy class sizes, ascending
    pub class_sizes: Vec<usize>,
    pub center_order: usize,
    pub derived_order: usize,
    /// invariant factors of G/[G,G], ascending, each dividing the next
    pub abelianization: Vec<usize>,
}

impl GroupFingerprint {
    /// Describes the first differing field, if any.
    pub fn diff(&self, other: &GroupFingerprint) -> Option<String> {
        if self.order != other.order {
            return Some(format!("order {} vs {}", self.order, other.order));
        }
        if self.order_histogram != other.order_histogram {
            return Some(format!(
                "element orders {:?} vs {:?}",
                self.order_histogram, other.order_histogram
            ));
        }
        if self.class_sizes != other.class_sizes {
            return Some(format!("class sizes {:?} vs {:?}", self.class_sizes, other.class_sizes));
        }
        if self.center_order != other.center_order {
            return Some(format!("center {} vs {}", self.center_order, other.center_order));
        }
        if self.derived_order != other.derived_order {
            return Some(format!("derived {} vs {}", self.derived_order, other.derived_order));
        }
        if self.abelianization != other.abelianization {
            return Some(format!(
                "abelianization {:?} vs {:?}",
                self.abelianization, other.abelianization
            ));
        }
        None
    }
}

impl Group {
    pub fn fingerprint(&self) -> GroupFingerprint {
        let mut order_histogram = BTreeMap::new();
        for g in self.elements() {
            *order_histogram.entry(self.element_order(g)).or_insert(0) += 1;
        }
        let mut class_sizes: Vec<usize> = self.conjugacy_classes().iter().map(|c| c.len()).collect();
        class_sizes.sort_unstable();
        let derived = self.derived_subgroup();
        let abelian = self
            .quotient(&derived)
            .expect("derived subgroup is normal");
        GroupFingerprint {
            order: self.order(),
            order_histogram,
            class_sizes,
            center_order: self.center().order(),
            derived_order: derived.order(),
            abelianization: abelian_invariants(&abelian),
        }
    }
}

/// Invariant factors of an abelian group, from counts of `p^k`-torsion.
fn abelian_invariants(g: &Group) -> Vec<usize> {
    let n = g.order();
    // per prime: partition (exponents, descending)
    let mut parts: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in (2..=n).filter(|&p| is_prime(p) && n.is_multiple_of(p)) {
        let mut s_prev = 0u32;
        let mut ranks = Vec::new(); // ranks[k-1] = number of parts >= k
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = g.elements().filter(|&x| g.power(x, pk) == 0).count();
            let s = count.ilog(p);
            if s == s_prev {
                break;
            }
            ranks.push(s - s_prev);
            s_prev = s;
            k += 1;
        }
        // conjugate partition
        let largest = ranks.first().copied().unwrap_or(0) as usize;
        let exps: Vec<u32> = (0..largest)
            .map(|i| ranks.iter().filter(|&&r| r as usize > i).count() as u32)
            .collect();
        parts.push((p, exps));
    }
    let len = parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..len)
        .map(|i| {
            parts
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect();
    factors.sort_unstable();
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_constructions_agree() {
        let c6 = Group::cyclic(6).unwrap();
        let c2c3 = Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(3).unwrap()).unwrap();
        assert_eq!(c6.fingerprint(), c2c3.fingerprint());
        assert_eq!(c6.fingerprint().abelianization, vec![6]);
    }

    #[test]
    fn abelian_invariants_of_products() {
        let c2 = Group::cyclic(2).unwrap();
        let c4 = Group::cyclic(4).unwrap();
        let c6 = Group::cyclic(6).unwrap();
        let g = Group::direct_product(&Group::direct_product(&c2, &c4).unwrap(), &c6).unwrap();
        assert_eq!(g.fingerprint().abelianization, vec![2, 2, 12]);
        assert_eq!(Group::cyclic(1).unwrap().fingerprint().abelianization, Vec::<usize>::new());
    }
}
