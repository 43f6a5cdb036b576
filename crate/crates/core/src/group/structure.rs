use serde::{Deserialize, Serialize};

use super::Group;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// A subgroup of a parent group, held as a membership mask.
///
/// Only obtainable through [`Group::subgroup`] or the structural queries,
/// so the closure and Lagrange checks have always run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubgroupHandle {
    mask: SubsetMask,
    parent_tag: u64,
}

impl SubgroupHandle {
    pub(crate) fn new_unchecked(g: &Group, mask: SubsetMask) -> Self {
        SubgroupHandle { mask, parent_tag: g.tag() }
    }

    pub fn mask(&self) -> SubsetMask {
        self.mask
    }

    pub fn order(&self) -> usize {
        self.mask.len()
    }

    /// Sorted element indices.
    pub fn elements(&self) -> Vec<usize> {
        self.mask.to_vec()
    }

    pub fn belongs_to(&self, g: &Group) -> bool {
        self.parent_tag == g.tag()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }
}

impl Group {
    /// Wraps `mask` as a subgroup after checking closure and Lagrange.
    pub fn subgroup(&self, mask: SubsetMask) -> Result<SubgroupHandle> {
        if !self.is_subgroup(mask) {
            return Err(Error::NotASubgroup(format!("{:?} is not closed", mask.to_vec())));
        }
        if !self.order().is_multiple_of(mask.len()) {
            return Err(Error::NotASubgroup("order does not divide the group order".into()));
        }
        Ok(SubgroupHandle::new_unchecked(self, mask))
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, gens: &[usize]) -> SubgroupHandle {
        SubgroupHandle::new_unchecked(self, self.closure(SubsetMask::from_indices(gens.iter().copied())))
    }

    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle::new_unchecked(self, self.full_mask())
    }

    pub fn trivial(&self) -> SubgroupHandle {
        SubgroupHandle::new_unchecked(self, SubsetMask::singleton(0))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.caches.classes.get_or_init(|| {
            let n = self.order();
            let mut assigned = SubsetMask::EMPTY;
            let mut classes = Vec::new();
            for g in 0..n {
                if assigned.contains(g) {
                    continue;
                }
                let mut class = SubsetMask::EMPTY;
                for x in 0..n {
                    class.insert(self.conj(g, x));
                }
                assigned = assigned.union(class);
                classes.push(class.to_vec());
            }
            classes
        })
    }

    /// Index into [`Group::conjugacy_classes`] for every element.
    pub fn class_index(&self) -> &[usize] {
        self.caches.class_index.get_or_init(|| {
            let mut idx = vec![0; self.order()];
            for (k, class) in self.conjugacy_classes().iter().enumerate() {
                for &x in class {
                    idx[x] = k;
                }
            }
            idx
        })
    }

    /// Least element of each conjugacy class, ascending.
    pub fn class_representatives(&self) -> Vec<usize> {
        self.conjugacy_classes().iter().map(|c| c[0]).collect()
    }

    pub fn centralizer(&self, g: usize) -> SubgroupHandle {
        self.centralizer_of_set(SubsetMask::singleton(g))
    }

    pub fn centralizer_of_set(&self, set: SubsetMask) -> SubgroupHandle {
        let mask = (0..self.order())
            .filter(|&x| set.iter().all(|s| self.mul(x, s) == self.mul(s, x)))
            .collect();
        SubgroupHandle::new_unchecked(self, mask)
    }

    pub fn normalizer(&self, h: SubsetMask) -> SubgroupHandle {
        let mask = (0..self.order())
            .filter(|&x| self.conjugate_mask(h, x) == h)
            .collect();
        SubgroupHandle::new_unchecked(self, mask)
    }

    pub fn is_normal(&self, h: SubsetMask) -> bool {
        self.is_subgroup(h) && self.generators_or_all().iter().all(|&x| self.conjugate_mask(h, x) == h)
    }

    fn generators_or_all(&self) -> Vec<usize> {
        let span = self.closure(SubsetMask::from_indices(self.generators().iter().copied()));
        if span == self.full_mask() {
            self.generators().to_vec()
        } else {
            (0..self.order()).collect()
        }
    }

    pub fn center(&self) -> SubgroupHandle {
        self.centralizer_of_set(self.full_mask())
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> SubgroupHandle {
        let n = self.order();
        let mut comms = SubsetMask::EMPTY;
        for a in 0..n {
            for b in 0..n {
                comms.insert(self.commutator(a, b));
            }
        }
        SubgroupHandle::new_unchecked(self, self.closure(comms))
    }

    /// A Sylow p-subgroup, grown from a cyclic p-subgroup through normalizers.
    pub fn sylow(&self, p: usize) -> Result<SubgroupHandle> {
        let n = self.order();
        if p < 2 || !n.is_multiple_of(p) || !is_prime(p) {
            return Err(Error::PNotDividing { p, order: n });
        }
        let mut target = 1;
        let mut m = n;
        while m.is_multiple_of(p) {
            target *= p;
            m /= p;
        }
        let start = (0..n)
            .find(|&g| self.element_order(g) == p)
            .expect("Cauchy: an element of order p exists");
        let mut sub = self.closure(SubsetMask::from_indices([0, start]));
        while sub.len() < target {
            let norm = self.normalizer(sub).mask();
            // an element of order p in N(P)/P
            let lift = norm
                .difference(sub)
                .iter()
                .find(|&x| sub.contains(self.power(x, p)))
                .expect("p divides |N(P)/P| for non-Sylow P");
            sub = self.closure(sub.union(SubsetMask::singleton(lift)));
        }
        Ok(SubgroupHandle::new_unchecked(self, sub))
    }

    /// Elements of order 2.
    pub fn involutions(&self) -> SubsetMask {
        (1..self.order()).filter(|&g| self.mul(g, g) == 0).collect()
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_permutation;

    fn pgroup(deg: usize, gens: &[&str]) -> Group {
        let gens: Vec<_> = gens.iter().map(|s| parse_permutation(deg, s).unwrap()).collect();
        Group::from_permutation_generators("g", deg, &gens).unwrap()
    }

    #[test]
    fn a5_class_sizes() {
        let a5 = pgroup(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let mut sizes: Vec<usize> = a5.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn s4_sylows() {
        let s4 = pgroup(4, &["(1,2)", "(1,2,3,4)"]);
        let p2 = s4.sylow(2).unwrap();
        assert_eq!(p2.order(), 8);
        assert!(s4.is_subgroup(p2.mask()));
        assert_eq!(s4.sylow(3).unwrap().order(), 3);
        assert_eq!(s4.sylow(5).unwrap_err(), Error::PNotDividing { p: 5, order: 24 });
    }

    #[test]
    fn center_of_a4_times_c3() {
        let a4 = pgroup(4, &["(1,2,3)", "(1,2)(3,4)"]);
        let g = Group::direct_product(&a4, &Group::cyclic(3).unwrap()).unwrap();
        assert_eq!(g.center().order(), 3);
        assert_eq!(g.derived_subgroup().order(), 4);
    }

    #[test]
    fn class_equation() {
        let s4 = pgroup(4, &["(1,2)", "(1,2,3,4)"]);
        for g in s4.elements() {
            let k = &s4.conjugacy_classes()[s4.class_index()[g]];
            assert_eq!(k.len() * s4.centralizer(g).order(), 24);
        }
    }
}
