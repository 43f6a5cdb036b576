//! Groups with no `(2, n/4, 2)` factorization: elementary abelian Sylow
//! 2-subgroup, one class of involutions, and involution centralizers of the
//! form `P x H` with `|H|` odd.

use super::outcome::{EvidenceMethod, NonexistenceEvidence, Theorem6Record};
use super::shape::Shape;
use crate::group::Group;
use crate::mask::SubsetMask;

impl Theorem6Record {
    pub fn holds(&self) -> bool {
        self.sylow2_order >= 4
            && self.sylow2_elementary_abelian
            && self.involutions_single_class
            && self.centralizer_is_p_times_h
    }
}

pub fn theorem6_hypotheses(g: &Group) -> Theorem6Record {
    let mut rec = Theorem6Record {
        sylow2_order: 1,
        sylow2_elementary_abelian: false,
        involutions_single_class: false,
        involution: 0,
        centralizer_order: 0,
        odd_part_order: 0,
        centralizer_is_p_times_h: false,
    };
    let Ok(p) = g.sylow(2) else { return rec };
    let p = p.mask();
    rec.sylow2_order = p.len();
    rec.sylow2_elementary_abelian = p.iter().all(|x| g.mul(x, x) == 0);
    let invols = g.involutions();
    let a = p.difference(SubsetMask::singleton(0)).first().expect("nontrivial Sylow 2-subgroup");
    rec.involution = a;
    rec.involutions_single_class = g.conjugacy_classes()[g.class_index()[a]].len() == invols.len();
    let c = g.centralizer(a).mask();
    rec.centralizer_order = c.len();
    let h: SubsetMask = c.iter().filter(|&x| g.element_order(x) % 2 == 1).collect();
    rec.odd_part_order = h.len();
    rec.centralizer_is_p_times_h = p.is_subset(c)
        && g.is_subgroup(h)
        && p.iter().all(|x| h.iter().all(|y| g.mul(x, y) == g.mul(y, x)))
        && p.len() * h.len() == c.len()
        && g.product(p, h) == c;
    rec
}

pub fn theorem6_applicable(g: &Group) -> bool {
    theorem6_hypotheses(g).holds()
}

/// `(2, n/4, 2)` when `shape` merges to it.
pub fn theorem6_target(g: &Group, shape: &Shape) -> Option<Shape> {
    let n = g.order();
    if shape.len() < 3 || shape.first() != 2 || shape.last() != 2 || shape.product() != n {
        return None;
    }
    Shape::new(vec![2, n / 4, 2]).ok()
}

/// Certified non-existence for shapes merging to `(2, n/4, 2)`.
pub fn theorem6_route(g: &Group, shape: &Shape) -> Option<NonexistenceEvidence> {
    let target = theorem6_target(g, shape)?;
    let rec = theorem6_hypotheses(g);
    rec.holds().then(|| NonexistenceEvidence {
        group_id: g.id().to_string(),
        shape: shape.clone(),
        method: EvidenceMethod::Theorem6 { merged_to: target, hypotheses: rec },
        elapsed_secs: 0.0,
    })
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
    fn small_cases() {
        let a4 = pgroup(4, &["(1,2,3)", "(1,2)(3,4)"]);
        assert!(theorem6_applicable(&a4));
        let s4 = pgroup(4, &["(1,2)", "(1,2,3,4)"]);
        let rec = theorem6_hypotheses(&s4);
        assert_eq!(rec.sylow2_order, 8);
        assert!(!rec.sylow2_elementary_abelian);
        assert!(!rec.holds());
        assert!(!theorem6_applicable(&Group::cyclic(12).unwrap()));
        assert!(!theorem6_applicable(&Group::cyclic(15).unwrap()));
        let a5 = pgroup(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        assert!(theorem6_applicable(&a5));
    }

    #[test]
    fn route_needs_outer_twos() {
        let a4 = pgroup(4, &["(1,2,3)", "(1,2)(3,4)"]);
        assert!(theorem6_route(&a4, &"(2,3,2)".parse().unwrap()).is_some());
        assert!(theorem6_route(&a4, &"(2,2,3)".parse().unwrap()).is_none());
        let a5 = pgroup(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let ev = theorem6_route(&a5, &"(2,3,5,2)".parse().unwrap()).unwrap();
        match ev.method {
            EvidenceMethod::Theorem6 { merged_to, .. } => assert_eq!(merged_to.parts(), &[2, 15, 2]),
            _ => unreachable!(),
        }
    }
}
