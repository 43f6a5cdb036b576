//! The group algebra GF(2)[G] on bitmask coefficients.

use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::engine::{CertificateStore, FactorizationCertificate, Method, Shape};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::SubsetMask;

/// An element of GF(2)[G]; bit `g` is the coefficient of `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgElement {
    group_tag: u64,
    coeffs: u128,
}

impl AlgElement {
    pub fn zero(g: &Group) -> Self {
        AlgElement { group_tag: g.tag(), coeffs: 0 }
    }

    pub fn one(g: &Group) -> Self {
        set_sum(g, SubsetMask::singleton(0))
    }

    pub fn support(&self) -> SubsetMask {
        SubsetMask(self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == 0
    }

    pub fn belongs_to(&self, g: &Group) -> bool {
        self.group_tag == g.tag()
    }
}

/// f(X), the sum of the elements of `x`.
pub fn set_sum(g: &Group, x: SubsetMask) -> AlgElement {
    AlgElement { group_tag: g.tag(), coeffs: x.intersection(g.full_mask()).bits() }
}

pub fn add(u: AlgElement, v: AlgElement) -> Result<AlgElement> {
    if u.group_tag != v.group_tag {
        return Err(Error::GroupMismatch);
    }
    Ok(AlgElement { group_tag: u.group_tag, coeffs: u.coeffs ^ v.coeffs })
}

/// Convolution: XOR of the translates `x·v` over the support of `u`.
pub fn mul(g: &Group, u: AlgElement, v: AlgElement) -> Result<AlgElement> {
    if !u.belongs_to(g) || !v.belongs_to(g) {
        return Err(Error::GroupMismatch);
    }
    let mut acc = 0u128;
    if u.support().len() <= v.support().len() {
        for x in u.support().iter() {
            acc ^= g.left_translate(v.support(), x).bits();
        }
    } else {
        for y in v.support().iter() {
            acc ^= g.right_translate(u.support(), y).bits();
        }
    }
    Ok(AlgElement { group_tag: u.group_tag, coeffs: acc })
}

pub fn pow(g: &Group, u: AlgElement, k: u32) -> Result<AlgElement> {
    let mut acc = AlgElement::one(g);
    for _ in 0..k {
        acc = mul(g, acc, u)?;
    }
    Ok(acc)
}

/// Product of the set sums in order.
pub fn product_of_sums(g: &Group, factors: &[SubsetMask]) -> AlgElement {
    factors
        .iter()
        .fold(AlgElement::one(g), |acc, &f| mul(g, acc, set_sum(g, f)).expect("same group"))
}

/// Whether `f(A1)⋯f(Ak) = f(G)`; requires `∏|Ai| = |G|`.
pub fn gf2_exactness_check(g: &Group, factors: &[SubsetMask]) -> Result<bool> {
    let product: usize = factors.iter().map(|f| f.len()).product();
    if product != g.order() {
        return Err(Error::SizeMismatch { product, order: g.order() });
    }
    Ok(product_of_sums(g, factors).support() == g.full_mask())
}

/// Parses a sum of words like `e+ta+t^2b^2`. Repeated terms cancel.
pub fn parse_sum(g: &Group, expr: &str, symbols: &HashMap<&str, usize>) -> Result<AlgElement> {
    let mut coeffs = 0u128;
    for term in expr.split('+') {
        coeffs ^= 1u128 << g.eval_word(term.trim(), symbols)?;
    }
    Ok(AlgElement { group_tag: g.tag(), coeffs })
}

/// An identity `f(G) = ∏ (sum)^k` and the factorization read off it.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub group_id: &'static str,
    /// (sum, exponent) pairs multiplied left to right
    pub factors: &'static [(&'static str, u32)],
    /// subsets whose set sums multiply to the same product
    pub certificate: &'static [&'static str],
}

pub const IDENTITIES: [Identity; 4] = [
    Identity {
        name: "t-first",
        group_id: "(C4 x C4) : C3",
        factors: &[("e+t+t^2", 1), ("e+a", 3), ("e+b", 3)],
        certificate: &["e+t+t^2", "e+a^2", "e+b^2", "e+a", "e+b"],
    },
    Identity {
        name: "t-middle",
        group_id: "(C4 x C4) : C3",
        factors: &[("e+a^2", 1), ("e+b^2", 1), ("e+t+t^2", 1), ("e+a", 1), ("e+b", 1)],
        certificate: &["e+a^2", "e+b^2", "e+t+t^2", "e+a", "e+b"],
    },
    Identity {
        name: "t-fourth",
        group_id: "(C4 x C4) : C3",
        factors: &[("e+a^2", 1), ("e+ab^2", 1), ("e+t^2", 1), ("e+ta+t^2b^2", 1), ("e+b", 1)],
        certificate: &["e+a^2", "e+ab^2", "e+t^2", "e+ta+t^2b^2", "e+b"],
    },
    Identity {
        name: "t-second",
        group_id: "(C2 x C2 x C2 x C2) : C3",
        factors: &[("e+a1", 1), ("e+tb2+t^2", 1), ("e+ta2b1", 1), ("e+a1b1", 1), ("e+b2", 1)],
        certificate: &["e+a1", "e+tb2+t^2", "e+ta2b1", "e+a1b1", "e+b2"],
    },
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub group_id: String,
    pub shape: Shape,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gf2Report {
    pub checks: Vec<IdentityCheck>,
    pub elapsed_secs: f64,
}

impl Gf2Report {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Checks one identity and returns its verified certificate.
pub fn check_identity(catalog: &Catalog, id: &Identity) -> Result<(Group, FactorizationCertificate)> {
    let failed = || Error::IdentityFailed(format!("{} in {}", id.name, id.group_id));
    let (g, names) = catalog.build_named(id.group_id)?;
    let symbols: HashMap<&str, usize> = names.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let mut lhs = AlgElement::one(&g);
    for (expr, k) in id.factors {
        lhs = mul(&g, lhs, pow(&g, parse_sum(&g, expr, &symbols)?, *k)?)?;
    }
    if lhs != set_sum(&g, g.full_mask()) {
        return Err(failed());
    }
    let masks = id
        .certificate
        .iter()
        .map(|expr| parse_sum(&g, expr, &symbols).map(|u| u.support()))
        .collect::<Result<Vec<_>>>()?;
    if product_of_sums(&g, &masks) != lhs || !gf2_exactness_check(&g, &masks)? {
        return Err(failed());
    }
    let cert = FactorizationCertificate::from_masks(&g, &masks, Method::Gf2Catalog).map_err(|_| failed())?;
    Ok((g, cert))
}

/// Checks every identity in [`IDENTITIES`] and stores the certificates.
pub fn verify_identities(catalog: &Catalog, store: &mut CertificateStore) -> Result<Gf2Report> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for id in &IDENTITIES {
        let (g, cert) = check_identity(catalog, id)?;
        checks.push(IdentityCheck {
            name: id.name.to_string(),
            group_id: id.group_id.to_string(),
            shape: cert.shape.clone(),
            holds: true,
        });
        store.insert(&g, cert)?;
    }
    Ok(Gf2Report { checks, elapsed_secs: start.elapsed().as_secs_f64() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::product_exact;

    fn s4() -> Group {
        Catalog::builtin().build("S4").unwrap()
    }

    #[test]
    fn identity_and_annihilation() {
        let g = s4();
        let one = AlgElement::one(&g);
        let u = set_sum(&g, SubsetMask::from_indices([1, 5, 7]));
        assert_eq!(mul(&g, one, u).unwrap(), u);
        assert_eq!(mul(&g, u, one).unwrap(), u);
        let all = set_sum(&g, g.full_mask());
        assert!(mul(&g, all, all).unwrap().is_zero());
        assert!(add(u, u).unwrap().is_zero());
    }

    #[test]
    fn subgroup_absorbs_its_elements() {
        let g = s4();
        let a = g.sylow(2).unwrap().mask();
        for x in a.iter() {
            let fa = set_sum(&g, a);
            assert_eq!(mul(&g, fa, set_sum(&g, SubsetMask::singleton(x))).unwrap(), fa);
        }
        let fa = set_sum(&g, a);
        assert!(mul(&g, fa, fa).unwrap().is_zero());
        let p3 = set_sum(&g, g.sylow(3).unwrap().mask());
        assert_eq!(mul(&g, p3, p3).unwrap(), p3);
    }

    #[test]
    fn mixed_groups_rejected() {
        let g = s4();
        let h = Group::cyclic(24).unwrap();
        let u = set_sum(&g, SubsetMask::singleton(1));
        let v = set_sum(&h, SubsetMask::singleton(1));
        assert_eq!(add(u, v), Err(Error::GroupMismatch));
        assert_eq!(mul(&g, u, v), Err(Error::GroupMismatch));
    }

    #[test]
    fn size_precondition_enforced() {
        let g = s4();
        let masks = [SubsetMask::from_indices([0, 1]), g.full_mask()];
        assert_eq!(
            gf2_exactness_check(&g, &masks),
            Err(Error::SizeMismatch { product: 48, order: 24 })
        );
    }

    #[test]
    fn all_identities_hold() {
        let cat = Catalog::builtin();
        let mut store = CertificateStore::new();
        let report = verify_identities(&cat, &mut store).unwrap();
        assert!(report.all_hold());
        assert_eq!(store.len(), 4);
        let shapes: Vec<String> = report.checks.iter().map(|c| c.shape.to_string()).collect();
        assert_eq!(shapes, ["(3,2,2,2,2)", "(2,2,3,2,2)", "(2,2,2,3,2)", "(2,3,2,2,2)"]);
        assert!(report.elapsed_secs < 1.0);
    }

    #[test]
    fn corrupted_factor_fails() {
        let cat = Catalog::builtin();
        let (g, names) = cat.build_named("(C4 x C4) : C3").unwrap();
        let s: HashMap<&str, usize> = names.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        let mut masks: Vec<SubsetMask> = IDENTITIES[2]
            .certificate
            .iter()
            .map(|e| parse_sum(&g, e, &s).unwrap().support())
            .collect();
        assert!(gf2_exactness_check(&g, &masks).unwrap());
        masks[3] = parse_sum(&g, "e+ta+t^2b", &s).unwrap().support();
        assert!(!gf2_exactness_check(&g, &masks).unwrap());
        assert!(!product_exact(&g, &masks).1);
    }

    #[test]
    fn frobenius_on_cyclic_generators() {
        let g = s4();
        let one = AlgElement::one(&g);
        for x in g.elements() {
            let u = add(one, set_sum(&g, SubsetMask::singleton(x))).unwrap();
            let sq = set_sum(&g, SubsetMask::singleton(g.mul(x, x)));
            let expected = if x == 0 { AlgElement::zero(&g) } else { add(one, sq).unwrap() };
            assert_eq!(pow(&g, u, 2).unwrap(), expected);
        }
    }
}
