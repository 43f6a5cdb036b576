use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::Shape;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::SubsetMask;

/// How a factorization was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Chain,
    Sandwich,
    Gf2Catalog,
    Exhaustive,
    Manual,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Chain => "chain",
            Method::Sandwich => "sandwich",
            Method::Gf2Catalog => "gf2_catalog",
            Method::Exhaustive => "exhaustive",
            Method::Manual => "manual",
        };
        f.write_str(s)
    }
}

/// Factors `A_1, ..., A_k` with `G = A_1 A_2 ... A_k` exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationCertificate {
    pub group_id: String,
    pub shape: Shape,
    /// element indices of each factor, sorted
    pub factors: Vec<Vec<usize>>,
    pub method: Method,
}

impl FactorizationCertificate {
    pub fn from_masks(g: &Group, masks: &[SubsetMask], method: Method) -> Result<Self> {
        let shape = Shape::new(masks.iter().map(|m| m.len()).collect())?;
        Ok(FactorizationCertificate {
            group_id: g.id().to_string(),
            shape,
            factors: masks.iter().map(|m| m.to_vec()).collect(),
            method,
        })
    }

    pub fn masks(&self) -> Vec<SubsetMask> {
        self.factors
            .iter()
            .map(|f| SubsetMask::from_indices(f.iter().copied()))
            .collect()
    }

    /// The factorization `G = A_k^-1 ... A_1^-1`.
    pub fn reversed(&self, g: &Group) -> FactorizationCertificate {
        let masks: Vec<SubsetMask> = self.masks().into_iter().rev().map(|m| g.inverse_mask(m)).collect();
        FactorizationCertificate {
            group_id: self.group_id.clone(),
            shape: self.shape.reversed(),
            factors: masks.iter().map(|m| m.to_vec()).collect(),
            method: self.method,
        }
    }

    /// Replaces factors `i` and `i + 1` by their product.
    pub fn merge_adjacent(&self, g: &Group, i: usize) -> FactorizationCertificate {
        let mut masks = self.masks();
        let merged = g.product(masks[i], masks[i + 1]);
        masks.splice(i..i + 2, [merged]);
        FactorizationCertificate::from_masks(g, &masks, self.method).expect("merged parts are >= 2")
    }

    pub fn with_group_id(mut self, id: &str) -> Self {
        self.group_id = id.to_string();
        self
    }
}

/// Size of `A_1 ... A_k` and whether it equals the product of the sizes.
pub fn product_exact(g: &Group, factors: &[SubsetMask]) -> (usize, bool) {
    let mut acc = SubsetMask::singleton(0);
    let mut expected = 1usize;
    for &f in factors {
        acc = g.product(acc, f);
        expected = expected.saturating_mul(f.len());
    }
    (acc.len(), acc.len() == expected)
}

/// Independent check that a certificate is an exact factorization of `g`.
pub fn verify_certificate(g: &Group, cert: &FactorizationCertificate) -> Result<()> {
    let fail = |m: String| Err(Error::VerifyFailed(m));
    if cert.factors.len() != cert.shape.len() {
        return fail(format!("{} factors for shape {}", cert.factors.len(), cert.shape));
    }
    if cert.shape.product() != g.order() {
        return fail(format!("shape {} does not multiply to {}", cert.shape, g.order()));
    }
    let mut masks = Vec::with_capacity(cert.factors.len());
    for (i, (f, &size)) in cert.factors.iter().zip(cert.shape.parts()).enumerate() {
        if let Some(&x) = f.iter().find(|&&x| x >= g.order()) {
            return fail(format!("factor {i} has out-of-range element {x}"));
        }
        let m = SubsetMask::from_indices(f.iter().copied());
        if m.len() != f.len() {
            return fail(format!("factor {i} repeats an element"));
        }
        if m.len() != size {
            return fail(format!("factor {i} has {} elements, shape says {size}", m.len()));
        }
        masks.push(m);
    }
    // every element of G reached exactly once
    let mut counts = vec![0u32; g.order()];
    let mut partial = vec![0usize];
    for m in &masks {
        let mut next = Vec::with_capacity(partial.len() * m.len());
        for &p in &partial {
            for y in m.iter() {
                next.push(g.mul(p, y));
            }
        }
        partial = next;
    }
    for &x in &partial {
        counts[x] += 1;
    }
    if let Some(x) = counts.iter().position(|&c| c != 1) {
        return fail(format!("element {} is reached {} times", g.label(x), counts[x]));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_chain_certificate() {
        let g = Group::cyclic(6).unwrap();
        let a = SubsetMask::from_indices([0, 3]);
        let b = SubsetMask::from_indices([0, 2, 4]);
        let cert = FactorizationCertificate::from_masks(&g, &[a, b], Method::Manual).unwrap();
        verify_certificate(&g, &cert).unwrap();
        assert_eq!(product_exact(&g, &[a, b]), (6, true));
        let r = cert.reversed(&g);
        assert_eq!(r.shape.parts(), &[3, 2]);
        verify_certificate(&g, &r).unwrap();
        let m = cert.merge_adjacent(&g, 0);
        assert_eq!(m.shape.parts(), &[6]);
        verify_certificate(&g, &m).unwrap();
    }

    #[test]
    fn rejects_overlap() {
        let g = Group::cyclic(4).unwrap();
        let a = SubsetMask::from_indices([0, 1]);
        let cert = FactorizationCertificate::from_masks(&g, &[a, a], Method::Manual).unwrap();
        assert!(matches!(verify_certificate(&g, &cert), Err(Error::VerifyFailed(_))));
        assert_eq!(product_exact(&g, &[a, a]), (3, false));
    }
}
