use std::collections::HashMap;

use super::certificate::{verify_certificate, FactorizationCertificate};
use super::shape::Shape;
use crate::error::Result;
use crate::group::Group;

/// Verified certificates keyed by group content digest and shape.
#[derive(Clone, Debug, Default)]
pub struct CertificateStore {
    certs: HashMap<([u8; 32], Shape), FactorizationCertificate>,
}

impl CertificateStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Verifies `cert` against `g` before storing it.
    pub fn insert(&mut self, g: &Group, cert: FactorizationCertificate) -> Result<()> {
        verify_certificate(g, &cert)?;
        self.certs.insert((*g.digest(), cert.shape.clone()), cert);
        Ok(())
    }

    /// A certificate for `shape`, or one for its reversal turned around.
    pub fn lookup(&self, g: &Group, shape: &Shape) -> Option<FactorizationCertificate> {
        if let Some(c) = self.certs.get(&(*g.digest(), shape.clone())) {
            return Some(c.clone().with_group_id(g.id()));
        }
        self.certs
            .get(&(*g.digest(), shape.reversed()))
            .map(|c| c.reversed(g).with_group_id(g.id()))
    }

    pub fn len(&self) -> usize {
        self.certs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.certs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FactorizationCertificate> {
        self.certs.values()
    }
}
