//! Exact factorizations of finite groups of small order.

pub mod catalog;
pub mod classify;
pub mod engine;
pub mod error;
pub mod gf2;
pub mod group;
pub mod mask;
pub mod subgroups;

pub use catalog::{Catalog, CatalogEntry};
pub use classify::{ClassificationReport, GroupVerdict};
pub use engine::{
    exhaustive_search, verify_certificate, Decision, FactorizationCertificate, Method, NonexistenceEvidence, Outcome,
    SearchBudget, Shape,
};
pub use error::{Error, Result};
pub use gf2::AlgElement;
pub use group::{Group, GroupFingerprint, Matrix2, Permutation, SubgroupHandle};
pub use mask::SubsetMask;
