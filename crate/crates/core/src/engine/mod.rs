//! Search for exact factorizations `G = A_1 ... A_k` with prescribed sizes.

pub mod certificate;
pub mod chain;
pub mod decide;
pub mod exact_cover;
pub mod exhaustive;
pub mod outcome;
pub mod sandwich;
pub mod shape;
pub mod store;
pub mod theorem6;

pub use certificate::{product_exact, verify_certificate, FactorizationCertificate, Method};
pub use chain::chain_peel_strategy;
pub use decide::{decide, try_constructions};
pub use exact_cover::exact_cover_search;
pub use exhaustive::exhaustive_search;
pub use outcome::{
    Decision, EvidenceMethod, NonexistenceEvidence, Outcome, SearchBudget, SearchKind, SearchStats, Theorem6Record,
};
pub use sandwich::{double_cosets, sandwich_strategy, sandwich_with_pair};
pub use shape::{omega, ordered_factorizations, prime_factors, prime_shapes, prime_shapes_mod_reversal, Shape};
pub use store::CertificateStore;
pub use theorem6::{theorem6_applicable, theorem6_hypotheses, theorem6_route};
