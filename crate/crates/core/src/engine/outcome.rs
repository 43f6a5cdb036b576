use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::certificate::FactorizationCertificate;
use super::shape::Shape;

/// Limits for a single search. Parallel runs share one node counter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
    pub parallel: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 20_000_000_000, max_time: Duration::from_secs(600), parallel: false }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes, ..Default::default() }
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    /// Coarse label used in cache keys.
    pub fn class_label(&self) -> String {
        format!("n{}-t{}", self.max_nodes, self.max_time.as_secs())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchKind {
    Exhaustive,
    ExactCover,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub elapsed_secs: f64,
}

/// Hypotheses checked by the involution-centralizer criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem6Record {
    pub sylow2_order: usize,
    pub sylow2_elementary_abelian: bool,
    pub involutions_single_class: bool,
    pub involution: usize,
    pub centralizer_order: usize,
    pub odd_part_order: usize,
    pub centralizer_is_p_times_h: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvidenceMethod {
    /// Every normalized candidate was visited without a hit.
    ExhaustiveComplete {
        search: SearchKind,
        nodes_visited: u64,
        normalizations_used: Vec<String>,
        complete: bool,
    },
    /// No `(2, n/4, 2)` factorization exists, and `shape` merges to it.
    Theorem6 { merged_to: Shape, hypotheses: Theorem6Record },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NonexistenceEvidence {
    pub group_id: String,
    pub shape: Shape,
    pub method: EvidenceMethod,
    pub elapsed_secs: f64,
}

/// Result of a search or of the full decision cascade.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Found(FactorizationCertificate),
    NoneComplete(NonexistenceEvidence),
    Inconclusive(SearchStats),
}

pub type Decision = Outcome;

impl Outcome {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, Outcome::NoneComplete(_))
    }

    pub fn certificate(&self) -> Option<&FactorizationCertificate> {
        match self {
            Outcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::NoneComplete(_) => "none",
            Outcome::Inconclusive(_) => "inconclusive",
        }
    }
}
