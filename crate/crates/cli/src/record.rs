//! Serialized decisions and their independent re-verification.

use serde::{Deserialize, Serialize};

use grpfact_core::engine::{theorem6_route, EvidenceMethod, SearchStats};
use grpfact_core::gf2::gf2_exactness_check;
use grpfact_core::{verify_certificate, FactorizationCertificate, Group, Method, NonexistenceEvidence, Outcome, Shape};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRef {
    pub index: usize,
    /// informational; verification reads only `index`
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePayload {
    pub method: Method,
    pub factors: Vec<Vec<ElementRef>>,
}

/// One decision for one (group, shape) pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub tool_version: String,
    pub group_id: String,
    /// SHA-256 of the Cayley table
    pub group_digest: String,
    pub shape: Shape,
    /// "found", "none" or "inconclusive"
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificatePayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<NonexistenceEvidence>,
    pub stats: SearchStats,
}

impl ResultRecord {
    pub fn new(g: &Group, shape: &Shape, outcome: &Outcome, elapsed_secs: f64) -> ResultRecord {
        let mut rec = ResultRecord {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            group_id: g.id().to_string(),
            group_digest: g.digest_hex(),
            shape: shape.clone(),
            outcome: outcome.status().to_string(),
            certificate: None,
            evidence: None,
            stats: SearchStats { nodes_visited: 0, elapsed_secs },
        };
        match outcome {
            Outcome::Found(cert) => {
                rec.certificate = Some(CertificatePayload {
                    method: cert.method,
                    factors: cert
                        .factors
                        .iter()
                        .map(|f| f.iter().map(|&i| ElementRef { index: i, label: g.label(i).to_string() }).collect())
                        .collect(),
                });
            }
            Outcome::NoneComplete(ev) => {
                if let EvidenceMethod::ExhaustiveComplete { nodes_visited, .. } = ev.method {
                    rec.stats.nodes_visited = nodes_visited;
                }
                rec.evidence = Some(ev.clone());
            }
            Outcome::Inconclusive(stats) => rec.stats = *stats,
        }
        rec
    }

    /// The outcome this record describes, without checking it.
    pub fn to_outcome(&self) -> Result<Outcome, String> {
        match (self.outcome.as_str(), &self.certificate, &self.evidence) {
            ("found", Some(c), None) => Ok(Outcome::Found(FactorizationCertificate {
                group_id: self.group_id.clone(),
                shape: self.shape.clone(),
                factors: c.factors.iter().map(|f| f.iter().map(|e| e.index).collect()).collect(),
                method: c.method,
            })),
            ("none", None, Some(ev)) => Ok(Outcome::NoneComplete(ev.clone())),
            ("inconclusive", None, None) => Ok(Outcome::Inconclusive(self.stats)),
            (status, c, e) => Err(format!(
                "outcome {status:?} with certificate {} and evidence {}",
                if c.is_some() { "present" } else { "absent" },
                if e.is_some() { "present" } else { "absent" }
            )),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}

/// Checks a record against a fresh build `g` of its group.
///
/// Certificates are re-verified for exactness and in the group algebra;
/// structural evidence is re-derived; search evidence must claim completeness.
pub fn verify_record(g: &Group, rec: &ResultRecord) -> Result<(), String> {
    if rec.schema_version != SCHEMA_VERSION {
        return Err(format!("schema version {} is not {}", rec.schema_version, SCHEMA_VERSION));
    }
    if g.digest_hex() != rec.group_digest {
        return Err("group digest does not match the catalog group".into());
    }
    if rec.shape.product() != g.order() {
        return Err(format!("shape {} does not multiply to {}", rec.shape, g.order()));
    }
    match rec.to_outcome()? {
        Outcome::Found(cert) => {
            verify_certificate(g, &cert).map_err(|e| e.to_string())?;
            match gf2_exactness_check(g, &cert.masks()) {
                Ok(true) => Ok(()),
                Ok(false) => Err("group algebra product is not the sum of all elements".into()),
                Err(e) => Err(e.to_string()),
            }
        }
        Outcome::NoneComplete(ev) => {
            if ev.shape != rec.shape {
                return Err(format!("evidence is for {}, record for {}", ev.shape, rec.shape));
            }
            match &ev.method {
                EvidenceMethod::ExhaustiveComplete { complete, nodes_visited, .. } => {
                    if !complete || *nodes_visited == 0 {
                        return Err("search evidence is not marked complete".into());
                    }
                    Ok(())
                }
                EvidenceMethod::Theorem6 { .. } => match theorem6_route(g, &rec.shape) {
                    Some(fresh) if fresh.method == ev.method => Ok(()),
                    Some(_) => Err("involution criterion record differs from a fresh derivation".into()),
                    None => Err("involution criterion does not apply".into()),
                },
            }
        }
        Outcome::Inconclusive(_) => Ok(()),
    }
}
