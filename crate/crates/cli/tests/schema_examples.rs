//! The frozen records under docs/records match what the tool emits now,
//! and each one verifies. `GRPFACT_BLESS=1` rewrites them.

use std::path::PathBuf;

use grpfact_cli::record::{verify_record, ResultRecord};
use grpfact_core::catalog::Catalog;
use grpfact_core::engine::decide;
use grpfact_core::{exhaustive_search, Outcome, SearchBudget, Shape};

fn records_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/records")
}

fn fresh(name: &str) -> ResultRecord {
    let cat = Catalog::builtin();
    let (id, shape, exhaustive, budget) = match name {
        "found" => ("S4", "2,2,3,2", false, SearchBudget::default()),
        "none_theorem6" => ("A4", "2,3,2", false, SearchBudget::default()),
        "none_search" => ("A4", "2,3,2", true, SearchBudget::default()),
        "inconclusive" => ("A5", "2,3,5,2", true, SearchBudget::nodes(4096)),
        _ => unreachable!(),
    };
    let g = cat.build(id).unwrap();
    let shape: Shape = shape.parse().unwrap();
    let outcome = if exhaustive {
        exhaustive_search(&g, &shape, &budget).unwrap()
    } else {
        decide(&g, &shape, &budget, None).unwrap()
    };
    ResultRecord::new(&g, &shape, &outcome, 0.0)
}

/// Drops wall-clock fields.
fn stable(mut r: ResultRecord) -> ResultRecord {
    r.stats.elapsed_secs = 0.0;
    if let Some(ev) = r.evidence.as_mut() {
        ev.elapsed_secs = 0.0;
    }
    r
}

#[test]
fn frozen_records_match_and_verify() {
    let cat = Catalog::builtin();
    let bless = std::env::var_os("GRPFACT_BLESS").is_some();
    for name in ["found", "none_theorem6", "none_search", "inconclusive"] {
        let path = records_dir().join(format!("{name}.json"));
        let now = stable(fresh(name));
        if bless {
            std::fs::write(&path, now.to_json() + "\n").unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let frozen: ResultRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(stable(frozen.clone()), now, "{name}");
        let g = cat.build(&frozen.group_id).unwrap();
        verify_record(&g, &frozen).unwrap();
        let expected = match name {
            "found" => "found",
            "inconclusive" => "inconclusive",
            _ => "none",
        };
        assert_eq!(frozen.outcome, expected);
        assert!(matches!(
            (frozen.to_outcome().unwrap(), expected),
            (Outcome::Found(_), "found") | (Outcome::NoneComplete(_), "none") | (Outcome::Inconclusive(_), "inconclusive")
        ));
    }
}
