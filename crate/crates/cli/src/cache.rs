//! A directory of result records keyed by content.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use grpfact_core::classify::OutcomeCache;
use grpfact_core::{Group, Outcome, SearchBudget, Shape};

use crate::record::ResultRecord;

pub const CACHE_ENV: &str = "GRPFACT_CACHE";

pub struct DirCache {
    dir: PathBuf,
    budget: String,
}

impl DirCache {
    pub fn new(dir: impl Into<PathBuf>, budget: &SearchBudget) -> std::io::Result<DirCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DirCache { dir, budget: budget.class_label() })
    }

    /// Cache named by `--cache`, else by `GRPFACT_CACHE`.
    pub fn from_flag_or_env(flag: Option<PathBuf>, budget: &SearchBudget) -> std::io::Result<Option<DirCache>> {
        match flag.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) {
            Some(dir) => DirCache::new(dir, budget).map(Some),
            None => Ok(None),
        }
    }

    /// Table digest, shape and budget class; names play no part.
    pub fn key(&self, g: &Group, shape: &Shape) -> String {
        let mut h = Sha256::new();
        h.update(g.digest());
        h.update(shape.to_string().as_bytes());
        h.update(self.budget.as_bytes());
        h.finalize()[..16].iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, g: &Group, shape: &Shape) -> PathBuf {
        self.dir.join(format!("{}.json", self.key(g, shape)))
    }
}

impl OutcomeCache for DirCache {
    fn get(&self, g: &Group, shape: &Shape) -> Option<Outcome> {
        let text = fs::read_to_string(self.path(g, shape)).ok()?;
        let rec: ResultRecord = serde_json::from_str(&text).ok()?;
        if rec.group_digest != g.digest_hex() || rec.shape != *shape {
            return None;
        }
        rec.to_outcome().ok()
    }

    fn put(&self, g: &Group, shape: &Shape, outcome: &Outcome) {
        let rec = ResultRecord::new(g, shape, outcome, 0.0);
        let path = self.path(g, shape);
        let tmp = path.with_extension("tmp");
        let written = fs::File::create(&tmp)
            .and_then(|mut f| f.write_all(rec.to_json().as_bytes()))
            .and_then(|_| fs::rename(&tmp, &path));
        if let Err(e) = written {
            eprintln!("warning: cache write to {} failed: {e}", path.display());
        }
    }
}
