//! `key: value` record files: generator data and frozen fingerprints.

use std::collections::BTreeMap;
use std::path::Path;

use super::Recipe;
use crate::error::{Error, Result};
use crate::group::GroupFingerprint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    /// line of the record's first key
    pub line: usize,
    pub fields: BTreeMap<String, (usize, String)>,
}

impl Record {
    fn get(&self, key: &str) -> Option<&str> {
        self.fields.get(key).map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::ParseError {
            line: self.line,
            message: format!("record is missing `{key}`"),
        })
    }

    fn line_of(&self, key: &str) -> usize {
        self.fields.get(key).map_or(self.line, |(l, _)| *l)
    }

    fn error(&self, key: &str, message: String) -> Error {
        Error::ParseError { line: self.line_of(key), message }
    }

    pub fn id(&self) -> Result<&str> {
        self.require("id")
    }
}

/// Splits text into records. Line numbers are 1-based.
pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut cur: Option<Record> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if raw.trim().is_empty() {
            if let Some(r) = cur.take() {
                out.push(r);
            }
            continue;
        }
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            return Err(Error::ParseError { line, message: format!("expected `key: value`, got {content:?}") });
        };
        let key = key.trim().to_string();
        let rec = cur.get_or_insert_with(|| Record { line, fields: BTreeMap::new() });
        if rec.fields.insert(key.clone(), (line, value.trim().to_string())).is_some() {
            return Err(Error::ParseError { line, message: format!("duplicate key `{key}`") });
        }
    }
    if let Some(r) = cur.take() {
        out.push(r);
    }
    Ok(out)
}

fn parse_num(rec: &Record, key: &str, s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| rec.error(key, format!("`{key}`: {s:?} is not a non-negative integer")))
}

fn parse_list(rec: &Record, key: &str) -> Result<Vec<usize>> {
    rec.require(key)?
        .split_whitespace()
        .map(|t| parse_num(rec, key, t))
        .collect()
}

/// The `fingerprint.*` block of a record, if it has one.
pub fn parse_fingerprint(rec: &Record) -> Result<Option<GroupFingerprint>> {
    if rec.get("fingerprint.order").is_none() {
        return Ok(None);
    }
    let order = parse_num(rec, "fingerprint.order", rec.require("fingerprint.order")?)?;
    let mut order_histogram = BTreeMap::new();
    for pair in rec.require("fingerprint.orders")?.split_whitespace() {
        let (k, v) = pair
            .split_once(':')
            .ok_or_else(|| rec.error("fingerprint.orders", format!("expected `order:count`, got {pair:?}")))?;
        order_histogram.insert(parse_num(rec, "fingerprint.orders", k)?, parse_num(rec, "fingerprint.orders", v)?);
    }
    Ok(Some(GroupFingerprint {
        order,
        order_histogram,
        class_sizes: parse_list(rec, "fingerprint.classes")?,
        center_order: parse_num(rec, "fingerprint.center", rec.require("fingerprint.center")?)?,
        derived_order: parse_num(rec, "fingerprint.derived", rec.require("fingerprint.derived")?)?,
        abelianization: parse_list(rec, "fingerprint.abelianization")?,
    }))
}

/// Frozen fingerprints by id.
pub fn parse_fingerprints(text: &str) -> Result<BTreeMap<String, GroupFingerprint>> {
    let mut out = BTreeMap::new();
    for rec in parse_records(text)? {
        let id = rec.id()?.to_string();
        let fp = parse_fingerprint(&rec)?.ok_or_else(|| rec.error("id", format!("{id}: no fingerprint block")))?;
        out.insert(id, fp);
    }
    Ok(out)
}

/// One group given by raw generators.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorRecord {
    pub id: String,
    pub order: usize,
    pub recipe: Recipe,
    pub fingerprint: GroupFingerprint,
}

fn parse_generator_record(rec: &Record) -> Result<GeneratorRecord> {
    let id = rec.id()?.to_string();
    let order = parse_num(rec, "order", rec.require("order")?)?;
    let names: Vec<String> = rec.get("names").map_or_else(Vec::new, |s| s.split_whitespace().map(String::from).collect());
    let gens: Vec<&str> = rec.require("gens")?.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let recipe = match rec.require("kind")? {
        "perm" => Recipe::Permutations {
            degree: parse_num(rec, "degree", rec.require("degree")?)?,
            gens: gens.iter().map(|s| s.to_string()).collect(),
            names,
        },
        "matrix" => {
            let p = parse_num(rec, "prime", rec.require("prime")?)? as u32;
            let mut mats = Vec::new();
            for g in &gens {
                let entries: Vec<i64> = g
                    .split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| rec.error("gens", format!("bad matrix entry {t:?}"))))
                    .collect::<Result<_>>()?;
                if entries.len() != 4 {
                    return Err(rec.error("gens", format!("matrix {g:?} needs 4 entries")));
                }
                mats.push([[entries[0], entries[1]], [entries[2], entries[3]]]);
            }
            Recipe::Matrices { p, gens: mats, names }
        }
        other => return Err(rec.error("kind", format!("unknown kind {other:?}"))),
    };
    let fingerprint = parse_fingerprint(rec)?
        .ok_or_else(|| rec.error("id", format!("{id}: generator record without fingerprint block")))?;
    Ok(GeneratorRecord { id, order, recipe, fingerprint })
}

pub fn parse_generator_data(text: &str) -> Result<Vec<GeneratorRecord>> {
    parse_records(text)?.iter().map(parse_generator_record).collect()
}

pub fn load_generator_data(path: impl AsRef<Path>) -> Result<Vec<GeneratorRecord>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::ParseError {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_generator_data(&text)
}
