//! Named constructions of the groups under study, each checked against
//! frozen invariants.

mod data;

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use data::{
    load_generator_data, parse_fingerprint, parse_fingerprints, parse_generator_data, parse_records, GeneratorRecord,
    Record,
};

use crate::error::{Error, Result};
use crate::group::{default_names, parse_permutation, Group, GroupFingerprint, Matrix2};

const FINGERPRINTS: &str = include_str!("../../data/fingerprints.txt");
const GENERATORS: &str = include_str!("../../data/generators.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    NonSupersolvable,
    Control,
    Extra,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    /// cycle notation, points `1..=degree`
    Permutations { degree: usize, gens: Vec<String>, names: Vec<String> },
    /// 2x2 matrices over F_p
    Matrices { p: u32, gens: Vec<[[i64; 2]; 2]>, names: Vec<String> },
    Cyclic(usize),
    /// another catalog entry
    Ref(String),
    Direct(Vec<Recipe>),
    /// `base ⋊ C_m` with `t^-1 x t` given as words in `names`
    Semidirect { base: Box<Recipe>, names: Vec<String>, m: usize, images: Vec<String> },
    /// generators come from a data file
    Missing,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub order: usize,
    pub recipe: Recipe,
    pub fingerprint: Option<GroupFingerprint>,
    /// maximal subgroup orders up to conjugacy, descending
    pub maximal_orders: Option<Vec<usize>>,
    pub tag: Tag,
}

impl CatalogEntry {
    pub fn is_buildable(&self) -> bool {
        self.recipe != Recipe::Missing
    }
}

/// Ids of the non-supersolvable groups of order at most 60, by order.
pub const NON_SUPERSOLVABLE: [&str; 20] = [
    "A4",
    "SL(2,3)",
    "S4",
    "C2 x A4",
    "(C2 x C2) : C9",
    "(C3 x C3) : C4",
    "C3 x A4",
    "(C4 x C4) : C3",
    "C2 . S4 = SL(2,3) . C2",
    "GL(2,3)",
    "A4 : C4",
    "C4 x A4",
    "C2 x SL(2,3)",
    "((C4 x C2) : C2) : C3",
    "C2 x S4",
    "C2 x C2 x A4",
    "(C2 x C2 x C2 x C2) : C3",
    "(C2 x C2 x C2) : C7",
    "A5",
    "C5 x A4",
];

pub const ORDER_48: [&str; 10] = [
    "(C4 x C4) : C3",
    "C2 . S4 = SL(2,3) . C2",
    "GL(2,3)",
    "A4 : C4",
    "C4 x A4",
    "C2 x SL(2,3)",
    "((C4 x C2) : C2) : C3",
    "C2 x S4",
    "C2 x C2 x A4",
    "(C2 x C2 x C2 x C2) : C3",
];

const ALIASES: [(&str, &str); 4] = [
    ("A4 x C3", "C3 x A4"),
    ("A4 x C5", "C5 x A4"),
    ("A4 x C2", "C2 x A4"),
    ("D4", "D8"),
];

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn perms(degree: usize, gens: &[&str]) -> Recipe {
    Recipe::Permutations { degree, gens: strings(gens), names: Vec::new() }
}

fn matrices(p: u32, gens: &[[[i64; 2]; 2]], names: &[&str]) -> Recipe {
    Recipe::Matrices { p, gens: gens.to_vec(), names: strings(names) }
}

fn direct(parts: Vec<Recipe>) -> Recipe {
    Recipe::Direct(parts)
}

fn cyclics(orders: &[usize]) -> Recipe {
    Recipe::Direct(orders.iter().map(|&m| Recipe::Cyclic(m)).collect())
}

fn refer(id: &str) -> Recipe {
    Recipe::Ref(id.to_string())
}

fn semidirect(base: Recipe, names: &[&str], m: usize, images: &[&str]) -> Recipe {
    Recipe::Semidirect { base: Box::new(base), names: strings(names), m, images: strings(images) }
}

fn builtin_recipes() -> Vec<(&'static str, Recipe, Tag)> {
    use Tag::*;
    vec![
        ("A4", perms(4, &["(1,2,3)", "(1,2)(3,4)"]), NonSupersolvable),
        (
            "SL(2,3)",
            matrices(3, &[[[0, 1], [-1, 0]], [[1, 1], [1, -1]], [[1, 1], [0, 1]]], &["a", "b", "t"]),
            NonSupersolvable,
        ),
        ("S4", perms(4, &["(1,2)", "(1,2,3,4)"]), NonSupersolvable),
        ("C2 x A4", direct(vec![Recipe::Cyclic(2), refer("A4")]), NonSupersolvable),
        ("(C2 x C2) : C9", semidirect(cyclics(&[2, 2]), &["a", "b"], 9, &["b", "ab"]), NonSupersolvable),
        ("(C3 x C3) : C4", semidirect(cyclics(&[3, 3]), &["a", "b"], 4, &["ab^2", "a^2b^2"]), NonSupersolvable),
        ("C3 x A4", direct(vec![Recipe::Cyclic(3), refer("A4")]), NonSupersolvable),
        ("(C4 x C4) : C3", semidirect(cyclics(&[4, 4]), &["a", "b"], 3, &["b", "a^-1b^-1"]), NonSupersolvable),
        ("C2 . S4 = SL(2,3) . C2", Recipe::Missing, NonSupersolvable),
        (
            "GL(2,3)",
            matrices(3, &[[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[2, 0], [0, 1]]], &[]),
            NonSupersolvable,
        ),
        // C4 acts through conjugation by (1,2)
        ("A4 : C4", semidirect(refer("A4"), &["a", "b"], 4, &["a^2", "b"]), NonSupersolvable),
        ("C4 x A4", direct(vec![Recipe::Cyclic(4), refer("A4")]), NonSupersolvable),
        ("C2 x SL(2,3)", direct(vec![Recipe::Cyclic(2), refer("SL(2,3)")]), NonSupersolvable),
        ("((C4 x C2) : C2) : C3", Recipe::Missing, NonSupersolvable),
        ("C2 x S4", direct(vec![Recipe::Cyclic(2), refer("S4")]), NonSupersolvable),
        ("C2 x C2 x A4", direct(vec![Recipe::Cyclic(2), Recipe::Cyclic(2), refer("A4")]), NonSupersolvable),
        (
            "(C2 x C2 x C2 x C2) : C3",
            semidirect(cyclics(&[2, 2, 2, 2]), &["a1", "a2", "b1", "b2"], 3, &["a2", "a1a2", "b2", "b1b2"]),
            NonSupersolvable,
        ),
        (
            "(C2 x C2 x C2) : C7",
            semidirect(cyclics(&[2, 2, 2]), &["a", "b", "c"], 7, &["b", "c", "ac"]),
            NonSupersolvable,
        ),
        ("A5", perms(5, &["(1,2,3,4,5)", "(1,2,3)"]), NonSupersolvable),
        ("C5 x A4", direct(vec![Recipe::Cyclic(5), refer("A4")]), NonSupersolvable),
        ("S5", perms(5, &["(1,2,3,4,5)", "(1,2)"]), Extra),
        ("C24", Recipe::Cyclic(24), Control),
        ("D8", perms(4, &["(1,2,3,4)", "(1,3)"]), Control),
        ("Q8", matrices(3, &[[[0, 1], [-1, 0]], [[1, 1], [1, -1]]], &["a", "b"]), Control),
        ("S3", perms(3, &["(1,2)", "(1,2,3)"]), Control),
        ("C3 : C4", semidirect(Recipe::Cyclic(3), &["a"], 4, &["a^2"]), Control),
        ("(C3 x C3) : C2", semidirect(cyclics(&[3, 3]), &["a", "b"], 2, &["a^2", "b^2"]), Control),
        ("C6 x C6", cyclics(&[6, 6]), Control),
        ("C2 x C2", cyclics(&[2, 2]), Control),
    ]
}

fn expected_maximal_orders(id: &str) -> Option<Vec<usize>> {
    let v: &[usize] = match id {
        "(C4 x C4) : C3" => &[16, 12],
        "C2 . S4 = SL(2,3) . C2" | "GL(2,3)" | "A4 : C4" | "C4 x A4" | "C2 x SL(2,3)" | "((C4 x C2) : C2) : C3" => {
            &[24, 16, 12]
        }
        "C2 x S4" | "C2 x C2 x A4" => &[24, 24, 24, 16, 12],
        "(C2 x C2 x C2 x C2) : C3" => &[16, 12, 12, 12, 12, 12],
        _ => return None,
    };
    Some(v.to_vec())
}

fn frozen_fingerprints() -> &'static BTreeMap<String, GroupFingerprint> {
    static FPS: OnceLock<BTreeMap<String, GroupFingerprint>> = OnceLock::new();
    FPS.get_or_init(|| parse_fingerprints(FINGERPRINTS).expect("shipped fingerprint file parses"))
}

/// A built group with its generator names.
struct Built {
    group: Group,
    names: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Built-in recipes and the shipped generator data.
    pub fn builtin() -> Catalog {
        let mut c = Catalog::without_generator_data();
        let records = parse_generator_data(GENERATORS).expect("shipped generator data parses");
        c.apply(records).expect("shipped generator data validates");
        c
    }

    /// Built-in recipes only; data-file entries stay [`Recipe::Missing`].
    pub fn without_generator_data() -> Catalog {
        let fps = frozen_fingerprints();
        let entries = builtin_recipes()
            .into_iter()
            .map(|(id, recipe, tag)| {
                let fingerprint = fps.get(id).cloned();
                CatalogEntry {
                    id: id.to_string(),
                    order: fingerprint.as_ref().map_or(0, |f| f.order),
                    recipe,
                    fingerprint,
                    maximal_orders: expected_maximal_orders(id),
                    tag,
                }
            })
            .collect();
        Catalog { entries }
    }

    /// Installs generator records, each built and checked before it is accepted.
    pub fn apply(&mut self, records: Vec<GeneratorRecord>) -> Result<usize> {
        let count = records.len();
        for rec in records {
            let idx = match self.entries.iter().position(|e| e.id == rec.id) {
                Some(i) => {
                    if let Some(fp) = &self.entries[i].fingerprint {
                        if let Some(detail) = fp.diff(&rec.fingerprint) {
                            return Err(Error::FingerprintMismatch { id: rec.id, detail });
                        }
                    }
                    i
                }
                None => {
                    self.entries.push(CatalogEntry {
                        id: rec.id.clone(),
                        order: rec.order,
                        recipe: Recipe::Missing,
                        fingerprint: None,
                        maximal_orders: None,
                        tag: Tag::Extra,
                    });
                    self.entries.len() - 1
                }
            };
            let previous = self.entries[idx].clone();
            let entry = &mut self.entries[idx];
            entry.recipe = rec.recipe;
            entry.order = rec.order;
            entry.fingerprint = Some(rec.fingerprint);
            let id = entry.id.clone();
            if let Err(e) = self.build(&id) {
                self.entries[idx] = previous;
                return Err(e);
            }
        }
        Ok(count)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn with_tag(&self, tag: Tag) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.tag == tag)
    }

    /// Canonical id for `id` or one of its aliases.
    pub fn resolve<'a>(&self, id: &'a str) -> &'a str {
        ALIASES.iter().find(|(alias, _)| *alias == id).map_or(id, |(_, canon)| canon)
    }

    pub fn entry(&self, id: &str) -> Result<&CatalogEntry> {
        let id = self.resolve(id);
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownGroup(id.to_string()))
    }

    /// Builds and validates an entry; the group's id is the entry id.
    pub fn build(&self, id: &str) -> Result<Group> {
        Ok(self.build_named(id)?.0)
    }

    /// As [`Catalog::build`], also returning generator name -> element index.
    pub fn build_named(&self, id: &str) -> Result<(Group, HashMap<String, usize>)> {
        let entry = self.entry(id)?;
        let built = self.build_recipe(&entry.id, &entry.recipe, 0)?;
        let g = built.group.renamed(entry.id.clone());
        if entry.order != 0 && g.order() != entry.order {
            return Err(Error::ConstructionError {
                id: entry.id.clone(),
                detail: format!("built order {} but expected {}", g.order(), entry.order),
            });
        }
        match &entry.fingerprint {
            Some(expected) => {
                if let Some(detail) = expected.diff(&g.fingerprint()) {
                    return Err(Error::FingerprintMismatch { id: entry.id.clone(), detail });
                }
            }
            None => {
                return Err(Error::ConstructionError { id: entry.id.clone(), detail: "no expected fingerprint".into() })
            }
        }
        let symbols = built
            .names
            .iter()
            .cloned()
            .zip(g.generators().iter().copied())
            .collect();
        Ok((g, symbols))
    }

    fn build_recipe(&self, id: &str, recipe: &Recipe, depth: usize) -> Result<Built> {
        let err = |detail: String| Error::ConstructionError { id: id.to_string(), detail };
        if depth > 8 {
            return Err(err("recipe nesting too deep".into()));
        }
        let (group, names) = match recipe {
            Recipe::Missing => return Err(err("no recipe; generator data not loaded".into())),
            Recipe::Permutations { degree, gens, names } => {
                let ps = gens.iter().map(|s| parse_permutation(*degree, s)).collect::<Result<Vec<_>>>()?;
                (Group::from_permutation_generators(id, *degree, &ps)?, names.clone())
            }
            Recipe::Matrices { p, gens, names } => {
                let ms: Vec<Matrix2> = gens.iter().map(|rows| Matrix2::new(*p, *rows)).collect();
                (Group::from_matrix_generators(id, *p, 2, &ms)?, names.clone())
            }
            Recipe::Cyclic(m) => (Group::cyclic(*m)?, Vec::new()),
            Recipe::Ref(other) => {
                let entry = self.entry(other)?;
                let b = self.build_recipe(&entry.id, &entry.recipe, depth + 1)?;
                (b.group, b.names)
            }
            Recipe::Direct(parts) => {
                let mut acc: Option<Group> = None;
                for part in parts {
                    let b = self.build_recipe(id, part, depth + 1)?;
                    acc = Some(match acc {
                        None => b.group,
                        Some(a) => Group::direct_product(&a, &b.group)?,
                    });
                }
                (acc.ok_or_else(|| err("empty direct product".into()))?, Vec::new())
            }
            Recipe::Semidirect { base, names, m, images } => {
                let b = self.build_recipe(id, base, depth + 1)?;
                let n = b.group;
                if names.len() != n.generators().len() || images.len() != names.len() {
                    return Err(err(format!(
                        "{} names and {} images for {} base generators",
                        names.len(),
                        images.len(),
                        n.generators().len()
                    )));
                }
                let symbols: HashMap<&str, usize> =
                    names.iter().map(String::as_str).zip(n.generators().iter().copied()).collect();
                let imgs = images.iter().map(|w| n.eval_word(w, &symbols)).collect::<Result<Vec<_>>>()?;
                let action = n.hom_from_generator_images(&imgs)?;
                let mut all = names.clone();
                all.push("t".to_string());
                (Group::semidirect_product(&n, *m, &action)?, all)
            }
        };
        let names = if names.len() == group.generators().len() { names } else { default_names(group.generators().len()) };
        let group = group.with_word_labels(&names);
        Ok(Built { group, names })
    }
}

/// Every entry of the built-in catalog.
pub fn list_catalog() -> Vec<CatalogEntry> {
    Catalog::builtin().entries().to_vec()
}
