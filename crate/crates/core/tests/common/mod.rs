//! Randomized property checks shared by the property and acceptance suites.
#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grpfact_core::catalog::{Catalog, Tag};
use grpfact_core::engine::sandwich::double_coset_size_formula;
use grpfact_core::engine::{
    double_cosets, exact_cover_search, exhaustive_search, ordered_factorizations, product_exact, try_constructions,
};
use grpfact_core::gf2::gf2_exactness_check;
use grpfact_core::subgroups::all_subgroups;
use grpfact_core::{verify_certificate, FactorizationCertificate, Group, Outcome, SearchBudget, Shape, SubsetMask};

pub const CASES: u32 = 1000;

/// Catalog groups and controls of order at most `max`.
pub fn groups(max: usize) -> Vec<Group> {
    let cat = Catalog::builtin();
    cat.entries()
        .iter()
        .filter(|e| e.order <= max && e.tag != Tag::Extra)
        .map(|e| cat.build(&e.id).unwrap())
        .collect()
}

/// Constructive certificates for every shape of length 2 to 5.
pub fn certificate_pool() -> &'static [(Group, FactorizationCertificate)] {
    static POOL: OnceLock<Vec<(Group, FactorizationCertificate)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = Vec::new();
        for g in groups(48) {
            for k in 2..=5 {
                for shape in ordered_factorizations(g.order(), k) {
                    if let Some(c) = try_constructions(&g, &shape, None) {
                        pool.push((g.clone(), c));
                    }
                }
            }
        }
        pool
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset(g: &Group, size: usize, r: &mut ChaCha8Rng) -> SubsetMask {
    let mut all: Vec<usize> = g.elements().collect();
    all.shuffle(r);
    SubsetMask::from_indices(all.into_iter().take(size))
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn pick_cert() -> impl Strategy<Value = (usize, u64)> {
    (0..certificate_pool().len(), any::<u64>())
}

/// Every prefix of a certificate is an exact product.
pub fn prefix_exactness(cases: u32) -> Result<(), String> {
    run(cases, pick_cert(), |(i, _)| {
        let (g, c) = &certificate_pool()[i];
        prop_assert!(verify_certificate(g, c).is_ok());
        let masks = c.masks();
        for j in 1..=masks.len() {
            let (size, exact) = product_exact(g, &masks[..j]);
            prop_assert!(exact);
            prop_assert_eq!(size, c.shape.parts()[..j].iter().product::<usize>());
        }
        Ok(())
    })
}

/// Reversal is an involution on certificates; merges stay certificates.
pub fn reversal_and_merge(cases: u32) -> Result<(), String> {
    run(cases, pick_cert(), |(i, seed)| {
        let (g, c) = &certificate_pool()[i];
        let r = c.reversed(g);
        prop_assert!(verify_certificate(g, &r).is_ok());
        prop_assert_eq!(&r.reversed(g), c);
        if c.shape.len() >= 2 {
            let k = rng(seed).gen_range(0..c.shape.len() - 1);
            let m = c.merge_adjacent(g, k);
            prop_assert!(verify_certificate(g, &m).is_ok());
            prop_assert_eq!(m.shape.len(), c.shape.len() - 1);
        }
        Ok(())
    })
}

/// `(A_i g, g^-1 A_{i+1})` and `(A_1^g, ..., A_k^g)` preserve exactness,
/// for certificates and for random tuples alike.
pub fn translation_conjugation(cases: u32) -> Result<(), String> {
    run(cases, pick_cert(), |(i, seed)| {
        let (g, c) = &certificate_pool()[i];
        let mut r = rng(seed);
        let x = r.gen_range(0..g.order());
        let mut masks = c.masks();
        if masks.len() >= 2 {
            let k = r.gen_range(0..masks.len() - 1);
            masks[k] = g.right_translate(masks[k], x);
            masks[k + 1] = g.left_translate(masks[k + 1], g.inv(x));
            prop_assert!(product_exact(g, &masks).1);
        }
        let conj: Vec<SubsetMask> = c.masks().iter().map(|&m| g.conjugate_mask(m, x)).collect();
        prop_assert!(product_exact(g, &conj).1);
        let random: Vec<SubsetMask> = c.shape.parts().iter().map(|&s| random_subset(g, s, &mut r)).collect();
        let random_conj: Vec<SubsetMask> = random.iter().map(|&m| g.conjugate_mask(m, x)).collect();
        prop_assert_eq!(product_exact(g, &random).1, product_exact(g, &random_conj).1);
        Ok(())
    })
}

/// The group-algebra test agrees with direct product counting when the
/// sizes multiply to `|G|`: on certificates, one-element corruptions and
/// random subsets.
pub fn gf2_matches_product(cases: u32) -> Result<(), String> {
    run(cases, (pick_cert(), 0..3u8), |((i, seed), mode)| {
        let (g, c) = &certificate_pool()[i];
        let mut r = rng(seed);
        let mut masks = c.masks();
        match mode {
            0 => {}
            1 => {
                let k = r.gen_range(0..masks.len());
                let out = masks[k].to_vec()[r.gen_range(0..masks[k].len())];
                let spare: Vec<usize> = g.elements().filter(|&y| !masks[k].contains(y)).collect();
                if let Some(&y) = spare.choose(&mut r) {
                    masks[k].remove(out);
                    masks[k].insert(y);
                }
            }
            _ => masks = c.shape.parts().iter().map(|&s| random_subset(g, s, &mut r)).collect(),
        }
        let gf2 = gf2_exactness_check(g, &masks).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(gf2, product_exact(g, &masks).1);
        Ok(())
    })
}

/// `|A x B| = |A||B| / |A^x ∩ B|`, and the double cosets partition `G`.
pub fn double_coset_formula(cases: u32) -> Result<(), String> {
    static GROUPS: OnceLock<Vec<Group>> = OnceLock::new();
    let gs = GROUPS.get_or_init(|| groups(60));
    run(cases, (0..gs.len(), any::<u64>()), |(i, seed)| {
        let g = &gs[i];
        let mut r = rng(seed);
        let subs = all_subgroups(g).masks();
        let a = *subs.choose(&mut r).unwrap();
        let b = *subs.choose(&mut r).unwrap();
        let x = r.gen_range(0..g.order());
        let direct = g.product(g.right_translate(a, x), b).len();
        prop_assert_eq!(double_coset_size_formula(g, a, b, x), direct);
        let (reps, sizes) = double_cosets(g, &g.subgroup(a).unwrap(), &g.subgroup(b).unwrap());
        prop_assert_eq!(sizes.iter().sum::<usize>(), g.order());
        prop_assert_eq!(reps.len(), sizes.len());
        Ok(())
    })
}

/// Exact cover and exhaustive search agree on every 3-shape with outer
/// product at most 16, for every catalog group of order at most 36.
/// Returns the number of (group, shape) pairs compared.
pub fn exact_cover_agreement() -> Result<usize, String> {
    let budget = SearchBudget::default();
    let mut count = 0;
    for g in groups(36) {
        for shape in ordered_factorizations(g.order(), 3) {
            if shape.first() * shape.last() > 16 {
                continue;
            }
            let a = exact_cover_search(&g, &shape, &budget).map_err(|e| e.to_string())?;
            let b = exhaustive_search(&g, &shape, &budget).map_err(|e| e.to_string())?;
            for o in [&a, &b] {
                if let Outcome::Found(c) = o {
                    verify_certificate(&g, c).map_err(|e| format!("{} {shape}: {e}", g.id()))?;
                }
            }
            if a.status() != b.status() || a.status() == "inconclusive" {
                return Err(format!("{} {shape}: exact cover {} vs exhaustive {}", g.id(), a.status(), b.status()));
            }
            count += 1;
        }
    }
    Ok(count)
}

pub fn shape(s: &str) -> Shape {
    s.parse().unwrap()
}
