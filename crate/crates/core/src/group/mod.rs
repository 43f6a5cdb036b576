//! Finite groups of order at most 128 stored as explicit Cayley tables.
//!
//! Element `0` is always the identity. Constructors index elements in
//! breadth-first order from the identity over the generators, so the same
//! recipe always yields the same table.

mod construct;
mod fingerprint;
mod structure;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

pub use construct::{parse_permutation, Matrix2, Permutation};
pub use fingerprint::GroupFingerprint;
pub use structure::SubgroupHandle;
pub(crate) use structure::is_prime;

pub const MAX_ORDER: usize = 128;

#[derive(Default, Clone)]
pub(crate) struct Caches {
    pub(crate) classes: OnceLock<Vec<Vec<usize>>>,
    pub(crate) class_index: OnceLock<Vec<usize>>,
    pub(crate) subgroups: OnceLock<crate::subgroups::SubgroupSet>,
    pub(crate) supersolvable: OnceLock<bool>,
}

/// An immutable finite group given by its multiplication table.
#[derive(Clone)]
pub struct Group {
    id: String,
    n: usize,
    // table[a * n + b] = a * b
    table: Vec<u8>,
    // right[b * n + a] = a * b
    right: Vec<u8>,
    inv: Vec<u8>,
    labels: Vec<String>,
    generators: Vec<usize>,
    digest: [u8; 32],
    pub(crate) caches: Caches,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("id", &self.id)
            .field("order", &self.n)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for Group {}

impl Group {
    /// Builds a group from a full multiplication table and validates it.
    pub fn from_table(
        id: impl Into<String>,
        table: Vec<Vec<usize>>,
        labels: Vec<String>,
        generators: Vec<usize>,
    ) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {a} has length {}", row.len())));
            }
            for &c in row {
                if c >= n {
                    return Err(Error::InvalidTable(format!("entry {c} out of range in row {a}")));
                }
                flat.push(c as u8);
            }
        }
        let labels = if labels.len() == n {
            labels
        } else {
            (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect()
        };
        let g = Self::assemble(id.into(), n, flat, labels, generators)?;
        g.validate()?;
        Ok(g)
    }

    fn assemble(
        id: String,
        n: usize,
        table: Vec<u8>,
        labels: Vec<String>,
        generators: Vec<usize>,
    ) -> Result<Group> {
        let mut right = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                right[b * n + a] = table[a * n + b];
            }
        }
        let mut inv = vec![u8::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as u8;
                    break;
                }
            }
            if inv[a] == u8::MAX {
                return Err(Error::InvalidTable(format!("element {a} has no right inverse")));
            }
        }
        let mut hasher = Sha256::new();
        hasher.update((n as u32).to_le_bytes());
        hasher.update(&table);
        let digest: [u8; 32] = hasher.finalize().into();
        Ok(Group {
            id,
            n,
            table,
            right,
            inv,
            labels,
            generators,
            digest,
            caches: Caches::default(),
        })
    }

    /// Closure of `gens` under `op`, indexed breadth-first from `identity`.
    ///
    /// Labels are the first-found (shortest) words in the generator names.
    pub(crate) fn from_closure<T, F>(
        id: impl Into<String>,
        identity: T,
        gens: &[T],
        names: &[String],
        op: F,
    ) -> Result<(Group, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            for (k, g) in gens.iter().enumerate() {
                let y = op(&elements[head], g);
                if !index.contains_key(&y) {
                    if elements.len() == MAX_ORDER {
                        return Err(Error::ClosureTooLarge { limit: MAX_ORDER });
                    }
                    index.insert(y.clone(), elements.len());
                    let mut w = words[head].clone();
                    w.push(k);
                    words.push(w);
                    elements.push(y);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for x in &elements {
            for y in &elements {
                let z = op(x, y);
                match index.get(&z) {
                    Some(&k) => table.push(k as u8),
                    None => {
                        return Err(Error::InvalidTable("closure is not closed under products".into()))
                    }
                }
            }
        }
        let labels = words.iter().map(|w| render_word(w, names)).collect();
        let mut generators = Vec::new();
        for g in gens {
            let k = index[g];
            if k != 0 && !generators.contains(&k) {
                generators.push(k);
            }
        }
        let group = Self::assemble(id.into(), n, table, labels, generators)?;
        group.validate()?;
        Ok((group, elements))
    }

    /// Relabels elements by shortest words in the generators, named by `names`.
    pub fn with_word_labels(mut self, names: &[String]) -> Group {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.n];
        words[0] = Some(Vec::new());
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (k, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let mut w = words[x].clone().expect("visited");
                    w.push(k);
                    words[y] = Some(w);
                    queue.push(y);
                }
            }
        }
        if queue.len() == self.n && names.len() >= self.generators.len() {
            self.labels = words.iter().map(|w| render_word(w.as_ref().expect("spans"), names)).collect();
        }
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Returns a copy of this group under a different id. Tables are shared by value.
    pub fn renamed(&self, id: impl Into<String>) -> Group {
        let mut g = self.clone();
        g.id = id.into();
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// SHA-256 of the order and Cayley table.
    pub fn digest(&self) -> &[u8; 32] {
        &self.digest
    }

    pub fn digest_hex(&self) -> String {
        self.digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Short tag used to detect mixing elements of different groups.
    pub fn tag(&self) -> u64 {
        u64::from_le_bytes(self.digest[..8].try_into().unwrap())
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// The table as nested rows, for serialization and tests.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        let mut acc = 0;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x^-1 g x`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `{ g x : x in mask }`.
    #[inline]
    pub fn left_translate(&self, mask: SubsetMask, g: usize) -> SubsetMask {
        let row = &self.table[g * self.n..(g + 1) * self.n];
        let mut out = 0u128;
        for i in mask.iter() {
            out |= 1u128 << row[i];
        }
        SubsetMask(out)
    }

    /// `{ x g : x in mask }`.
    #[inline]
    pub fn right_translate(&self, mask: SubsetMask, g: usize) -> SubsetMask {
        let col = &self.right[g * self.n..(g + 1) * self.n];
        let mut out = 0u128;
        for i in mask.iter() {
            out |= 1u128 << col[i];
        }
        SubsetMask(out)
    }

    /// `{ x^-1 : x in mask }`.
    #[inline]
    pub fn inverse_mask(&self, mask: SubsetMask) -> SubsetMask {
        let mut out = 0u128;
        for i in mask.iter() {
            out |= 1u128 << self.inv[i];
        }
        SubsetMask(out)
    }

    /// Setwise product `A B`.
    pub fn product(&self, a: SubsetMask, b: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for y in b.iter() {
            out = out.union(self.right_translate(a, y));
        }
        out
    }

    /// `x^-1 A x`.
    pub fn conjugate_mask(&self, mask: SubsetMask, x: usize) -> SubsetMask {
        let mut out = 0u128;
        for i in mask.iter() {
            out |= 1u128 << self.conj(i, x);
        }
        SubsetMask(out)
    }

    /// Subgroup generated by a set of elements.
    pub fn closure(&self, gens: SubsetMask) -> SubsetMask {
        let gens: Vec<usize> = gens.iter().filter(|&g| g != 0).collect();
        let mut mask = SubsetMask::singleton(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask.contains(y) {
                    mask.insert(y);
                    queue.push(y);
                }
            }
        }
        mask
    }

    pub fn is_subgroup(&self, mask: SubsetMask) -> bool {
        if !mask.contains(0) || !mask.is_subset(self.full_mask()) {
            return false;
        }
        mask.iter()
            .all(|a| mask.iter().all(|b| mask.contains(self.mul(a, b))))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks every group axiom on the table, including full associativity.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(Error::InvalidTable(format!("element 0 is not an identity at {g}")));
            }
        }
        for a in 0..n {
            let mut row = SubsetMask::EMPTY;
            let mut col = SubsetMask::EMPTY;
            for b in 0..n {
                row.insert(self.mul(a, b));
                col.insert(self.mul(b, a));
            }
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
            }
            if col.len() != n {
                return Err(Error::InvalidTable(format!("column {a} is not a permutation")));
            }
        }
        for g in 0..n {
            let i = self.inv(g);
            if self.mul(g, i) != 0 || self.mul(i, g) != 0 {
                return Err(Error::InvalidTable(format!("bad inverse for {g}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Evaluates a word such as `t^2b^-1a1` over named generators.
    ///
    /// Tokens are a letter with optional trailing digits, then an optional
    /// `^k` or `^-k`. `e` denotes the identity unless bound in `symbols`.
    pub fn eval_word(&self, word: &str, symbols: &HashMap<&str, usize>) -> Result<usize> {
        let bad = |m: String| Error::ParseError { line: 0, message: m };
        let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let mut acc = 0usize;
        let mut i = 0;
        while i < chars.len() {
            if !chars[i].is_ascii_alphabetic() {
                return Err(bad(format!("unexpected {:?} in {word:?}", chars[i])));
            }
            let mut name = chars[i].to_string();
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                name.push(chars[i]);
                i += 1;
            }
            let mut base = if name == "e" && !symbols.contains_key("e") {
                0
            } else {
                *symbols
                    .get(name.as_str())
                    .ok_or_else(|| bad(format!("unknown symbol {name:?} in {word:?}")))?
            };
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let neg = i < chars.len() && chars[i] == '-';
                if neg {
                    i += 1;
                }
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let k: usize = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad(format!("bad exponent in {word:?}")))?;
                if neg {
                    base = self.inv(base);
                }
                base = self.power(base, k);
            }
            acc = self.mul(acc, base);
        }
        Ok(acc)
    }
}

/// Renders a generator word with runs collapsed, e.g. `[0, 1, 1]` -> `ab^2`.
pub(crate) fn render_word(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&names[word[i]]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Default generator names: `a, b, c, ...`, skipping `e`.
pub(crate) fn default_names(k: usize) -> Vec<String> {
    "abcdfghijklmnopqrsuvwxyz"
        .chars()
        .take(k)
        .map(|c| c.to_string())
        .chain((24..k).map(|i| format!("g{i}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_collapses_runs() {
        let names = default_names(3);
        assert_eq!(render_word(&[], &names), "e");
        assert_eq!(render_word(&[0, 1, 1, 2], &names), "ab^2c");
    }

    #[test]
    fn corrupted_table_fails_validation() {
        let c4 = Group::cyclic(4).unwrap();
        let mut rows = c4.table_rows();
        rows[1].swap(2, 3);
        let err = Group::from_table("bad", rows, vec![], vec![1]).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(_)), "{err}");

        // swapping two whole rows keeps rows/columns permutations but breaks identity
        let mut rows = c4.table_rows();
        rows.swap(2, 3);
        assert!(Group::from_table("bad", rows, vec![], vec![]).is_err());
    }

    #[test]
    fn associativity_failure_is_reported() {
        // a Latin square with identity 0 that is not associative (order 5 loop)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_table("loop", rows, vec![], vec![]).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn words_evaluate() {
        let g = Group::cyclic(6).unwrap();
        let syms: HashMap<&str, usize> = [("a", 1)].into_iter().collect();
        assert_eq!(g.eval_word("a^2a", &syms).unwrap(), 3);
        assert_eq!(g.eval_word("a^-1", &syms).unwrap(), 5);
        assert_eq!(g.eval_word("e", &syms).unwrap(), 0);
    }
}
