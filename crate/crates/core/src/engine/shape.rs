use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered tuple of factor sizes, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Shape> {
        if parts.is_empty() {
            return Err(Error::BadShape("empty shape".into()));
        }
        if let Some(p) = parts.iter().find(|&&p| p < 2) {
            return Err(Error::BadShape(format!("part {p} is smaller than 2")));
        }
        Ok(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> usize {
        self.0.iter().product()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn reversed(&self) -> Shape {
        Shape(self.0.iter().rev().copied().collect())
    }

    /// `self` or its reversal, whichever is lexicographically smaller.
    pub fn canonical(&self) -> Shape {
        let r = self.reversed();
        if r < *self {
            r
        } else {
            self.clone()
        }
    }

    /// Drops the first `k` parts.
    pub fn tail(&self, k: usize) -> Option<Shape> {
        (k < self.len()).then(|| Shape(self.0[k..].to_vec()))
    }

    /// Drops the last `k` parts.
    pub fn head(&self, k: usize) -> Option<Shape> {
        (k < self.len()).then(|| Shape(self.0[..self.len() - k].to_vec()))
    }

    /// Whether adjacent merges can turn `self` into `coarse`.
    pub fn refines(&self, coarse: &Shape) -> bool {
        let mut i = 0;
        for &c in coarse.parts() {
            let mut acc = 1;
            while acc < c && i < self.len() {
                acc *= self.0[i];
                i += 1;
            }
            if acc != c {
                return false;
            }
        }
        i == self.len()
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Vec<usize> {
        s.0
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Shape> {
        Shape::new(v)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Shape> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadShape(format!("cannot parse {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Shape::new(parts)
    }
}

/// Prime factors of `n` with multiplicity, ascending.
pub fn prime_factors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        while m.is_multiple_of(p) {
            out.push(p);
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Total number of prime factors of `n`.
pub fn omega(n: usize) -> usize {
    prime_factors(n).len()
}

/// Ordered tuples of `k` integers `>= 2` with product `n`, lexicographic.
pub fn ordered_factorizations(n: usize, k: usize) -> Vec<Shape> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if k == 1 {
            if n >= 2 {
                cur.push(n);
                out.push(Shape(cur.clone()));
                cur.pop();
            }
            return;
        }
        for d in (2..=n).filter(|d| n.is_multiple_of(*d)) {
            cur.push(d);
            go(n / d, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 {
        go(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Every ordered factorization of `n` into primes, lexicographic.
pub fn prime_shapes(n: usize) -> Vec<Shape> {
    let mut primes = prime_factors(n);
    let mut out = Vec::new();
    if primes.is_empty() {
        return out;
    }
    // multiset permutations in lexicographic order
    loop {
        out.push(Shape(primes.clone()));
        let Some(i) = (0..primes.len() - 1).rev().find(|&i| primes[i] < primes[i + 1]) else {
            break;
        };
        let j = (i + 1..primes.len()).rev().find(|&j| primes[j] > primes[i]).unwrap();
        primes.swap(i, j);
        primes[i + 1..].reverse();
    }
    out
}

/// Prime shapes with one representative per reversal pair (the smaller one).
pub fn prime_shapes_mod_reversal(n: usize) -> Vec<Shape> {
    prime_shapes(n).into_iter().filter(|s| *s <= s.reversed()).collect()
}
