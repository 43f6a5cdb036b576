use std::fmt;

use super::{default_names, Group, MAX_ORDER};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

pub const MAX_DEGREE: usize = 16;

/// A permutation of `0..degree`, stored as images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(pub Vec<u8>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Builds from disjoint cycles over points `1..=degree`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut img: Vec<u8> = (0..degree as u8).collect();
        let mut seen = vec![false; degree];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!("point {p} outside 1..={degree}")));
                }
                if seen[p - 1] {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated")));
                }
                seen[p - 1] = true;
                let q = cyc[(k + 1) % cyc.len()];
                if q == 0 || q > degree {
                    return Err(Error::InvalidPermutation(format!("point {q} outside 1..={degree}")));
                }
                img[p - 1] = (q - 1) as u8;
            }
        }
        Ok(Permutation(img))
    }

    /// `self` then `other`: `i^(xy) = (i^x)^y`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn image(&self, point: usize) -> usize {
        self.0[point] as usize
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `(1,2,3)(4,5)` or `(1 2 3)`; `()` is the identity.
pub fn parse_permutation(degree: usize, text: &str) -> Result<Permutation> {
    let text = text.trim();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {text:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
        let body = &open[..close];
        let points: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point {s:?}")))
            })
            .collect::<Result<_>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = open[close + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(degree, &refs)
}

/// A 2x2 matrix over F_p, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub p: u8,
    pub m: [u8; 4],
}

impl Matrix2 {
    /// Entries may be negative; they are reduced mod `p`.
    pub fn new(p: u32, rows: [[i64; 2]; 2]) -> Self {
        let r = |x: i64| x.rem_euclid(p as i64) as u8;
        Matrix2 {
            p: p as u8,
            m: [r(rows[0][0]), r(rows[0][1]), r(rows[1][0]), r(rows[1][1])],
        }
    }

    pub fn identity(p: u32) -> Self {
        Matrix2::new(p, [[1, 0], [0, 1]])
    }

    pub fn det(&self) -> u8 {
        let p = self.p as u32;
        let [a, b, c, d] = self.m.map(|x| x as u32);
        ((a * d + p * p - b * c) % p) as u8
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        let p = self.p as u32;
        let [a, b, c, d] = self.m.map(|x| x as u32);
        let [e, f, g, h] = o.m.map(|x| x as u32);
        Matrix2 {
            p: self.p,
            m: [
                ((a * e + b * g) % p) as u8,
                ((a * f + b * h) % p) as u8,
                ((c * e + d * g) % p) as u8,
                ((c * f + d * h) % p) as u8,
            ],
        }
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.m[0], self.m[1], self.m[2], self.m[3])
    }
}

impl Group {
    /// Closure of permutations of `1..=degree` under composition.
    pub fn from_permutation_generators(
        id: impl Into<String>,
        degree: usize,
        gens: &[Permutation],
    ) -> Result<Group> {
        Ok(Self::permutation_group(id, degree, gens)?.0)
    }

    /// As [`Group::from_permutation_generators`], also returning the permutation
    /// for each element index.
    pub fn permutation_group(
        id: impl Into<String>,
        degree: usize,
        gens: &[Permutation],
    ) -> Result<(Group, Vec<Permutation>)> {
        if degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {degree} exceeds {MAX_DEGREE}"
            )));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
            let mut seen = vec![false; degree];
            for &i in &g.0 {
                if i as usize >= degree || seen[i as usize] {
                    return Err(Error::InvalidPermutation(format!("{:?} is not a bijection", g.0)));
                }
                seen[i as usize] = true;
            }
        }
        let names = default_names(gens.len());
        Group::from_closure(id, Permutation::identity(degree), gens, &names, |x, y| x.then(y))
    }

    /// Closure of invertible 2x2 matrices over F_p, p in {2, 3, 5, 7}.
    pub fn from_matrix_generators(
        id: impl Into<String>,
        p: u32,
        dim: usize,
        gens: &[Matrix2],
    ) -> Result<Group> {
        Ok(Self::matrix_group(id, p, dim, gens)?.0)
    }

    pub fn matrix_group(
        id: impl Into<String>,
        p: u32,
        dim: usize,
        gens: &[Matrix2],
    ) -> Result<(Group, Vec<Matrix2>)> {
        if dim != 2 || ![2, 3, 5, 7].contains(&p) {
            return Err(Error::UnsupportedField { p, dim });
        }
        for (index, g) in gens.iter().enumerate() {
            if g.p as u32 != p {
                return Err(Error::UnsupportedField { p: g.p as u32, dim });
            }
            if g.det() == 0 {
                return Err(Error::SingularGenerator { index });
            }
        }
        let names = default_names(gens.len());
        Group::from_closure(id, Matrix2::identity(p), gens, &names, |x, y| x.mul(y))
    }

    /// Cyclic group of order `m`; element `k` is `a^k`.
    pub fn cyclic(m: usize) -> Result<Group> {
        if m == 0 || m > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: m });
        }
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        let labels = (0..m)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        let gens = if m > 1 { vec![1] } else { vec![] };
        Group::from_table(format!("C{m}"), table, labels, gens)
    }

    /// `G x H` with `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
        let (ng, nh) = (g.order(), h.order());
        let n = ng * nh;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n });
        }
        let table = (0..n)
            .map(|x| {
                let (x1, x2) = (x / nh, x % nh);
                (0..n)
                    .map(|y| {
                        let (y1, y2) = (y / nh, y % nh);
                        g.mul(x1, y1) * nh + h.mul(x2, y2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|x| pair_label(g.label(x / nh), h.label(x % nh)))
            .collect();
        let mut gens: Vec<usize> = g.generators().iter().map(|&a| a * nh).collect();
        gens.extend(h.generators().iter().copied());
        Group::from_table(format!("{} x {}", g.id(), h.id()), table, labels, gens)
    }

    /// `N ⋊ C_m` where the generator `t` of `C_m` acts by `t^-1 x t = action(x)`.
    ///
    /// The element `x t^j` sits at index `x * m + j`.
    pub fn semidirect_product(n_group: &Group, m: usize, action: &[usize]) -> Result<Group> {
        let nn = n_group.order();
        let order = nn * m;
        if m == 0 || order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order });
        }
        check_automorphism(n_group, action)?;
        let action_order = automorphism_order(action);
        if !m.is_multiple_of(action_order) {
            return Err(Error::ActionOrderMismatch { action_order, m });
        }
        // powers[k][x] = action^k(x)
        let mut powers = vec![(0..nn).collect::<Vec<_>>()];
        for k in 1..m {
            let prev = &powers[k - 1];
            powers.push((0..nn).map(|x| action[prev[x]]).collect());
        }
        // (x t^i)(y t^j) = x (t^i y t^-i) t^(i+j) and t y t^-1 = action^-1(y)
        let table = (0..order)
            .map(|a| {
                let (x, i) = (a / m, a % m);
                (0..order)
                    .map(|b| {
                        let (y, j) = (b / m, b % m);
                        let shifted = powers[(m - i) % m][y];
                        n_group.mul(x, shifted) * m + (i + j) % m
                    })
                    .collect()
            })
            .collect();
        let labels = (0..order)
            .map(|a| {
                let (x, j) = (a / m, a % m);
                let t = match j {
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{j}"),
                };
                match (n_group.label(x), t.is_empty()) {
                    ("e", true) => "e".to_string(),
                    ("e", false) => t,
                    (l, _) => format!("{l}{t}"),
                }
            })
            .collect();
        let mut gens: Vec<usize> = n_group.generators().iter().map(|&x| x * m).collect();
        if m > 1 {
            gens.push(1);
        }
        Group::from_table(format!("{} : C{m}", n_group.id()), table, labels, gens)
    }

    /// Extends generator images to a map on all elements.
    ///
    /// `images[k]` is the image of `self.generators()[k]`. The result is
    /// checked to be a well-defined endomorphism.
    pub fn hom_from_generator_images(&self, images: &[usize]) -> Result<Vec<usize>> {
        let gens = self.generators();
        if images.len() != gens.len() {
            return Err(Error::NotAutomorphism(format!(
                "{} images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (k, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let img = self.mul(map[x], images[k]);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push(y);
                } else if map[y] != img {
                    return Err(Error::NotAutomorphism("images are inconsistent".into()));
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::NotAutomorphism("generators do not generate the group".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if map[self.mul(a, b)] != self.mul(map[a], map[b]) {
                    return Err(Error::NotAutomorphism("map is not multiplicative".into()));
                }
            }
        }
        Ok(map)
    }

    /// Quotient by a normal subgroup; cosets are represented by their least element.
    pub fn quotient(&self, normal: &super::SubgroupHandle) -> Result<Group> {
        let nmask = normal.mask();
        if !self.is_normal(nmask) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let k = reps.len();
            reps.push(g);
            for x in self.left_translate(nmask, g).iter() {
                coset_of[x] = k;
            }
        }
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect())
            .collect();
        let labels = reps.iter().map(|&r| self.label(r).to_string()).collect();
        let mut gens = Vec::new();
        for &g in self.generators() {
            let c = coset_of[g];
            if c != 0 && !gens.contains(&c) {
                gens.push(c);
            }
        }
        Group::from_table(format!("{}/N{}", self.id(), nmask.len()), table, labels, gens)
    }

    /// A subgroup as a group in its own right, with the map back to parent indices.
    ///
    /// Elements keep the parent's relative order, so index 0 is the identity.
    pub fn subgroup_as_group(&self, mask: SubsetMask) -> Result<(Group, Vec<usize>)> {
        if !self.is_subgroup(mask) {
            return Err(Error::NotASubgroup(format!("{} elements", mask.len())));
        }
        let elems = mask.to_vec();
        let mut pos = vec![usize::MAX; self.order()];
        for (k, &x) in elems.iter().enumerate() {
            pos[x] = k;
        }
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos[self.mul(a, b)]).collect())
            .collect();
        let labels = elems.iter().map(|&x| self.label(x).to_string()).collect();
        let gens = small_generating_set(self, mask).into_iter().map(|g| pos[g]).collect();
        let g = Group::from_table(format!("{}<{}>", self.id(), elems.len()), table, labels, gens)?;
        Ok((g, elems))
    }
}

fn pair_label(a: &str, b: &str) -> String {
    match (a, b) {
        ("e", "e") => "e".to_string(),
        _ => format!("({a},{b})"),
    }
}

fn check_automorphism(g: &Group, action: &[usize]) -> Result<()> {
    let n = g.order();
    if action.len() != n {
        return Err(Error::NotAutomorphism(format!("map has {} entries, expected {n}", action.len())));
    }
    let mut hit = SubsetMask::EMPTY;
    for &x in action {
        if x >= n {
            return Err(Error::NotAutomorphism(format!("image {x} out of range")));
        }
        hit.insert(x);
    }
    if hit.len() != n {
        return Err(Error::NotAutomorphism("map is not bijective".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if action[g.mul(a, b)] != g.mul(action[a], action[b]) {
                return Err(Error::NotAutomorphism(format!(
                    "f({a}*{b}) != f({a})*f({b})"
                )));
            }
        }
    }
    Ok(())
}

fn automorphism_order(action: &[usize]) -> usize {
    let mut cur: Vec<usize> = action.to_vec();
    let mut k = 1;
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        cur = cur.iter().map(|&x| action[x]).collect();
        k += 1;
    }
    k
}

/// Greedy generating set: add the least element not yet in the generated subgroup.
pub(crate) fn small_generating_set(g: &Group, mask: SubsetMask) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = SubsetMask::singleton(0);
    for x in mask.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = g.closure(SubsetMask::from_indices(gens.iter().copied()));
        }
    }
    gens
}
