//! Classical root systems of types A, B, C and D realised in the standard
//! ambient coordinates.
//!
//! Roots are dense integer vectors. Positive roots occupy indices
//! `0..npos` ordered by height and then lexicographically (descending), and
//! the negative of positive root `k` sits at index `npos + k`.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            other => Err(Error::Parse(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// Index of a root inside its [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

/// Bit set of simple-root indices (0-based, Bourbaki order).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet(u32);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    pub fn full(rank: usize) -> Self {
        SimpleSet(((1u64 << rank) - 1) as u32)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = SimpleSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    /// Build from 1-based labels as they appear in `a1, a3`.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_indices(labels.iter().map(|l| l - 1))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(&self, other: &SimpleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |i| self.contains(*i))
    }

    /// 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Vec<i64>>,
    npos: usize,
    simple: Vec<RootId>,
    /// Coefficients of each root in the simple-root basis.
    simple_coords: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, RootId>,
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_positive_vector(v: &[i64]) -> bool {
    v.iter().find(|c| **c != 0).is_some_and(|c| *c > 0)
}

/// Solve `sum_k c_k * simple[k] = target` exactly; `None` when inconsistent or
/// non-integral.
fn solve_in_basis(simple: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let rows = target.len();
    let cols = simple.len();
    // augmented matrix [simple^T | target]
    let mut m: Vec<Vec<Rational64>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational64> =
                (0..cols).map(|c| Rational64::from(simple[c][r])).collect();
            row.push(Rational64::from(target[r]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational64::one() / m[r][c];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for k in 0..=cols {
                    let t = m[r][k] * f;
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut out = vec![0; cols];
    for (i, &c) in pivots.iter().enumerate() {
        let v = m[i][cols];
        if !v.is_integer() {
            return None;
        }
        out[c] = v.to_integer();
    }
    Some(out)
}

impl RootSystem {
    /// Construct the root system of the given type and Weyl-group rank.
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedRootSystem {
            cartan_type: cartan_type.to_string(),
            rank,
        };
        if rank == 0 || rank > 16 || (cartan_type == CartanType::D && rank < 2) {
            return Err(unsupported());
        }
        let (dim, mut positive, simple_vecs): (usize, Vec<Vec<i64>>, Vec<Vec<i64>>) =
            match cartan_type {
                CartanType::A => {
                    let n = rank + 1;
                    let mut pos = Vec::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            pos.push(add(&unit(n, i, 1), &unit(n, j, -1)));
                        }
                    }
                    let simple = (0..rank)
                        .map(|i| add(&unit(n, i, 1), &unit(n, i + 1, -1)))
                        .collect();
                    (n, pos, simple)
                }
                CartanType::B | CartanType::C | CartanType::D => {
                    let n = rank;
                    let mut pos = Vec::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            pos.push(add(&unit(n, i, 1), &unit(n, j, -1)));
                            pos.push(add(&unit(n, i, 1), &unit(n, j, 1)));
                        }
                    }
                    let mut simple: Vec<Vec<i64>> = (0..n - 1)
                        .map(|i| add(&unit(n, i, 1), &unit(n, i + 1, -1)))
                        .collect();
                    match cartan_type {
                        CartanType::B => {
                            pos.extend((0..n).map(|i| unit(n, i, 1)));
                            simple.push(unit(n, n - 1, 1));
                        }
                        CartanType::C => {
                            pos.extend((0..n).map(|i| unit(n, i, 2)));
                            simple.push(unit(n, n - 1, 2));
                        }
                        _ => {
                            simple.push(add(&unit(n, n - 2, 1), &unit(n, n - 1, 1)));
                        }
                    }
                    (n, pos, simple)
                }
            };
        debug_assert!(positive.iter().all(|v| is_positive_vector(v)));

        let mut coords = Vec::with_capacity(positive.len());
        for v in &positive {
            let c = solve_in_basis(&simple_vecs, v).ok_or_else(unsupported)?;
            debug_assert!(c.iter().all(|x| *x >= 0));
            coords.push(c);
        }
        // order positive roots by height, then lexicographically descending
        let mut order: Vec<usize> = (0..positive.len()).collect();
        order.sort_by(|&a, &b| {
            let ha: i64 = coords[a].iter().sum();
            let hb: i64 = coords[b].iter().sum();
            ha.cmp(&hb).then_with(|| positive[b].cmp(&positive[a]))
        });
        positive = order.iter().map(|&i| positive[i].clone()).collect();
        let pos_coords: Vec<Vec<i64>> = order.iter().map(|&i| coords[i].clone()).collect();

        let npos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let mut simple_coords = pos_coords.clone();
        simple_coords.extend(pos_coords.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let lookup: HashMap<Vec<i64>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), RootId(i)))
            .collect();
        let simple = simple_vecs.iter().map(|v| lookup[v]).collect();

        Ok(RootSystem {
            cartan_type,
            rank,
            ambient_dim: dim,
            roots,
            npos,
            simple,
            simple_coords,
            lookup,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn roots(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> {
        (0..self.npos).map(RootId)
    }

    pub fn negative_roots(&self) -> impl Iterator<Item = RootId> + '_ {
        (self.npos..self.roots.len()).map(RootId)
    }

    /// Simple roots in Bourbaki order.
    pub fn simple_roots(&self) -> &[RootId] {
        &self.simple
    }

    pub fn simple(&self, i: usize) -> RootId {
        self.simple[i]
    }

    pub fn coords(&self, r: RootId) -> &[i64] {
        &self.roots[r.0]
    }

    /// Coefficients of `r` in the basis of simple roots.
    pub fn simple_coords(&self, r: RootId) -> &[i64] {
        &self.simple_coords[r.0]
    }

    pub fn lookup(&self, v: &[i64]) -> Option<RootId> {
        self.lookup.get(v).copied()
    }

    pub fn is_positive(&self, r: RootId) -> bool {
        r.0 < self.npos
    }

    pub fn negate(&self, r: RootId) -> RootId {
        if r.0 < self.npos {
            RootId(r.0 + self.npos)
        } else {
            RootId(r.0 - self.npos)
        }
    }

    /// Index of `r` among the simple roots, if simple.
    pub fn simple_index(&self, r: RootId) -> Option<usize> {
        self.simple.iter().position(|s| *s == r)
    }

    /// True when `r` is a combination of the simple roots in `set`.
    pub fn in_span(&self, r: RootId, set: SimpleSet) -> bool {
        self.simple_coords(r)
            .iter()
            .enumerate()
            .all(|(i, c)| *c == 0 || set.contains(i))
    }

    pub fn height(&self, r: RootId) -> Result<i64> {
        if !self.is_positive(r) {
            return Err(Error::NotPositive(self.pretty(r)));
        }
        Ok(self.simple_coords(r).iter().sum())
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// `s_gamma(v) = v - 2(v,gamma)/(gamma,gamma) gamma` on an arbitrary
    /// lattice vector.
    pub fn reflect_vector(&self, gamma: RootId, v: &[i64]) -> Vec<i64> {
        let g = self.coords(gamma);
        let num = 2 * self.pairing(v, g);
        let den = self.pairing(g, g);
        debug_assert_eq!(num % den, 0, "non-crystallographic pairing");
        let k = num / den;
        v.iter().zip(g).map(|(x, y)| x - k * y).collect()
    }

    pub fn reflect(&self, gamma: RootId, beta: RootId) -> RootId {
        let v = self.reflect_vector(gamma, self.coords(beta));
        self.lookup(&v).expect("reflection of a root is a root")
    }

    pub fn root_add(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.lookup(&add(self.coords(a), self.coords(b)))
    }

    /// The positive root of maximal height.
    pub fn highest_root(&self) -> RootId {
        RootId(self.npos - 1)
    }

    /// Root as a combination of simple roots, e.g. `a1+a2+a3`, `2a1+a2`, `-a1-a2`.
    pub fn pretty(&self, r: RootId) -> String {
        let mut out = String::new();
        for (i, &c) in self.simple_coords(r).iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("a{}", i + 1));
        }
        out
    }

    /// Parse the output of [`RootSystem::pretty`] back into a root.
    pub fn parse_root(&self, s: &str) -> Result<RootId> {
        let bad = || Error::Parse(format!("not a root: {s:?}"));
        let mut coeffs = vec![0i64; self.rank];
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, r) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let digits = r.chars().take_while(|c| c.is_ascii_digit()).count();
            let mult: i64 = if digits == 0 { 1 } else { r[..digits].parse().map_err(|_| bad())? };
            let r = r[digits..].strip_prefix('a').ok_or_else(bad)?;
            let idx_len = r.chars().take_while(|c| c.is_ascii_digit()).count();
            let idx: usize = r[..idx_len].parse().map_err(|_| bad())?;
            if idx == 0 || idx > self.rank {
                return Err(bad());
            }
            coeffs[idx - 1] += sign * mult;
            rest = &r[idx_len..];
        }
        (0..self.roots.len())
            .find(|&i| self.simple_coords[i] == coeffs)
            .map(RootId)
            .ok_or_else(bad)
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.cartan_type {
            CartanType::A => fact(n + 1),
            CartanType::B | CartanType::C => (1u128 << n) * fact(n),
            CartanType::D => (1u128 << (n - 1)) * fact(n),
        }
    }
}
