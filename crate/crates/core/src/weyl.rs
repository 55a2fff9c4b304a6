//! Weyl groups of classical type as signed permutations of the ambient
//! coordinates, with inversion sets, descents, parabolic cosets and the
//! `v = x_v * w_v` factorisation.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, RootId, RootSystem, SimpleSet};

/// Upper bound on the group order accepted by [`WeylGroup::enumerate`].
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// An element of the Weyl group.
///
/// `images[i] = ±(k + 1)` encodes `w(e_i) = ±e_k`. Equality and hashing use
/// the action only; the cached length and canonical word are derived data.
#[derive(Debug, Clone)]
pub struct WeylElement {
    images: Vec<i16>,
    length: usize,
    word: Vec<u8>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Length first, then canonical word lexicographically.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Canonical reduced word as 1-based simple-reflection labels.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|i| *i as usize + 1).collect()
    }

    /// Signed permutation images, `±(k+1)` for `e_i -> ±e_k`.
    pub fn images(&self) -> &[i16] {
        &self.images
    }

    /// Compact word, e.g. `s2s3s1`; the identity is `e`.
    pub fn compact(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    /// One-line notation `[w(1), ..., w(n)]` (meaningful in type A).
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x.unsigned_abs() as usize).collect()
    }

    pub fn apply_vector(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &img) in self.images.iter().enumerate() {
            let k = img.unsigned_abs() as usize - 1;
            out[k] += img.signum() as i64 * v[i];
        }
        out
    }
}

/// Canonical word joined with `*`, e.g. `s2*s3*s1`.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        f.write_str(&parts.join("*"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `^L W`: representatives of `W_L \ W`.
    Left,
    /// `W^L`: representatives of `W / W_L`.
    Right,
}

/// Factorisation of an element through a parabolic subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicFactors {
    /// The factor in `W_L`.
    pub parabolic: WeylElement,
    /// The minimal coset representative.
    pub coset_rep: WeylElement,
}

#[derive(Debug, Clone)]
pub struct ParabolicData {
    pub delta_l: SimpleSet,
    pub phi_l_plus: Vec<RootId>,
    pub w_l: WeylElement,
}

fn compose(u: &[i16], v: &[i16]) -> Vec<i16> {
    v.iter()
        .map(|&img| {
            let k = img.unsigned_abs() as usize - 1;
            img.signum() * u[k]
        })
        .collect()
}

/// The Weyl group of a root system.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    simple: Vec<Vec<i16>>,
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Self {
        let simple = rs
            .simple_roots()
            .iter()
            .map(|&a| Self::reflection_images(&rs, a))
            .collect();
        WeylGroup { rs, simple }
    }

    pub fn of_type(t: CartanType, rank: usize) -> Result<Self> {
        Ok(Self::new(RootSystem::new(t, rank)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> u128 {
        self.rs.weyl_order()
    }

    fn reflection_images(rs: &RootSystem, gamma: RootId) -> Vec<i16> {
        let n = rs.ambient_dim();
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                let img = rs.reflect_vector(gamma, &e);
                let k = img.iter().position(|x| *x != 0).expect("nonzero image");
                debug_assert_eq!(img[k].abs(), 1);
                (img[k] as i16) * (k as i16 + 1)
            })
            .collect()
    }

    fn is_negative_vector(v: &[i64]) -> bool {
        v.iter().find(|c| **c != 0).is_some_and(|c| *c < 0)
    }

    fn images_length(&self, images: &[i16]) -> usize {
        let probe = WeylElement {
            images: images.to_vec(),
            length: 0,
            word: Vec::new(),
        };
        self.rs
            .positive_roots()
            .filter(|&r| Self::is_negative_vector(&probe.apply_vector(self.rs.coords(r))))
            .count()
    }

    /// Build an element from raw images, computing its length and canonical word.
    fn element(&self, images: Vec<i16>) -> WeylElement {
        let length = self.images_length(&images);
        let mut stripped = Vec::with_capacity(length);
        let mut cur = images.clone();
        'outer: while stripped.len() < length {
            for (i, s) in self.simple.iter().enumerate() {
                let probe = WeylElement {
                    images: cur.clone(),
                    length: 0,
                    word: Vec::new(),
                };
                let img = probe.apply_vector(self.rs.coords(self.rs.simple(i)));
                if Self::is_negative_vector(&img) {
                    cur = compose(&cur, s);
                    stripped.push(i as u8);
                    continue 'outer;
                }
            }
            unreachable!("nontrivial element without a right descent");
        }
        stripped.reverse();
        WeylElement {
            images,
            length,
            word: stripped,
        }
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rs.ambient_dim() as i16;
        WeylElement {
            images: (1..=n).collect(),
            length: 0,
            word: Vec::new(),
        }
    }

    /// `s_i` for a 0-based simple index.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.element(self.simple[i].clone())
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element(compose(&a.images, &b.images))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut inv = vec![0i16; w.images.len()];
        for (i, &img) in w.images.iter().enumerate() {
            let k = img.unsigned_abs() as usize - 1;
            inv[k] = img.signum() * (i as i16 + 1);
        }
        self.element(inv)
    }

    /// Product `s_{i1} s_{i2} ...` of 1-based labels (need not be reduced).
    pub fn from_word(&self, labels: &[usize]) -> Result<WeylElement> {
        let mut cur: Vec<i16> = self.identity().images;
        for &l in labels {
            if l == 0 || l > self.rank() {
                return Err(Error::InvalidWord(format!("s{l}")));
            }
            cur = compose(&cur, &self.simple[l - 1]);
        }
        Ok(self.element(cur))
    }

    /// Parse `e`, `s2s3s1`, `s2*s3*s1` or `s2 s3 s1`.
    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '·')
            .collect();
        if t.is_empty() || t == "e" || t == "1" {
            return Ok(self.identity());
        }
        let mut labels = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            rest = rest
                .strip_prefix('s')
                .ok_or_else(|| Error::InvalidWord(s.to_string()))?;
            let len = rest.chars().take_while(|c| c.is_ascii_digit()).count();
            if len == 0 {
                return Err(Error::InvalidWord(s.to_string()));
            }
            labels.push(rest[..len].parse().map_err(|_| Error::InvalidWord(s.to_string()))?);
            rest = &rest[len..];
        }
        self.from_word(&labels).map_err(|_| Error::InvalidWord(s.to_string()))
    }

    /// Element from a one-line permutation `[w(1), ..., w(n)]` (type A).
    pub fn from_one_line(&self, perm: &[usize]) -> Result<WeylElement> {
        let n = self.rs.ambient_dim();
        let mut seen = vec![false; n];
        if perm.len() != n || self.rs.cartan_type() != CartanType::A {
            return Err(Error::Precondition("one-line notation needs a type A permutation".into()));
        }
        for &p in perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
            }
            seen[p - 1] = true;
        }
        Ok(self.element(perm.iter().map(|p| *p as i16).collect()))
    }

    pub fn act(&self, w: &WeylElement, r: RootId) -> RootId {
        self.rs
            .lookup(&w.apply_vector(self.rs.coords(r)))
            .expect("Weyl group permutes the roots")
    }

    /// `N(w) = {gamma > 0 : w(gamma) < 0}`.
    pub fn inversions(&self, w: &WeylElement) -> Vec<RootId> {
        self.rs
            .positive_roots()
            .filter(|&r| !self.rs.is_positive(self.act(w, r)))
            .collect()
    }

    /// `R(w) = N(w) ∩ Δ`.
    pub fn right_descents(&self, w: &WeylElement) -> SimpleSet {
        SimpleSet::from_indices((0..self.rank()).filter(|&i| {
            !self.rs.is_positive(self.act(w, self.rs.simple(i)))
        }))
    }

    pub fn left_descents(&self, w: &WeylElement) -> SimpleSet {
        self.right_descents(&self.inverse(w))
    }

    pub fn reflection_for_root(&self, gamma: RootId) -> WeylElement {
        self.element(Self::reflection_images(&self.rs, gamma))
    }

    /// All elements, sorted by length then canonical word.
    pub fn enumerate(&self) -> Result<Vec<WeylElement>> {
        let order = self.order();
        if order > ENUMERATION_LIMIT {
            return Err(Error::GroupTooLarge {
                order,
                limit: ENUMERATION_LIMIT,
            });
        }
        let all = SimpleSet::full(self.rank());
        Ok(self.subgroup(all))
    }

    /// Elements of the parabolic subgroup `W_L`, sorted.
    pub fn subgroup(&self, delta_l: SimpleSet) -> Vec<WeylElement> {
        let gens: Vec<usize> = delta_l.iter().filter(|i| *i < self.rank()).collect();
        let start = self.identity().images;
        let mut seen: HashSet<Vec<i16>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for &i in &gens {
                let next = compose(&cur, &self.simple[i]);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().map(|im| self.element(im)).collect();
        out.sort();
        out
    }

    /// `Φ_L^+`: positive roots in the span of `delta_l`.
    pub fn parabolic_positive_roots(&self, delta_l: SimpleSet) -> Vec<RootId> {
        self.rs
            .positive_roots()
            .filter(|&r| self.rs.in_span(r, delta_l))
            .collect()
    }

    pub fn parabolic_data(&self, delta_l: SimpleSet) -> ParabolicData {
        ParabolicData {
            delta_l,
            phi_l_plus: self.parabolic_positive_roots(delta_l),
            w_l: self.longest_element(delta_l),
        }
    }

    /// True when `w` is a minimal representative on the given side.
    pub fn is_min_coset_rep(&self, w: &WeylElement, delta_l: SimpleSet, side: Side) -> bool {
        let descents = match side {
            Side::Left => self.left_descents(w),
            Side::Right => self.right_descents(w),
        };
        // a descent-free element has no inversions inside Φ_L
        (0..self.rank()).all(|i| !(delta_l.contains(i) && descents.contains(i)))
    }

    /// `^L W` (left) or `W^L` (right).
    pub fn min_coset_reps(&self, delta_l: SimpleSet, side: Side) -> Result<Vec<WeylElement>> {
        Ok(self
            .enumerate()?
            .into_iter()
            .filter(|w| self.is_min_coset_rep(w, delta_l, side))
            .collect())
    }

    /// Left: `w = y v` with `y ∈ W_L`, `v ∈ ^L W`. Right: `w = v' y'` with
    /// `v' ∈ W^L`, `y' ∈ W_L`. Lengths add in both cases.
    pub fn parabolic_decompose(
        &self,
        w: &WeylElement,
        delta_l: SimpleSet,
        side: Side,
    ) -> ParabolicFactors {
        let mut cur = w.clone();
        let mut par = self.identity();
        loop {
            let descents = match side {
                Side::Left => self.left_descents(&cur),
                Side::Right => self.right_descents(&cur),
            };
            let Some(i) = (0..self.rank()).find(|&i| delta_l.contains(i) && descents.contains(i))
            else {
                break;
            };
            let s = self.simple_reflection(i);
            match side {
                Side::Left => {
                    cur = self.mul(&s, &cur);
                    par = self.mul(&par, &s);
                }
                Side::Right => {
                    cur = self.mul(&cur, &s);
                    par = self.mul(&s, &par);
                }
            }
        }
        ParabolicFactors {
            parabolic: par,
            coset_rep: cur,
        }
    }

    /// The longest element of `W_L`.
    pub fn longest_element(&self, delta_l: SimpleSet) -> WeylElement {
        let mut cur = self.identity();
        loop {
            let descents = self.right_descents(&cur);
            let Some(i) = (0..self.rank()).find(|&i| delta_l.contains(i) && !descents.contains(i))
            else {
                return cur;
            };
            cur = self.mul(&cur, &self.simple_reflection(i));
        }
    }

    /// `v = x_v w_v` with `w_v` the longest element of `W_{R(v)}` and
    /// `x_v ∈ W^{R(v)}`. Returns `(x_v, w_v)`.
    pub fn xv_wv_decompose(&self, v: &WeylElement) -> (WeylElement, WeylElement) {
        let r = self.right_descents(v);
        let wv = self.longest_element(r);
        let xv = self.mul(v, &self.inverse(&wv));
        (xv, wv)
    }
}
