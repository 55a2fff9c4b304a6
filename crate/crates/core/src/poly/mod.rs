//! Exact sparse multivariate polynomials over the rationals in the
//! coordinates `x_ij` (`i > j`) of the opposite unipotent group.
//!
//! Monomials are compared lexicographically with respect to a fixed total
//! order on the variables: `x_ij ≻ x_kl` iff `i - j > k - l`, or `i - j = k - l`
//! and `i < k`. Variables further from the diagonal dominate, and ties go to
//! the smaller row index.

mod groebner;
mod matrix;

pub use groebner::{
    auto_reduce, buchberger, buchberger_with_limit, ideal_contains, ideals_equal,
    is_squarefree_leading, normal_form, s_polynomial, DEFAULT_VARIABLE_LIMIT,
};
pub use matrix::{jacobian, rank_at, rational_rank, PolyMatrix};

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coordinate `x_ij` with `i > j` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variable {
    pub i: u8,
    pub j: u8,
}

impl Variable {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i > j && j >= 1, "x{i}{j} needs i > j >= 1");
        Variable {
            i: i as u8,
            j: j as u8,
        }
    }

    fn distance(&self) -> u8 {
        self.i - self.j
    }
}

/// `a > b` means `a ≻ b` in the elimination order.
impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.distance()
            .cmp(&other.distance())
            .then_with(|| other.i.cmp(&self.i))
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 {
            write!(f, "x{}{}", self.i, self.j)
        } else {
            write!(f, "x_{}_{}", self.i, self.j)
        }
    }
}

impl std::str::FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable {s:?}"));
        let body = s.strip_prefix('x').ok_or_else(bad)?;
        let (i, j) = if let Some(rest) = body.strip_prefix('_') {
            let (a, b) = rest.split_once('_').ok_or_else(bad)?;
            (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
        } else {
            if body.len() != 2 || !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            ((body.as_bytes()[0] - b'0') as usize, (body.as_bytes()[1] - b'0') as usize)
        };
        if i <= j || j == 0 {
            return Err(bad());
        }
        Ok(Variable::new(i, j))
    }
}

/// The variable universe, stored from the largest variable down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<Variable>,
    index: HashMap<Variable, usize>,
}

impl PolyRing {
    pub fn new(mut vars: Vec<Variable>) -> Arc<Self> {
        vars.sort_by(|a, b| b.cmp(a));
        vars.dedup();
        let index = vars.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        Arc::new(PolyRing { vars, index })
    }

    /// All `x_ij`, `n >= i > j >= 1`.
    pub fn unipotent(n: usize) -> Arc<Self> {
        let mut vars = Vec::new();
        for i in 1..=n {
            for j in 1..i {
                vars.push(Variable::new(i, j));
            }
        }
        Self::new(vars)
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, v: Variable) -> Option<usize> {
        self.index.get(&v).copied()
    }
}

/// Exponent vector aligned with [`PolyRing::vars`]. The derived order is the
/// lexicographic monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|e| *e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|e| *e <= 1)
    }
}

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.vars == other.ring.vars && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: BigRational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn var(ring: &Arc<PolyRing>, v: Variable) -> Self {
        let k = ring.index_of(v).expect("variable in ring");
        let mut e = vec![0; ring.nvars()];
        e[k] = 1;
        Self::term(ring, BigRational::one(), Monomial(e))
    }

    pub fn term(ring: &Arc<PolyRing>, c: BigRational, m: Monomial) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// True when every term has degree zero.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<Variable> {
        (0..self.ring.nvars())
            .filter(|&k| self.terms.keys().any(|m| m.0[k] > 0))
            .map(|k| self.ring.vars[k])
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub(crate) fn add_scaled(&mut self, c: &BigRational, m: &Monomial, other: &Polynomial) {
        for (k, x) in &other.terms {
            self.add_term(k.mul(m), x * c);
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact evaluation; every occurring variable must be assigned.
    pub fn evaluate(&self, point: &HashMap<Variable, BigRational>) -> Result<BigRational> {
        let mut dense = Vec::with_capacity(self.ring.nvars());
        let used = self.variables();
        for v in &self.ring.vars {
            match point.get(v) {
                Some(x) => dense.push(x.clone()),
                None if used.contains(v) => return Err(Error::MissingAssignment(v.to_string())),
                None => dense.push(BigRational::zero()),
            }
        }
        Ok(self.evaluate_dense(&dense))
    }

    /// Evaluation at a point given in ring variable order.
    pub fn evaluate_dense(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[k];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn partial_derivative(&self, v: Variable) -> Self {
        let mut out = Self::zero(&self.ring);
        let Some(k) = self.ring.index_of(v) else {
            return out;
        };
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[k] -= 1;
            out.add_term(nm, c * rat(e as i64));
        }
        out
    }

    /// Replace each variable in `values` by the given polynomial.
    pub fn substitute(&self, values: &HashMap<Variable, Polynomial>) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.ring, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = self.ring.vars[k];
                let base = values.get(&v).cloned().unwrap_or_else(|| Self::var(&self.ring, v));
                t = &t * &base.pow(e as u32);
            }
            out = &out + &t;
        }
        out
    }

    /// Parse the grammar emitted by `Display`, e.g. `x21*x42 - x41`, `2*x21^2 + 1/3`.
    pub fn parse(ring: &Arc<PolyRing>, s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        if src.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let mut out = Self::zero(ring);
        let bytes = src.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(bad("expected '+' or '-'"));
            }
            let end = bytes[pos..]
                .iter()
                .position(|b| *b == b'+' || *b == b'-')
                .map_or(bytes.len(), |k| pos + k);
            let term = &src[pos..end];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = rat(sign);
            let mut mono = Monomial::one(ring.nvars());
            for factor in term.split('*') {
                if factor.starts_with('x') {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u16>().map_err(|_| bad("bad exponent"))?),
                        None => (factor, 1),
                    };
                    let v: Variable = name.parse()?;
                    let k = ring
                        .index_of(v)
                        .ok_or_else(|| bad(&format!("variable {v} not in ring")))?;
                    mono.0[k] += exp;
                } else {
                    coeff *= crate::rational::parse_rational(factor)?;
                }
            }
            out.add_term(mono, coeff);
            pos = end;
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            // factors read in (row, column) order: x21*x42, not x42*x21
            let mut vars: Vec<(Variable, u16)> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| (self.ring.vars[k], e))
                .collect();
            vars.sort_by_key(|(v, _)| (v.i, v.j));
            for (v, e) in vars {
                match e {
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring.vars, rhs.ring.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring.vars, rhs.ring.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&rat(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring.vars, rhs.ring.vars);
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &rhs.terms {
            out.add_scaled(c, m, self);
        }
        out
    }
}
