//! Multivariate division and Buchberger's algorithm.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::Polynomial;

/// Default bound on the number of ring variables accepted by [`buchberger`].
pub const DEFAULT_VARIABLE_LIMIT: usize = 15;

/// Full reduction of `p` modulo `basis`: no term of the result is divisible
/// by a leading monomial of `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let divisors: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut rest = p.clone();
    let mut rem = Polynomial::zero(p.ring());
    while let Some(m) = rest.leading_monomial().cloned() {
        let c = rest.leading_coefficient().cloned().expect("nonzero");
        let divisor = divisors
            .iter()
            .find(|g| g.leading_monomial().expect("nonzero").divides(&m));
        match divisor {
            Some(g) => {
                let lm = g.leading_monomial().expect("nonzero");
                let factor = -(c / g.leading_coefficient().expect("nonzero"));
                rest.add_scaled(&factor, &lm.quotient_of(&m), g);
            }
            None => {
                rest.terms.remove(&m);
                rem.terms.insert(m, c);
            }
        }
    }
    rem
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Polynomial::zero(f.ring());
    };
    let l = lf.lcm(lg);
    let a = f.leading_coefficient().expect("nonzero").recip();
    let b = g.leading_coefficient().expect("nonzero").recip();
    let left = f.mul_term(&a, &lf.quotient_of(&l));
    let right = g.mul_term(&b, &lg.quotient_of(&l));
    &left - &right
}

/// Interreduce a generating set: drop zeros, reduce each element by the
/// others until nothing changes, normalise to monic, sort descending by
/// leading monomial. The result generates the same ideal.
pub fn auto_reduce(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut cur: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cur.len() {
            let others: Vec<Polynomial> = cur
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = normal_form(&cur[i], &others);
            if r != cur[i] {
                changed = true;
                if r.is_zero() {
                    cur.remove(i);
                    continue;
                }
                cur[i] = r.monic();
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    cur.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    cur
}

/// Reduced Gröbner basis with the default variable guard.
pub fn buchberger(generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    buchberger_with_limit(generators, DEFAULT_VARIABLE_LIMIT)
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion.
/// Pairs are processed first-in first-out so the output is reproducible.
pub fn buchberger_with_limit(generators: &[Polynomial], limit: usize) -> Result<Vec<Polynomial>> {
    if let Some(p) = generators.first() {
        let vars = p.ring().nvars();
        if vars > limit {
            return Err(Error::GuardExceeded { vars, limit });
        }
    }
    let mut basis: Vec<Polynomial> = auto_reduce(generators);
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        let (li, lj) = (
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        );
        if li.coprime(lj) {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.push_back((i, k));
        }
    }
    Ok(reduce_basis(basis))
}

/// Minimalise and tail-reduce a Gröbner basis.
fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hl = h.leading_monomial().expect("nonzero");
            // equal leading monomials: keep the first occurrence
            l != k && hl.divides(lm) && (hl != lm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, p)| p.clone())
                .collect();
            normal_form(&minimal[k], &others).monic()
        })
        .collect();
    let mut out = reduced;
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    out
}

/// True when every leading monomial is square-free. For a Gröbner basis this
/// certifies that the ideal is radical.
pub fn is_squarefree_leading(basis: &[Polynomial]) -> bool {
    basis
        .iter()
        .filter_map(|g| g.leading_monomial())
        .all(|m| m.is_squarefree())
}

/// Ideal membership against a Gröbner basis.
pub fn ideal_contains(groebner_basis: &[Polynomial], p: &Polynomial) -> bool {
    normal_form(p, groebner_basis).is_zero()
}

/// Equality of two ideals by mutual normal-form reduction.
pub fn ideals_equal(a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let ga = buchberger(a)?;
    let gb = buchberger(b)?;
    Ok(a.iter().all(|p| ideal_contains(&gb, p)) && b.iter().all(|p| ideal_contains(&ga, p)))
}
