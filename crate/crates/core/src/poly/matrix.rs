//! Square polynomial matrices, Jacobians and exact rank.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{PolyRing, Polynomial, Variable};

/// n×n matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Arc<PolyRing>, n: usize) -> Self {
        PolyMatrix { n, entries: vec![Polynomial::zero(ring); n * n] }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn diagonal(ring: &Arc<PolyRing>, d: &[BigRational]) -> Self {
        let mut m = Self::zeros(ring, d.len());
        for (i, c) in d.iter().enumerate() {
            m.set(i, i, Polynomial::constant(ring, c.clone()));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.n + j] = p;
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        let ring = self.entries.first().map(|p| p.ring().clone());
        let Some(ring) = ring else {
            return Ok(self.clone());
        };
        let mut out = Self::zeros(&ring, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = Polynomial::zero(&ring);
                for k in 0..self.n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(PolyMatrix { n: self.n, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => {
                    let p = self.get(i, j);
                    p.is_constant() && p.constant_term().is_one()
                }
                std::cmp::Ordering::Less => self.get(i, j).is_zero(),
                std::cmp::Ordering::Greater => true,
            })
        })
    }

    /// Rows and columns `idx`, in that order.
    pub fn principal_submatrix(&self, idx: &[usize]) -> PolyMatrix {
        let entries = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix { n: idx.len(), entries }
    }

    /// Laplace expansion along the first row; intended for n ≤ 6.
    pub fn determinant(&self, ring: &Arc<PolyRing>) -> Polynomial {
        if self.n == 0 {
            return Polynomial::one(ring);
        }
        let mut acc = Polynomial::zero(ring);
        for j in 0..self.n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = (0..self.n).filter(|&c| c != j).collect();
            let mut sub = PolyMatrix { n: self.n - 1, entries: Vec::with_capacity(rest.len().pow(2)) };
            for i in 1..self.n {
                for &c in &rest {
                    sub.entries.push(self.get(i, c).clone());
                }
            }
            let term = a * &sub.determinant(ring);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Inverse of a lower unitriangular matrix by forward substitution.
    pub fn unipotent_inverse(&self) -> Result<PolyMatrix> {
        if !self.is_lower_unitriangular() {
            return Err(Error::NotUnitriangular);
        }
        let mut inv = self.clone();
        for j in 0..self.n {
            for i in (j + 1)..self.n {
                // (m * inv)[i][j] = 0  =>  inv[i][j] = -sum_{j<=k<i} m[i][k] inv[k][j]
                let mut acc = self.get(i, j).clone();
                for k in (j + 1)..i {
                    acc = &acc + &(self.get(i, k) * inv.get(k, j));
                }
                inv.set(i, j, -&acc);
            }
        }
        Ok(inv)
    }
}

/// Rows are generators, columns follow the ring's variable order.
pub fn jacobian(generators: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    generators
        .iter()
        .map(|g| g.ring().vars().iter().map(|&v| g.partial_derivative(v)).collect())
        .collect()
}

pub fn rank_at(jac: &[Vec<Polynomial>], point: &HashMap<Variable, BigRational>) -> Result<usize> {
    let values = jac
        .iter()
        .map(|row| row.iter().map(|p| p.evaluate(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(rational_rank(&values))
}

/// Exact rank: denominators are cleared row by row, then Bareiss
/// fraction-free elimination runs over the integers.
pub fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            let factor = rows[r][col].clone();
            for c in 0..ncols {
                let v = (&pivot * &rows[r][c] - &factor * &rows[rank][c]) / &prev;
                rows[r][c] = v;
            }
        }
        prev = pivot.abs();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
