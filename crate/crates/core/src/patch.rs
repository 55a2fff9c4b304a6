//! Patch ideals of type A semisimple Hessenberg varieties at torus-fixed
//! points, tangent dimensions, radicality certificates and singular scans.
//!
//! Coordinates near `wB` are `w u B` with `u` generic lower unitriangular;
//! the point lies in the variety iff `A = u⁻¹ (P_w⁻¹ D P_w) u` has
//! `A[i][j] = 0` for `i > h(j)`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::components::{
    cell_dimension, check_hessenberg_function, component_data, hessenberg_from_function,
    make_semisimple, standard_hessenberg_function,
};
use crate::error::{Error, Result};
use crate::poly::{
    auto_reduce, buchberger, is_squarefree_leading, jacobian, rank_at, PolyMatrix, PolyRing,
    Polynomial, Variable,
};
use crate::root_system::CartanType;
use crate::weyl::{WeylElement, WeylGroup};

/// Number of random points behind [`FixedPointReport::ambient_generic_rank`].
pub const DIAGNOSTIC_SAMPLES: usize = 5;

/// Lower unitriangular `u` with `x_ij` at `(i, j)`.
pub fn generic_unipotent(n: usize) -> PolyMatrix {
    let ring = PolyRing::unipotent(n);
    let mut u = PolyMatrix::identity(&ring, n);
    for i in 1..n {
        for j in 0..i {
            u.set(i, j, Polynomial::var(&ring, Variable::new(i + 1, j + 1)));
        }
    }
    u
}

/// Type A group acting on `n` coordinates.
pub fn type_a_group(n: usize) -> Result<WeylGroup> {
    if n < 2 {
        return Err(Error::Precondition("matrix size must be at least 2".into()));
    }
    WeylGroup::of_type(CartanType::A, n - 1)
}

/// `u⁻¹ · (P_w⁻¹ D P_w) · u`, where `P_w` has a 1 at `(w(i), i)`, so the
/// middle factor is `diag(s_{w(1)}, ..., s_{w(n)})`.
pub fn conjugated_matrix(w: &WeylElement, s_values: &[BigRational]) -> Result<PolyMatrix> {
    let n = s_values.len();
    if w.images().len() != n {
        return Err(Error::DimensionMismatch { expected: w.images().len(), got: n });
    }
    let u = generic_unipotent(n);
    let ring = u.get(0, 0).ring().clone();
    let d: Vec<BigRational> = w.one_line().iter().map(|&k| s_values[k - 1].clone()).collect();
    let middle = PolyMatrix::diagonal(&ring, &d);
    u.unipotent_inverse()?.mul(&middle)?.mul(&u)
}

#[derive(Debug, Clone)]
pub struct PatchIdeal {
    pub n: usize,
    pub w: WeylElement,
    pub h: Vec<usize>,
    pub s_values: Vec<BigRational>,
    pub ring: Arc<PolyRing>,
    /// `A[i][j]` for `i > h(j)`, column by column; zero entries are kept.
    pub generators: Vec<Polynomial>,
    /// Positions `(i, j)` (1-based) parallel to `generators`.
    pub positions: Vec<(usize, usize)>,
    pub reduced_generators: Vec<Polynomial>,
}

pub fn patch_ideal(w: &WeylElement, s_values: &[BigRational], h: &[usize]) -> Result<PatchIdeal> {
    let n = s_values.len();
    check_hessenberg_function(n, h)?;
    let a = conjugated_matrix(w, s_values)?;
    let ring = a.get(0, 0).ring().clone();
    let mut generators = Vec::new();
    let mut positions = Vec::new();
    for j in 0..n {
        for i in h[j]..n {
            generators.push(a.get(i, j).clone());
            positions.push((i + 1, j + 1));
        }
    }
    let reduced_generators = auto_reduce(&generators);
    Ok(PatchIdeal {
        n,
        w: w.clone(),
        h: h.to_vec(),
        s_values: s_values.to_vec(),
        ring,
        generators,
        positions,
        reduced_generators,
    })
}

impl PatchIdeal {
    pub fn origin(&self) -> HashMap<Variable, BigRational> {
        self.ring.vars().iter().map(|&v| (v, BigRational::zero())).collect()
    }

    pub fn origin_rank(&self) -> usize {
        rank_at(&jacobian(&self.generators), &self.origin()).expect("origin covers every variable")
    }

    /// `n(n-1)/2` minus the Jacobian rank at the origin.
    pub fn tangent_dimension(&self) -> usize {
        self.ring.nvars() - self.origin_rank()
    }

    /// Reduced Gröbner basis and whether its leading monomials are
    /// square-free. `false` is inconclusive.
    pub fn groebner_certificate(&self) -> Result<(Vec<Polynomial>, bool)> {
        let gb = buchberger(&self.generators)?;
        let certified = is_squarefree_leading(&gb);
        Ok((gb, certified))
    }

    /// Largest Jacobian rank over seeded random integer points in `[-10, 10]`.
    pub fn ambient_generic_rank(&self, seed: u64) -> usize {
        let jac = jacobian(&self.generators);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..DIAGNOSTIC_SAMPLES)
            .map(|_| {
                let pt: HashMap<Variable, BigRational> = self
                    .ring
                    .vars()
                    .iter()
                    .map(|&v| (v, BigRational::from_integer(rng.gen_range(-10i64..=10).into())))
                    .collect();
                rank_at(&jac, &pt).expect("point covers every variable")
            })
            .max()
            .unwrap_or(0)
    }

    pub fn summary(&self, seed: u64) -> Result<PatchSummary> {
        let (gb, radical_certified) = self.groebner_certificate()?;
        let strings = |v: &[Polynomial]| v.iter().map(|g| g.to_string()).collect::<Vec<_>>();
        Ok(PatchSummary {
            n: self.n,
            w: self.w.compact(),
            h: self.h.clone(),
            s: self.s_values.iter().map(|x| x.to_string()).collect(),
            generators: strings(&self.generators),
            reduced_generators: strings(&self.reduced_generators),
            groebner_basis: strings(&gb),
            radical_certified,
            origin_rank: self.origin_rank(),
            tangent_dim: self.tangent_dimension(),
            ambient_generic_rank: self.ambient_generic_rank(seed),
        })
    }
}

/// Printable summary of a patch ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchSummary {
    pub n: usize,
    pub w: String,
    pub h: Vec<usize>,
    pub s: Vec<String>,
    pub generators: Vec<String>,
    pub reduced_generators: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub radical_certified: bool,
    pub origin_rank: usize,
    pub tangent_dim: usize,
    pub ambient_generic_rank: usize,
}

/// How the local dimension at each fixed point is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum LocalDimSource {
    /// Largest component through the point; standard `h` only.
    Combinatorial,
    /// A dimension known to the caller.
    Supplied(usize),
    /// Largest Hessenberg–Schubert cell; only meaningful when the variety is
    /// pure-dimensional.
    MaxCell,
    /// No local dimension: verdicts are `unknown`.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Smooth,
    Singular,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointReport {
    pub word: String,
    pub tangent_dim: usize,
    pub local_dim: Option<usize>,
    pub verdict: Verdict,
    /// Tangent dimension against local dimension alone.
    pub jacobian_verdict: Verdict,
    /// Whether the point lies on two or more components; combinatorial
    /// source only.
    pub multi_component: Option<bool>,
    pub radical_certified: bool,
    pub origin_rank: usize,
    pub ambient_generic_rank: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub n: usize,
    pub h: Vec<usize>,
    pub s: Vec<String>,
    pub local_dim_source: LocalDimSource,
    /// Set for sources whose verdicts rest on an unchecked assumption.
    pub caveat: Option<String>,
    pub points: Vec<FixedPointReport>,
}

impl ScanReport {
    pub fn singular_words(&self) -> Vec<String> {
        self.points
            .iter()
            .filter(|p| p.verdict == Verdict::Singular)
            .map(|p| p.word.clone())
            .collect()
    }
}

fn compare(word: &str, tangent: usize, local: Option<usize>) -> Result<Verdict> {
    match local {
        None => Ok(Verdict::Unknown),
        Some(l) if tangent < l => Err(Error::Inconsistency { word: word.to_string(), tangent, local: l }),
        Some(l) if tangent == l => Ok(Verdict::Smooth),
        Some(_) => Ok(Verdict::Singular),
    }
}

/// Analyse every fixed point. Work runs in parallel; reports come back in
/// group order.
pub fn singular_scan(
    s_values: &[BigRational],
    h: &[usize],
    source: LocalDimSource,
    seed: u64,
) -> Result<ScanReport> {
    let n = s_values.len();
    check_hessenberg_function(n, h)?;
    let wg = type_a_group(n)?;
    let rs = wg.root_system();
    let group = wg.enumerate()?;

    // (local dim, multi-component) per element, in group order
    let local: Vec<(Option<usize>, Option<bool>)> = match source {
        LocalDimSource::Combinatorial => {
            if h != standard_hessenberg_function(n) {
                return Err(Error::UnsupportedHessenberg);
            }
            let s = make_semisimple(rs, s_values.to_vec())?;
            let report = component_data(&wg, &s)?;
            group
                .iter()
                .map(|w| {
                    let ids = report.components_containing(w);
                    let dim = ids.iter().map(|&i| report.components[i].dimension).max();
                    (dim, Some(ids.len() >= 2))
                })
                .collect()
        }
        LocalDimSource::Supplied(d) => vec![(Some(d), None); group.len()],
        LocalDimSource::MaxCell => {
            let s = make_semisimple(rs, s_values.to_vec())?;
            let hs = hessenberg_from_function(rs, h)?;
            let d = group.iter().map(|w| cell_dimension(&wg, w, &s, &hs)).max();
            vec![(d, None); group.len()]
        }
        LocalDimSource::Unknown => vec![(None, None); group.len()],
    };

    let points = group
        .par_iter()
        .zip(local.par_iter())
        .map(|(w, &(local_dim, multi))| {
            let ideal = patch_ideal(w, s_values, h)?;
            let word = w.compact();
            let origin_rank = ideal.origin_rank();
            let tangent_dim = ideal.ring.nvars() - origin_rank;
            let (_, radical_certified) = ideal.groebner_certificate()?;
            let jacobian_verdict = compare(&word, tangent_dim, local_dim)?;
            let verdict = if multi == Some(true) { Verdict::Singular } else { jacobian_verdict };
            Ok(FixedPointReport {
                tangent_dim,
                local_dim,
                verdict,
                jacobian_verdict,
                multi_component: multi,
                radical_certified,
                origin_rank,
                ambient_generic_rank: ideal.ambient_generic_rank(seed),
                generators: ideal.reduced_generators.iter().map(|g| g.to_string()).collect(),
                word,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let caveat = match source {
        LocalDimSource::MaxCell => Some(
            "local dimension is the largest cell dimension; verdicts assume the variety is pure-dimensional"
                .to_string(),
        ),
        LocalDimSource::Unknown => Some("no local dimension available; verdicts are unknown".to_string()),
        _ => None,
    };
    Ok(ScanReport {
        n,
        h: h.to_vec(),
        s: s_values.iter().map(|x| x.to_string()).collect(),
        local_dim_source: source,
        caveat,
        points,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub word: String,
    pub jacobian_singular: bool,
    pub combinatorial_singular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub s: Vec<String>,
    pub checked: usize,
    pub agree: bool,
    pub all_radical_certified: bool,
    pub disagreements: Vec<Disagreement>,
}

/// Compare the Jacobian criterion at every fixed point of `B(S, H_Δ)` with
/// the singular locus predicted from the component decomposition.
pub fn verify_against_combinatorics(s_values: &[BigRational]) -> Result<VerifyReport> {
    let n = s_values.len();
    let wg = type_a_group(n)?;
    let s = make_semisimple(wg.root_system(), s_values.to_vec())?;
    let report = component_data(&wg, &s)?;
    let predicted: BTreeSet<String> = report.all_singular.iter().map(|w| w.compact()).collect();
    let scan = singular_scan(s_values, &standard_hessenberg_function(n), LocalDimSource::Combinatorial, 0)?;
    let disagreements: Vec<Disagreement> = scan
        .points
        .iter()
        .filter_map(|p| {
            let jac = p.jacobian_verdict == Verdict::Singular;
            let comb = predicted.contains(&p.word);
            (jac != comb).then(|| Disagreement {
                word: p.word.clone(),
                jacobian_singular: jac,
                combinatorial_singular: comb,
            })
        })
        .collect();
    Ok(VerifyReport {
        n,
        s: scan.s.clone(),
        checked: scan.points.len(),
        agree: disagreements.is_empty(),
        all_radical_certified: scan.points.iter().all(|p| p.radical_certified),
        disagreements,
    })
}
