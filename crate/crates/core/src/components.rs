//! Irreducible components of semisimple Hessenberg varieties for the
//! standard Hessenberg space, and Hessenberg–Schubert cell dimensions for
//! arbitrary Hessenberg spaces.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, RootId, RootSystem, SimpleSet};
use crate::weyl::{Side, WeylElement, WeylGroup};

/// A semisimple element of the Cartan subalgebra, given by the values of the
/// ambient coordinate functionals (the diagonal, in type A).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleElement {
    values: Vec<BigRational>,
    delta_m: SimpleSet,
}

impl SemisimpleElement {
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Simple roots vanishing on S.
    pub fn delta_m(&self) -> SimpleSet {
        self.delta_m
    }

    pub fn is_regular(&self) -> bool {
        self.delta_m.is_empty()
    }

    /// `gamma(S)` as an exact dot product.
    pub fn eval_root(&self, rs: &RootSystem, r: RootId) -> BigRational {
        rs.coords(r)
            .iter()
            .zip(&self.values)
            .map(|(c, v)| v * BigRational::from_integer((*c).into()))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

/// Validate `values` and compute `Δ_M`.
pub fn make_semisimple(rs: &RootSystem, values: Vec<BigRational>) -> Result<SemisimpleElement> {
    if values.len() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.ambient_dim(),
            got: values.len(),
        });
    }
    let mut s = SemisimpleElement {
        values,
        delta_m: SimpleSet::EMPTY,
    };
    s.delta_m = SimpleSet::from_indices(
        (0..rs.rank()).filter(|&i| s.eval_root(rs, rs.simple(i)).is_zero()),
    );
    for r in rs.positive_roots() {
        if s.eval_root(rs, r).is_zero() && !rs.in_span(r, s.delta_m) {
            let suggestion = (rs.cartan_type() == CartanType::A).then(|| grouping_order(&s.values));
            return Err(Error::NotStandardPosition {
                root: rs.pretty(r),
                suggestion,
            });
        }
    }
    Ok(s)
}

/// Coordinate order listing equal values contiguously, by first occurrence.
fn grouping_order(values: &[BigRational]) -> Vec<usize> {
    let mut order: Vec<usize> = Vec::with_capacity(values.len());
    let mut placed = vec![false; values.len()];
    for i in 0..values.len() {
        if placed[i] {
            continue;
        }
        for j in i..values.len() {
            if !placed[j] && values[j] == values[i] {
                placed[j] = true;
                order.push(j);
            }
        }
    }
    order
}

/// A Hessenberg space, recorded by its negative roots `Φ_H^-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergSpace {
    phi_h_minus: BTreeSet<RootId>,
}

/// A pair `(gamma, alpha)` with `gamma + alpha ∈ Φ^-` missing from `Φ_H^-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergViolation {
    pub gamma: RootId,
    pub alpha: RootId,
    pub sum: RootId,
}

impl HessenbergSpace {
    /// Validated construction.
    pub fn new(rs: &RootSystem, phi_h_minus: BTreeSet<RootId>) -> Result<Self> {
        if let Some(r) = phi_h_minus.iter().find(|r| rs.is_positive(**r)) {
            return Err(Error::InvalidHessenberg(format!("{} is not negative", rs.pretty(*r))));
        }
        if let Err(v) = validate_hessenberg(rs, &phi_h_minus) {
            let first = &v[0];
            return Err(Error::InvalidHessenberg(format!(
                "{} + {} = {} is missing ({} violations)",
                rs.pretty(first.gamma),
                rs.pretty(first.alpha),
                rs.pretty(first.sum),
                v.len()
            )));
        }
        Ok(HessenbergSpace { phi_h_minus })
    }

    pub fn negative_roots(&self) -> &BTreeSet<RootId> {
        &self.phi_h_minus
    }

    pub fn contains(&self, r: RootId) -> bool {
        self.phi_h_minus.contains(&r)
    }

    pub fn is_standard(&self, rs: &RootSystem) -> bool {
        *self == standard_hessenberg(rs)
    }
}

/// `Φ_H^- = Δ^-`.
pub fn standard_hessenberg(rs: &RootSystem) -> HessenbergSpace {
    HessenbergSpace {
        phi_h_minus: rs.simple_roots().iter().map(|&a| rs.negate(a)).collect(),
    }
}

/// Check closure of `Φ_H^-` under adding simple roots within `Φ^-`.
pub fn validate_hessenberg(
    rs: &RootSystem,
    phi_h_minus: &BTreeSet<RootId>,
) -> std::result::Result<(), Vec<HessenbergViolation>> {
    let mut violations = Vec::new();
    for &gamma in phi_h_minus {
        for &alpha in rs.simple_roots() {
            if let Some(sum) = rs.root_add(gamma, alpha) {
                if !rs.is_positive(sum) && !phi_h_minus.contains(&sum) {
                    violations.push(HessenbergViolation { gamma, alpha, sum });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Check a type A Hessenberg function `h` (1-based values) for matrix size `n`.
pub fn check_hessenberg_function(n: usize, h: &[usize]) -> Result<()> {
    if h.len() != n {
        return Err(Error::InvalidHessenbergFunction(format!(
            "expected {n} values, got {}",
            h.len()
        )));
    }
    for (j, &hj) in h.iter().enumerate() {
        if hj < j + 1 || hj > n {
            return Err(Error::InvalidHessenbergFunction(format!(
                "h({}) = {hj} must lie in [{}, {n}]",
                j + 1,
                j + 1
            )));
        }
        if j > 0 && hj < h[j - 1] {
            return Err(Error::InvalidHessenbergFunction("h must be weakly increasing".into()));
        }
    }
    Ok(())
}

/// The standard Hessenberg function `(2, 3, ..., n, n)`.
pub fn standard_hessenberg_function(n: usize) -> Vec<usize> {
    (1..=n).map(|j| (j + 1).min(n)).collect()
}

/// `Φ_H^- = {e_i - e_j : i > j, i <= h(j)}` in type `A_{n-1}`.
pub fn hessenberg_from_function(rs: &RootSystem, h: &[usize]) -> Result<HessenbergSpace> {
    if rs.cartan_type() != CartanType::A {
        return Err(Error::Precondition("Hessenberg functions describe type A only".into()));
    }
    let n = rs.ambient_dim();
    check_hessenberg_function(n, h)?;
    let mut set = BTreeSet::new();
    for j in 0..n {
        for i in j + 1..h[j] {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            set.insert(rs.lookup(&v).expect("type A root"));
        }
    }
    HessenbergSpace::new(rs, set)
}

/// Dimension of the Hessenberg–Schubert cell `C_w ∩ B(S, H)`.
pub fn cell_dimension(
    wg: &WeylGroup,
    w: &WeylElement,
    s: &SemisimpleElement,
    h: &HessenbergSpace,
) -> usize {
    let f = wg.parabolic_decompose(w, s.delta_m(), Side::Left);
    let rs = wg.root_system();
    // γ ∈ Φ_H^- with v(γ) > 0 is exactly N(v^{-1}) ∩ v(Φ_H^-)
    let moved = h
        .negative_roots()
        .iter()
        .filter(|&&g| rs.is_positive(wg.act(&f.coset_rep, g)))
        .count();
    f.parabolic.length() + moved
}

/// `O(v)`: elements `τ = x_v z ≠ v` of `^M W` with `z ∈ W_{L_v}` and `R(τ) = R(z)`.
pub fn o_set(wg: &WeylGroup, v: &WeylElement, s: &SemisimpleElement) -> Vec<WeylElement> {
    let r = wg.right_descents(v);
    let (xv, _) = wg.xv_wv_decompose(v);
    let mut out: Vec<WeylElement> = wg
        .subgroup(r)
        .into_iter()
        .filter_map(|z| {
            let tau = wg.mul(&xv, &z);
            let keep = tau != *v
                && wg.is_min_coset_rep(&tau, s.delta_m(), Side::Left)
                && wg.right_descents(&tau) == wg.right_descents(&z);
            keep.then_some(tau)
        })
        .collect();
    out.sort();
    out
}

/// Whether `C_τ ∩ B(S)` lies in the closure of `C_v ∩ B(S)`.
pub fn cell_closure_contains(
    wg: &WeylGroup,
    v: &WeylElement,
    tau: &WeylElement,
    s: &SemisimpleElement,
) -> Result<bool> {
    if v == tau {
        return Err(Error::Precondition("v and tau must be distinct".into()));
    }
    for x in [v, tau] {
        if !wg.is_min_coset_rep(x, s.delta_m(), Side::Left) {
            return Err(Error::Precondition(format!("{x} is not a minimal coset representative")));
        }
    }
    Ok(o_set(wg, v, s).contains(tau))
}

/// The index set `𝒮 = ^M W ∖ ∪ O(v)`, ordered by decreasing component
/// dimension and then canonical word.
pub fn component_reps(
    wg: &WeylGroup,
    s: &SemisimpleElement,
    h: &HessenbergSpace,
) -> Result<Vec<WeylElement>> {
    if !h.is_standard(wg.root_system()) {
        return Err(Error::UnsupportedHessenberg);
    }
    let reps = wg.min_coset_reps(s.delta_m(), Side::Left)?;
    let covered: HashSet<WeylElement> = reps.iter().flat_map(|v| o_set(wg, v, s)).collect();
    let mut out: Vec<WeylElement> = reps.into_iter().filter(|v| !covered.contains(v)).collect();
    out.sort_by(|a, b| {
        wg.right_descents(b)
            .len()
            .cmp(&wg.right_descents(a).len())
            .then_with(|| a.word().cmp(&b.word()))
    });
    Ok(out)
}

/// One irreducible component `X_v`.
#[derive(Debug, Clone)]
pub struct ComponentDatum {
    pub v: WeylElement,
    pub r_v: SimpleSet,
    pub x_v: WeylElement,
    pub w_v: WeylElement,
    pub o_v: Vec<WeylElement>,
    pub dimension: usize,
    /// `{y x_v z : y ∈ W_M, z ∈ W_{L_v}}` in group order.
    pub vertices: Vec<WeylElement>,
}

/// The intersection `V(v, τ)` of two components' fixed points.
#[derive(Debug, Clone)]
pub struct SingularPair {
    /// Indices into [`DecompositionReport::components`], `first < second`.
    pub first: usize,
    pub second: usize,
    pub vertices: Vec<WeylElement>,
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub delta_m: SimpleSet,
    pub components: Vec<ComponentDatum>,
    pub variety_dim: usize,
    /// Only pairs with nonempty intersection.
    pub singular_pairs: Vec<SingularPair>,
    pub all_singular: Vec<WeylElement>,
}

impl DecompositionReport {
    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_equidimensional(&self) -> bool {
        self.components.iter().all(|c| c.dimension == self.variety_dim)
    }

    /// Component indices whose vertex sets contain `w`.
    pub fn components_containing(&self, w: &WeylElement) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.vertices.contains(w))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Full decomposition of `B(S, H_Δ)`.
pub fn component_data(wg: &WeylGroup, s: &SemisimpleElement) -> Result<DecompositionReport> {
    let h = standard_hessenberg(wg.root_system());
    let reps = component_reps(wg, s, &h)?;
    let group = wg.enumerate()?;
    let position: HashMap<&WeylElement, usize> =
        group.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let wm = wg.subgroup(s.delta_m());
    let y0_len = wm.last().map_or(0, |y| y.length());

    let components: Vec<ComponentDatum> = reps
        .into_iter()
        .map(|v| {
            let r_v = wg.right_descents(&v);
            let (x_v, w_v) = wg.xv_wv_decompose(&v);
            let mut idx: BTreeSet<usize> = BTreeSet::new();
            for y in &wm {
                let yx = wg.mul(y, &x_v);
                for z in wg.subgroup(r_v) {
                    idx.insert(position[&wg.mul(&yx, &z)]);
                }
            }
            ComponentDatum {
                o_v: o_set(wg, &v, s),
                dimension: y0_len + r_v.len(),
                vertices: idx.into_iter().map(|i| group[i].clone()).collect(),
                v,
                r_v,
                x_v,
                w_v,
            }
        })
        .collect();

    let variety_dim = components.iter().map(|c| c.dimension).max().unwrap_or(0);
    let mut singular_pairs = Vec::new();
    let mut all: BTreeSet<usize> = BTreeSet::new();
    for i in 0..components.len() {
        let vi: HashSet<&WeylElement> = components[i].vertices.iter().collect();
        for j in i + 1..components.len() {
            let common: Vec<WeylElement> = components[j]
                .vertices
                .iter()
                .filter(|w| vi.contains(w))
                .cloned()
                .collect();
            if common.is_empty() {
                continue;
            }
            all.extend(common.iter().map(|w| position[w]));
            singular_pairs.push(SingularPair {
                first: i,
                second: j,
                vertices: common,
            });
        }
    }
    Ok(DecompositionReport {
        delta_m: s.delta_m(),
        components,
        variety_dim,
        singular_pairs,
        all_singular: all.into_iter().map(|i| group[i].clone()).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub v: String,
    pub r_v: Vec<usize>,
    pub x_v: String,
    pub w_v: String,
    pub o_v: Vec<String>,
    pub dimension: usize,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub first: usize,
    pub second: usize,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub cartan_type: String,
    pub rank: usize,
    pub s: Vec<String>,
    pub delta_m: Vec<usize>,
    pub variety_dim: usize,
    pub irreducible: bool,
    pub equidimensional: bool,
    pub components: Vec<ComponentJson>,
    pub singular_pairs: Vec<PairJson>,
    pub singular: Vec<String>,
}

pub fn words(ws: &[WeylElement]) -> Vec<String> {
    ws.iter().map(WeylElement::compact).collect()
}

/// Serialisable form of a decomposition.
pub fn report_json(wg: &WeylGroup, values: &[BigRational], r: &DecompositionReport) -> ReportJson {
    ReportJson {
        cartan_type: wg.root_system().cartan_type().to_string(),
        rank: wg.rank(),
        s: values.iter().map(|x| x.to_string()).collect(),
        delta_m: r.delta_m.labels(),
        variety_dim: r.variety_dim,
        irreducible: r.is_irreducible(),
        equidimensional: r.is_equidimensional(),
        components: r
            .components
            .iter()
            .map(|c| ComponentJson {
                v: c.v.compact(),
                r_v: c.r_v.labels(),
                x_v: c.x_v.compact(),
                w_v: c.w_v.compact(),
                o_v: words(&c.o_v),
                dimension: c.dimension,
                vertices: words(&c.vertices),
            })
            .collect(),
        singular_pairs: r
            .singular_pairs
            .iter()
            .map(|p| PairJson { first: p.first, second: p.second, vertices: words(&p.vertices) })
            .collect(),
        singular: words(&r.all_singular),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rationals;

    fn setup(n: usize, s: &str) -> (WeylGroup, SemisimpleElement) {
        let wg = WeylGroup::of_type(CartanType::A, n - 1).unwrap();
        let s = make_semisimple(wg.root_system(), parse_rationals(s).unwrap()).unwrap();
        (wg, s)
    }

    fn words(wg: &WeylGroup, ws: &[&str]) -> Vec<WeylElement> {
        ws.iter().map(|w| wg.parse_word(w).unwrap()).collect()
    }

    #[test]
    fn semisimple_levi() {
        let (_, s) = setup(4, "1,1,-1,-1");
        assert_eq!(s.delta_m(), SimpleSet::from_labels(&[1, 3]));
        let (_, s) = setup(4, "2,2,-1,-3");
        assert_eq!(s.delta_m(), SimpleSet::from_labels(&[1]));
        let (_, s) = setup(3, "3,1,0");
        assert!(s.is_regular());
    }

    #[test]
    fn not_standard_position() {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let err = make_semisimple(&rs, parse_rationals("1,-1,1,-1").unwrap()).unwrap_err();
        match err {
            Error::NotStandardPosition { root, suggestion } => {
                assert_eq!(root, "a1+a2");
                assert_eq!(suggestion, Some(vec![0, 2, 1, 3]));
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(
            make_semisimple(&rs, parse_rationals("1,2").unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn standard_space() {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let h = standard_hessenberg(&rs);
        let expected: BTreeSet<RootId> = (0..3).map(|i| rs.negate(rs.simple(i))).collect();
        assert_eq!(h.negative_roots(), &expected);
        assert!(validate_hessenberg(&rs, h.negative_roots()).is_ok());

        let c2 = RootSystem::new(CartanType::C, 2).unwrap();
        let h = standard_hessenberg(&c2);
        assert_eq!(h.negative_roots().len(), 2);
        assert!(validate_hessenberg(&c2, h.negative_roots()).is_ok());
    }

    #[test]
    fn validation_reports_violations() {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let theta = rs.lookup(&[1, 0, 0, -1]).unwrap();
        let mut set: BTreeSet<RootId> = standard_hessenberg(&rs).negative_roots().clone();
        set.insert(rs.negate(theta));
        let v = validate_hessenberg(&rs, &set).unwrap_err();
        let target = rs.lookup(&[0, -1, 0, 1]).unwrap();
        assert!(v
            .iter()
            .any(|x| x.gamma == rs.negate(theta) && x.alpha == rs.simple(0) && x.sum == target));
        assert!(HessenbergSpace::new(&rs, set).is_err());

        let full: BTreeSet<RootId> = rs.negative_roots().collect();
        assert!(validate_hessenberg(&rs, &full).is_ok());
    }

    #[test]
    fn hessenberg_functions() {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let h = hessenberg_from_function(&rs, &[2, 3, 4, 4]).unwrap();
        assert_eq!(h, standard_hessenberg(&rs));

        let h = hessenberg_from_function(&rs, &[3, 4, 4, 4]).unwrap();
        let theta = rs.highest_root();
        let expected: BTreeSet<RootId> =
            rs.negative_roots().filter(|r| *r != rs.negate(theta)).collect();
        assert_eq!(h.negative_roots(), &expected);

        let h = hessenberg_from_function(&rs, &[4, 4, 4, 4]).unwrap();
        assert_eq!(h.negative_roots().len(), 6);

        assert!(hessenberg_from_function(&rs, &[0, 3, 4, 4]).is_err());
        assert!(hessenberg_from_function(&rs, &[3, 2, 4, 4]).is_err());
        assert!(hessenberg_from_function(&rs, &[2, 3, 4]).is_err());
        assert_eq!(standard_hessenberg_function(4), [2, 3, 4, 4]);
    }

    #[test]
    fn cell_dimension_examples() {
        let (wg, s) = setup(3, "3,1,0");
        let h = standard_hessenberg(wg.root_system());
        let w0 = wg.enumerate().unwrap().pop().unwrap();
        assert_eq!(cell_dimension(&wg, &w0, &s, &h), 2);

        let (wg, s) = setup(4, "1,1,-1,-1");
        let h = standard_hessenberg(wg.root_system());
        let v = wg.parse_word("s2s3s1").unwrap();
        assert_eq!(cell_dimension(&wg, &v, &s, &h), 2);
        assert_eq!(cell_dimension(&wg, &wg.identity(), &s, &h), 0);
    }

    #[test]
    fn o_set_examples() {
        let (wg, s) = setup(4, "1,1,-1,-1");
        let v = wg.parse_word("s2s1s3").unwrap();
        assert_eq!(o_set(&wg, &v, &s), words(&wg, &["s2s1", "s2s3"]));
        assert!(o_set(&wg, &wg.identity(), &s).is_empty());

        let (wg, s) = setup(4, "2,2,-1,-3");
        let v = wg.parse_word("s2s3s1s2s1").unwrap();
        assert_eq!(o_set(&wg, &v, &s), words(&wg, &["s2s3s1s2"]));
    }

    #[test]
    fn closure_relation() {
        let (wg, s) = setup(4, "1,1,-1,-1");
        let v = wg.parse_word("s2s1s3").unwrap();
        assert!(cell_closure_contains(&wg, &v, &wg.parse_word("s2s1").unwrap(), &s).unwrap());
        assert!(!cell_closure_contains(&wg, &v, &wg.parse_word("s2s1s3s2").unwrap(), &s).unwrap());
        assert!(cell_closure_contains(&wg, &v, &v, &s).is_err());
    }

    #[test]
    fn component_rep_examples() {
        let (wg, s) = setup(4, "1,1,-1,-1");
        let h = standard_hessenberg(wg.root_system());
        let reps = component_reps(&wg, &s, &h).unwrap();
        assert_eq!(reps, words(&wg, &["s2s1s3", "s2", "s2s1s3s2"]));

        let (wg, s) = setup(4, "2,2,-1,-3");
        let reps: HashSet<WeylElement> = component_reps(&wg, &s, &h).unwrap().into_iter().collect();
        let expected: HashSet<WeylElement> =
            words(&wg, &["s2s3s1s2s1", "s2s3s2s1", "s2s3s1", "s2s3s2"]).into_iter().collect();
        assert_eq!(reps, expected);

        let c2 = WeylGroup::of_type(CartanType::C, 2).unwrap();
        let s = make_semisimple(c2.root_system(), parse_rationals("1,1").unwrap()).unwrap();
        assert_eq!(s.delta_m(), SimpleSet::from_labels(&[1]));
        let h = standard_hessenberg(c2.root_system());
        let reps: HashSet<WeylElement> = component_reps(&c2, &s, &h).unwrap().into_iter().collect();
        let expected: HashSet<WeylElement> = words(&c2, &["s2", "s2s1", "s2s1s2"]).into_iter().collect();
        assert_eq!(reps, expected);
    }

    #[test]
    fn non_standard_space_is_rejected() {
        let (wg, s) = setup(4, "1,1,-1,-1");
        let h = hessenberg_from_function(wg.root_system(), &[3, 4, 4, 4]).unwrap();
        assert_eq!(component_reps(&wg, &s, &h), Err(Error::UnsupportedHessenberg));
    }

    #[test]
    fn decomposition_2_2() {
        let (wg, s) = setup(4, "1,1,-1,-1");
        let report = component_data(&wg, &s).unwrap();
        let dims: Vec<usize> = report.components.iter().map(|c| c.dimension).collect();
        assert_eq!(dims, [4, 3, 3]);
        assert_eq!(report.variety_dim, 4);
        assert_eq!(report.all_singular.len(), 8);
        let wm = wg.subgroup(s.delta_m());
        let mut expected = HashSet::new();
        for v in ["s2s1s3", "s2"] {
            let v = wg.parse_word(v).unwrap();
            for y in &wm {
                expected.insert(wg.mul(y, &v));
            }
        }
        let got: HashSet<WeylElement> = report.all_singular.iter().cloned().collect();
        assert_eq!(got, expected);
        assert!(!report.is_equidimensional());
    }

    #[test]
    fn regular_and_zero() {
        let (wg, s) = setup(4, "4,3,2,1");
        let report = component_data(&wg, &s).unwrap();
        assert_eq!(report.components.len(), 1);
        assert_eq!(report.components[0].v, wg.enumerate().unwrap().pop().unwrap());
        assert_eq!(report.components[0].vertices.len(), 24);
        assert!(report.singular_pairs.is_empty());

        let (wg, s) = setup(4, "0,0,0,0");
        let report = component_data(&wg, &s).unwrap();
        assert_eq!(report.components.len(), 1);
        assert!(report.components[0].v.is_identity());
        assert_eq!(report.components[0].dimension, 6);
        assert_eq!(report.variety_dim, 6);
        assert!(report.all_singular.is_empty());
    }
}
