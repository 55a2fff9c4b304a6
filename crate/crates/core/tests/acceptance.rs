//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Budgets are wall-clock limits in seconds.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use hessenberg::components::{
    cell_dimension, component_data, make_semisimple, o_set, standard_hessenberg,
    standard_hessenberg_function, SemisimpleElement,
};
use hessenberg::gkm::{build_gkm, GkmGraph};
use hessenberg::patch::{
    patch_ideal, singular_scan, type_a_group, verify_against_combinatorics, LocalDimSource,
    Verdict,
};
use hessenberg::poly::{
    buchberger, ideals_equal, normal_form, s_polynomial, Monomial, PolyRing, Polynomial, Variable,
};
use hessenberg::rational::parse_rationals;
use hessenberg::root_system::{CartanType, RootId, SimpleSet};
use hessenberg::table::{builtin_specs, compute_row, Cell};
use hessenberg::weyl::{Side, WeylElement, WeylGroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

macro_rules! ensure_eq {
    ($a:expr, $b:expr, $what:expr) => {{
        let (a, b) = (&$a, &$b);
        if a != b {
            return Err(format!("{}: got {:?}, expected {:?}", $what, a, b));
        }
    }};
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn group(t: CartanType, rank: usize) -> Result<WeylGroup, String> {
    WeylGroup::of_type(t, rank).map_err(err)
}

fn semisimple(wg: &WeylGroup, s: &str) -> Result<SemisimpleElement, String> {
    make_semisimple(wg.root_system(), parse_rationals(s).map_err(err)?).map_err(err)
}

fn el(wg: &WeylGroup, word: &str) -> Result<WeylElement, String> {
    wg.parse_word(word).map_err(err)
}

fn set(wg: &WeylGroup, words: &[&str]) -> Result<BTreeSet<WeylElement>, String> {
    words.iter().map(|w| el(wg, w)).collect()
}

fn show(s: &BTreeSet<WeylElement>) -> Vec<String> {
    s.iter().map(|w| w.compact()).collect()
}

fn edge_set(g: &GkmGraph) -> BTreeSet<(WeylElement, RootId, WeylElement)> {
    g.edges.iter().map(|e| (e.src.clone(), e.label, e.dst.clone())).collect()
}

fn expected_edges(
    wg: &WeylGroup,
    list: &[(&str, &str, &str)],
) -> Result<BTreeSet<(WeylElement, RootId, WeylElement)>, String> {
    list.iter()
        .map(|(src, label, dst)| {
            Ok((el(wg, src)?, wg.root_system().parse_root(label).map_err(err)?, el(wg, dst)?))
        })
        .collect()
}

fn compare_graph(wg: &WeylGroup, s: &str, list: &[(&str, &str, &str)]) -> Check {
    let s = semisimple(wg, s)?;
    let g = build_gkm(wg, &s).map_err(err)?;
    let got = edge_set(&g);
    let want = expected_edges(wg, list)?;
    ensure_eq!(g.edges.len(), list.len(), "edge count");
    if got != want {
        let rs = wg.root_system();
        let fmt = |e: &(WeylElement, RootId, WeylElement)| {
            format!("{}-{}->{}", e.0.compact(), rs.pretty(e.1), e.2.compact())
        };
        let extra: Vec<String> = got.difference(&want).map(fmt).collect();
        let missing: Vec<String> = want.difference(&got).map(fmt).collect();
        return Err(format!("unexpected edges {extra:?}, missing {missing:?}"));
    }
    ensure_eq!(g.vertices.len() as u128, wg.order(), "vertex count");
    Ok(())
}

fn c1_example_table() -> Check {
    let wg = group(CartanType::A, 3)?;
    let s = semisimple(&wg, "1,1,-1,-1")?;
    let reps = wg.min_coset_reps(s.delta_m(), Side::Left).map_err(err)?;
    ensure_eq!(reps.len(), 6, "|^M W|");
    let table: [(&str, &[usize], &str, &str); 6] = [
        ("s2s3s1s2", &[2], "s2s3s1", "s2"),
        ("s2s3s1", &[1, 3], "s2", "s3s1"),
        ("s2s1", &[1], "s2", "s1"),
        ("s2s3", &[3], "s2", "s3"),
        ("s2", &[2], "e", "s2"),
        ("e", &[], "e", "e"),
    ];
    let mut listed = BTreeSet::new();
    for (v, r, x, w) in table {
        let v = el(&wg, v)?;
        ensure!(reps.contains(&v), "{} missing from ^M W", v.compact());
        ensure_eq!(wg.right_descents(&v).labels(), r.to_vec(), format!("R({})", v.compact()));
        let (xv, wv) = wg.xv_wv_decompose(&v);
        ensure_eq!(xv, el(&wg, x)?, format!("x_v for {}", v.compact()));
        ensure_eq!(wv, el(&wg, w)?, format!("w_v for {}", v.compact()));
        listed.insert(v);
    }
    ensure_eq!(listed.len(), 6, "distinct table rows");
    Ok(())
}

fn c2_components_and_singular_locus() -> Check {
    let wg = group(CartanType::A, 3)?;
    let s = semisimple(&wg, "1,1,-1,-1")?;
    let report = component_data(&wg, &s).map_err(err)?;
    let expected = [("s2s1s3s2", 3), ("s2s1s3", 4), ("s2", 3)];
    ensure_eq!(report.components.len(), 3, "|S|");
    for (v, dim) in expected {
        let v = el(&wg, v)?;
        let c = report
            .components
            .iter()
            .find(|c| c.v == v)
            .ok_or_else(|| format!("{} is not a component", v.compact()))?;
        ensure_eq!(c.dimension, dim, format!("dim X_{}", v.compact()));
    }
    ensure_eq!(report.variety_dim, 4, "variety dimension");
    let wm = wg.subgroup(s.delta_m());
    let mut expected_singular = BTreeSet::new();
    for v in ["s2s1s3", "s2"] {
        let v = el(&wg, v)?;
        for y in &wm {
            expected_singular.insert(wg.mul(y, &v));
        }
    }
    let got: BTreeSet<WeylElement> = report.all_singular.iter().cloned().collect();
    ensure_eq!(show(&got), show(&expected_singular), "singular fixed points");
    ensure_eq!(got.len(), 8, "number of singular points");
    Ok(())
}

fn c3_two_one_one() -> Check {
    let wg = group(CartanType::A, 3)?;
    let s = semisimple(&wg, "2,2,-1,-3")?;
    let reps = wg.min_coset_reps(s.delta_m(), Side::Left).map_err(err)?;
    ensure_eq!(reps.len(), 12, "|^M W|");
    let v = el(&wg, "s2s3s1s2s1")?;
    let o: BTreeSet<WeylElement> = o_set(&wg, &v, &s).into_iter().collect();
    ensure_eq!(show(&o), show(&set(&wg, &["s2s3s1s2"])?), "O(s2s3s1s2s1)");
    let report = component_data(&wg, &s).map_err(err)?;
    let got: BTreeSet<WeylElement> = report.components.iter().map(|c| c.v.clone()).collect();
    let want = set(&wg, &["s2s3s1s2s1", "s2s3s2s1", "s2s3s1", "s2s3s2"])?;
    ensure_eq!(show(&got), show(&want), "component index set");
    Ok(())
}

fn c4_symplectic_example() -> Check {
    let wg = group(CartanType::C, 2)?;
    let s = semisimple(&wg, "1,1")?;
    ensure_eq!(s.delta_m().labels(), vec![1], "Δ_M");
    let reps: BTreeSet<WeylElement> =
        wg.min_coset_reps(s.delta_m(), Side::Left).map_err(err)?.into_iter().collect();
    ensure_eq!(show(&reps), show(&set(&wg, &["e", "s2", "s2s1", "s2s1s2"])?), "^M W");
    let report = component_data(&wg, &s).map_err(err)?;
    let comps: BTreeSet<WeylElement> = report.components.iter().map(|c| c.v.clone()).collect();
    ensure_eq!(show(&comps), show(&set(&wg, &["s2", "s2s1", "s2s1s2"])?), "component index set");
    compare_graph(
        &wg,
        "1,1",
        &[
            ("s1s2s1s2", "a2", "s1s2s1"),
            ("s1s2s1s2", "a1", "s2s1s2"),
            ("s1s2s1", "a1", "s2s1"),
            ("s1s2s1", "a1+a2", "s1s2"),
            ("s2s1s2", "2a1+a2", "s2s1"),
            ("s1s2", "a1", "s2"),
            ("s1s2", "2a1+a2", "s1"),
            ("s2s1", "a1+a2", "s2"),
            ("s1", "a1", "e"),
            ("s2", "a2", "e"),
        ],
    )
}

fn c5_regular_graphs() -> Check {
    let a2 = group(CartanType::A, 2)?;
    compare_graph(
        &a2,
        "3,1,0",
        &[
            ("s1s2s1", "a2", "s1s2"),
            ("s1s2s1", "a1", "s2s1"),
            ("s1s2", "a1+a2", "s1"),
            ("s2s1", "a1+a2", "s2"),
            ("s1", "a1", "e"),
            ("s2", "a2", "e"),
        ],
    )
    .map_err(|e| format!("A2: {e}"))?;
    let c2 = group(CartanType::C, 2)?;
    compare_graph(
        &c2,
        "2,1",
        &[
            ("s1s2s1s2", "a2", "s1s2s1"),
            ("s1s2s1s2", "a1", "s2s1s2"),
            ("s1s2s1", "a1+a2", "s1s2"),
            ("s2s1s2", "2a1+a2", "s2s1"),
            ("s1s2", "2a1+a2", "s1"),
            ("s2s1", "a1+a2", "s2"),
            ("s1", "a1", "e"),
            ("s2", "a2", "e"),
        ],
    )
    .map_err(|e| format!("C2: {e}"))
}

fn c6_out_degree_identity() -> Check {
    let cases: [(CartanType, usize, &[&str]); 2] = [
        (
            CartanType::A,
            3,
            &["1,1,-1,-1", "2,2,-1,-3", "1,1,1,-1", "3,1,0,-2", "0,0,0,0", "4,3,2,1"],
        ),
        (CartanType::C, 2, &["1,1", "1,0", "0,0", "2,1"]),
    ];
    for (t, rank, values) in cases {
        let wg = group(t, rank)?;
        let h = standard_hessenberg(wg.root_system());
        for v in values {
            let s = semisimple(&wg, v)?;
            let g = build_gkm(&wg, &s).map_err(err)?;
            ensure_eq!(g.vertices.len() as u128, wg.order(), format!("{t}{rank} S=({v}) vertices"));
            for w in &g.vertices {
                let (deg, dim) = (g.out_degree(w), cell_dimension(&wg, w, &s, &h));
                ensure!(deg == dim, "{t}{rank} S=({v}) w={}: out-degree {deg}, cell dim {dim}", w.compact());
            }
        }
    }
    Ok(())
}

fn c7_patch_at_s2() -> Check {
    let values = parse_rationals("1,1,-1,-1").map_err(err)?;
    let wg = type_a_group(4).map_err(err)?;
    let w = el(&wg, "s2")?;
    let p = patch_ideal(&w, &values, &standard_hessenberg_function(4)).map_err(err)?;
    let expected: Vec<Polynomial> = ["x21*x42 - x41", "x21*x32", "x32*x43"]
        .iter()
        .map(|s| Polynomial::parse(&p.ring, s))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure!(ideals_equal(&p.generators, &expected).map_err(err)?, "patch ideal differs from the expected ideal");
    let (gb, certified) = p.groebner_certificate().map_err(err)?;
    ensure!(certified, "Gröbner basis not square-free: {gb:?}");
    ensure_eq!(p.origin_rank(), 1, "origin Jacobian rank");
    ensure_eq!(p.tangent_dimension(), 5, "tangent dimension");
    let scan = singular_scan(&values, &standard_hessenberg_function(4), LocalDimSource::Combinatorial, 0)
        .map_err(err)?;
    let point = scan
        .points
        .iter()
        .find(|q| q.word == w.compact())
        .ok_or("s2 missing from scan")?;
    ensure_eq!(point.local_dim, Some(4), "local dimension at s2");
    ensure_eq!(point.verdict, Verdict::Singular, "verdict at s2");
    ensure_eq!(point.jacobian_verdict, Verdict::Singular, "Jacobian verdict at s2");
    Ok(())
}

fn c8_patch_non_standard() -> Check {
    let values = parse_rationals("1,1,-1,-1").map_err(err)?;
    let h = [3, 4, 4, 4];
    let wg = type_a_group(4).map_err(err)?;
    let p = patch_ideal(&el(&wg, "s2s1")?, &values, &h).map_err(err)?;
    let nonzero: Vec<&Polynomial> = p.generators.iter().filter(|g| !g.is_zero()).collect();
    ensure_eq!(nonzero.len(), 1, "nonzero generators");
    let expected = Polynomial::parse(&p.ring, "2*x21*x32*x43 - 2*x21*x42 - 2*x31*x43").map_err(err)?;
    ensure!(
        nonzero[0].monic() == expected.monic(),
        "generator {} is not a multiple of {expected}",
        nonzero[0]
    );
    ensure_eq!(p.origin_rank(), 0, "origin Jacobian rank");
    let scan = singular_scan(&values, &h, LocalDimSource::Supplied(5), 0).map_err(err)?;
    let got: BTreeSet<WeylElement> =
        scan.singular_words().iter().map(|w| el(&wg, w)).collect::<Result<_, _>>()?;
    let want = set(
        &wg,
        &["s1s2s3s2", "s3s1s2s1", "s1s2s3", "s1s2s1", "s2s3s2", "s3s2s1", "s2s1", "s2s3"],
    )?;
    ensure_eq!(show(&got), show(&want), "singular fixed points");
    Ok(())
}

fn c9_cross_validation() -> Check {
    for s in ["1,1,-1,-1", "2,2,-1,-3", "1,1,1,-1", "3,1,0,-2"] {
        let r = verify_against_combinatorics(&parse_rationals(s).map_err(err)?).map_err(err)?;
        ensure_eq!(r.checked, 24, format!("S=({s}) points checked"));
        ensure!(r.agree && r.disagreements.is_empty(), "S=({s}) disagreements: {:?}", r.disagreements);
        ensure!(r.all_radical_certified, "S=({s}) has a patch ideal without a square-free Gröbner basis");
    }
    Ok(())
}

fn c10_degenerate() -> Check {
    for (t, rank, zero, regular) in
        [(CartanType::A, 3, "0,0,0,0", "4,3,2,1"), (CartanType::C, 2, "0,0", "2,1"), (CartanType::B, 3, "0,0,0", "3,2,1")]
    {
        let wg = group(t, rank)?;
        let all = wg.enumerate().map_err(err)?;
        let w0 = wg.longest_element(SimpleSet::full(rank));

        let s = semisimple(&wg, zero)?;
        ensure_eq!(s.delta_m(), SimpleSet::full(rank), format!("{t}{rank} Δ_M for S=0"));
        let r = component_data(&wg, &s).map_err(err)?;
        ensure_eq!(r.components.len(), 1, format!("{t}{rank} components for S=0"));
        let c = &r.components[0];
        ensure!(c.v.is_identity(), "{t}{rank} S=0 component index {}", c.v.compact());
        ensure_eq!(c.vertices, all, format!("{t}{rank} S=0 component vertices"));
        ensure_eq!(c.dimension, w0.length(), format!("{t}{rank} S=0 dimension"));
        ensure!(r.all_singular.is_empty(), "{t}{rank} S=0 has singular points");

        let s = semisimple(&wg, regular)?;
        let r = component_data(&wg, &s).map_err(err)?;
        let reps: Vec<WeylElement> = r.components.iter().map(|c| c.v.clone()).collect();
        ensure_eq!(reps, vec![w0.clone()], format!("{t}{rank} regular component index set"));
    }
    for n in 2..=4 {
        let values: Vec<BigRational> = (0..n).map(|k| BigRational::from_integer(BigInt::from(k % 2))).collect();
        let wg = type_a_group(n).map_err(err)?;
        for w in wg.enumerate().map_err(err)? {
            let p = patch_ideal(&w, &values, &vec![n; n]).map_err(err)?;
            ensure!(p.generators.iter().all(Polynomial::is_zero), "n={n} w={}: nonzero generator", w.compact());
            ensure_eq!(p.tangent_dimension(), n * (n - 1) / 2, format!("n={n} w={} tangent", w.compact()));
        }
    }
    Ok(())
}

fn c11_table() -> Check {
    // (h, blocks) -> (singular, irreducible, equidimensional)
    let expected: [(&[usize], &[usize], [Cell; 3]); 10] = {
        use Cell::{No, Yes};
        [
            (&[2, 3, 3], &[2, 1], [Yes, No, Yes]),
            (&[2, 3, 4, 4], &[3, 1], [Yes, No, Yes]),
            (&[2, 4, 4, 4], &[3, 1], [Yes, No, No]),
            (&[3, 4, 4, 4], &[3, 1], [Yes, No, Yes]),
            (&[2, 3, 4, 4], &[2, 2], [Yes, No, No]),
            (&[2, 4, 4, 4], &[2, 2], [Yes, No, No]),
            (&[3, 4, 4, 4], &[2, 2], [Yes, Yes, Yes]),
            (&[2, 3, 4, 4], &[2, 1, 1], [Yes, No, No]),
            (&[2, 4, 4, 4], &[2, 1, 1], [Yes, No, Yes]),
            (&[3, 4, 4, 4], &[2, 1, 1], [Yes, Yes, Yes]),
        ]
    };
    let mut mismatches = Vec::new();
    for ((h, s), (ph, pb, cells)) in builtin_specs().iter().zip(expected) {
        ensure_eq!(h.as_slice(), ph, "row order");
        let row = compute_row(h, s).map_err(err)?;
        ensure_eq!(row.blocks.as_slice(), pb, format!("blocks for h={h:?}"));
        let standard = *h == standard_hessenberg_function(h.len());
        let got = [row.singular, row.irreducible, row.equidimensional];
        for (k, name) in ["Singular", "Irreduc.", "Equidim"].iter().enumerate() {
            let covered = standard || k == 0 && h[0] == 3;
            if covered && got[k] == Cell::OutOfScope {
                mismatches.push(format!("h={h:?} {pb:?} {name}: not computed"));
            } else if got[k] != Cell::OutOfScope && got[k] != cells[k] {
                mismatches.push(format!("h={h:?} {pb:?} {name}: computed {}, table {}", got[k], cells[k]));
            }
            if !standard && k > 0 && got[k] != Cell::OutOfScope {
                mismatches.push(format!("h={h:?} {pb:?} {name}: decided without a decomposition"));
            }
        }
        if h[0] == 3 {
            let scan = singular_scan(s, h, LocalDimSource::MaxCell, 0).map_err(err)?;
            ensure!(
                scan.points.iter().any(|p| p.verdict == Verdict::Singular),
                "h={h:?} {pb:?}: max-cell scan finds no singular point"
            );
        }
    }
    ensure!(mismatches.is_empty(), "{}", mismatches.join("; "));
    Ok(())
}

const WEYL_CASES: [(CartanType, usize); 9] = [
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::B, 2),
    (CartanType::B, 3),
    (CartanType::C, 2),
    (CartanType::C, 3),
    (CartanType::D, 3),
    (CartanType::B, 1),
];

fn inv(wg: &WeylGroup, w: &WeylElement) -> BTreeSet<RootId> {
    wg.inversions(w).into_iter().collect()
}

fn act_set(wg: &WeylGroup, w: &WeylElement, s: &BTreeSet<RootId>) -> BTreeSet<RootId> {
    s.iter().map(|&r| wg.act(w, r)).collect()
}

fn disjoint_union(a: &BTreeSet<RootId>, b: &BTreeSet<RootId>) -> Option<BTreeSet<RootId>> {
    a.is_disjoint(b).then(|| a.union(b).copied().collect())
}

fn weyl_invariants(t: CartanType, rank: usize) -> Check {
    let wg = group(t, rank)?;
    let rs = wg.root_system();
    let all = wg.enumerate().map_err(err)?;
    ensure_eq!(all.len() as u128, wg.order(), "group order");
    let positive: BTreeSet<RootId> = rs.positive_roots().collect();
    let inverse: Vec<WeylElement> = all.iter().map(|w| wg.inverse(w)).collect();
    let n_of: Vec<BTreeSet<RootId>> = all.iter().map(|w| inv(&wg, w)).collect();
    let n_inv: Vec<BTreeSet<RootId>> = inverse.iter().map(|w| inv(&wg, w)).collect();

    for (k, w) in all.iter().enumerate() {
        let image: BTreeSet<RootId> = rs.roots().map(|r| wg.act(w, r)).collect();
        ensure_eq!(image.len(), rs.num_roots(), format!("{} permutes Φ", w.compact()));
        ensure!(
            n_of[k].len() == w.length() && n_inv[k].len() == w.length(),
            "|N(w)|, |N(w⁻¹)| ≠ ℓ(w) for {}",
            w.compact()
        );
        ensure_eq!(inverse[k].length(), w.length(), "ℓ(w⁻¹)");
        for i in 0..rank {
            let ws = wg.mul(w, &wg.simple_reflection(i));
            let down = wg.right_descents(w).contains(i);
            let want = if down { w.length() - 1 } else { w.length() + 1 };
            ensure_eq!(ws.length(), want, format!("ℓ({}·s{})", w.compact(), i + 1));
        }
        for &gamma in &positive {
            let shorter = wg.mul(&wg.reflection_for_root(gamma), w).length() < w.length();
            ensure_eq!(shorter, n_inv[k].contains(&gamma), format!("descent criterion at {}", w.compact()));
        }
    }

    for (a, y) in all.iter().enumerate() {
        for (b, v) in all.iter().enumerate() {
            let w = wg.mul(y, v);
            if w.length() != y.length() + v.length() {
                continue;
            }
            let left = disjoint_union(&n_inv[a], &act_set(&wg, y, &n_inv[b]));
            ensure!(left == Some(inv(&wg, &wg.inverse(&w))), "N(w⁻¹) split fails for y={} v={}", y.compact(), v.compact());
            let right = disjoint_union(&n_of[b], &act_set(&wg, &inverse[b], &n_of[a]));
            ensure!(right == Some(inv(&wg, &w)), "N(w) split fails for y={} v={}", y.compact(), v.compact());
        }
    }

    for bits in 0u32..(1 << rank) {
        let delta_l = SimpleSet::from_indices((0..rank).filter(|i| bits & (1 << i) != 0));
        let phi_l: BTreeSet<RootId> = wg.parabolic_positive_roots(delta_l).into_iter().collect();
        let outside: BTreeSet<RootId> = positive.difference(&phi_l).copied().collect();
        let wl = wg.subgroup(delta_l);
        for y in &wl {
            ensure!(
                act_set(&wg, y, &outside).is_subset(&outside),
                "{} does not preserve Φ⁺∖Φ_L⁺ for Δ_L={delta_l}",
                y.compact()
            );
        }

        let reps = wg.min_coset_reps(delta_l, Side::Left).map_err(err)?;
        ensure_eq!(wl.len() * reps.len(), all.len(), format!("|W_L|·|^L W| for Δ_L={delta_l}"));
        let products: BTreeSet<WeylElement> =
            wl.iter().flat_map(|y| reps.iter().map(|v| wg.mul(y, v))).collect();
        ensure_eq!(products.len(), all.len(), format!("W_L × ^L W → W for Δ_L={delta_l}"));
        for w in &all {
            let f = wg.parabolic_decompose(w, delta_l, Side::Left);
            ensure!(
                wg.mul(&f.parabolic, &f.coset_rep) == *w
                    && f.parabolic.length() + f.coset_rep.length() == w.length()
                    && reps.contains(&f.coset_rep),
                "parabolic factorisation of {} over {delta_l}",
                w.compact()
            );
        }

        for v in &reps {
            let (xv, wv) = wg.xv_wv_decompose(v);
            let r = wg.right_descents(v);
            ensure!(wg.mul(&xv, &wv) == *v, "x_v w_v ≠ v for {}", v.compact());
            for z in wg.subgroup(r) {
                let tau = wg.mul(&xv, &z);
                ensure!(
                    wg.is_min_coset_rep(&tau, delta_l, Side::Left),
                    "x_v z ∉ ^M W for v={} z={} Δ_M={delta_l}",
                    v.compact(),
                    z.compact()
                );
            }
        }
    }

    let mut top = rs.positive_roots().map(|r| rs.height(r)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    top.sort_unstable();
    ensure!(top.len() < 2 || top[top.len() - 1] > top[top.len() - 2], "highest root not unique");
    for a in rs.positive_roots() {
        for b in rs.positive_roots() {
            if let Some(c) = rs.root_add(a, b).filter(|&c| rs.is_positive(c)) {
                let (ha, hb, hc) = (rs.height(a).map_err(err)?, rs.height(b).map_err(err)?, rs.height(c).map_err(err)?);
                ensure!(ha + hb == hc, "height not additive");
            }
        }
    }
    Ok(())
}

fn monomial_order(n: usize) -> Check {
    let ring = PolyRing::unipotent(n);
    let nv = ring.nvars();
    let vars = ring.vars().to_vec();
    let unit = |k: usize| {
        let mut e = vec![0u16; nv];
        e[k] = 1;
        Monomial::from_exponents(e)
    };
    for a in 0..nv {
        for b in 0..nv {
            ensure_eq!(unit(a).cmp(&unit(b)), vars[a].cmp(&vars[b]), format!("{} vs {}", vars[a], vars[b]));
        }
    }
    let mut monos = vec![Monomial::one(nv)];
    for a in 0..nv {
        monos.push(unit(a));
        for b in a..nv {
            monos.push(unit(a).mul(&unit(b)));
        }
    }
    for a in &monos {
        for b in &monos {
            let ab = a.cmp(b);
            ensure_eq!(b.cmp(a), ab.reverse(), "antisymmetry");
            ensure!(a == b || ab.is_ne(), "total order");
            for c in &monos {
                ensure_eq!(a.mul(c).cmp(&b.mul(c)), ab, "multiplicativity");
            }
        }
    }
    Ok(())
}

type Terms = Vec<(i64, Vec<u16>)>;

fn build(ring: &Arc<PolyRing>, terms: &Terms) -> Polynomial {
    terms.iter().fold(Polynomial::zero(ring), |acc, (c, e)| {
        let t = Polynomial::term(ring, BigRational::from_integer((*c).into()), Monomial::from_exponents(e.clone()));
        &acc + &t
    })
}

fn terms(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((-4i64..=4, prop::collection::vec(0..=max_exp, nvars)), 0..=max_terms)
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

pub const POLY_CASES: u32 = 1000;

fn ring_axioms() -> Check {
    let ring = PolyRing::unipotent(4);
    let nv = ring.nvars();
    let vars: Vec<Variable> = ring.vars().to_vec();
    runner(POLY_CASES)
        .run(&(terms(nv, 2, 4), terms(nv, 2, 4), terms(nv, 2, 4)), |(a, b, c)| {
            let (p, q, r) = (build(&ring, &a), build(&ring, &b), build(&ring, &c));
            prop_assert_eq!(&(&(&p + &q) + &r), &(&p + &(&q + &r)));
            prop_assert_eq!(&(&(&p * &q) * &r), &(&p * &(&q * &r)));
            prop_assert_eq!(&(&p * &(&q + &r)), &(&(&p * &q) + &(&p * &r)));
            prop_assert_eq!(&(&p + &q), &(&q + &p));
            prop_assert_eq!(&(&p * &q), &(&q * &p));
            prop_assert_eq!(&(&(&p - &q) + &q), &p);
            prop_assert_eq!(&(&p * &Polynomial::one(&ring)), &p);
            prop_assert_eq!(&(&p + &(-&p)), &Polynomial::zero(&ring));
            let pq = &p * &q;
            for &v in &vars {
                let lhs = pq.partial_derivative(v);
                let rhs = &(&p * &q.partial_derivative(v)) + &(&q * &p.partial_derivative(v));
                prop_assert_eq!(&lhs, &rhs);
            }
            Ok(())
        })
        .map_err(err)
}

fn groebner_consistency() -> Check {
    // square-free generators in four variables, shaped like patch ideals
    let ring = PolyRing::new(
        [(2, 1), (3, 2), (3, 1), (4, 3)].iter().map(|&(i, j)| Variable::new(i, j)).collect(),
    );
    let nv = ring.nvars();
    runner(POLY_CASES)
        .run(
            &(prop::collection::vec(terms(nv, 1, 3), 1..=3), terms(nv, 1, 2), terms(nv, 1, 2)),
            |(gens, m1, m2)| {
                let gens: Vec<Polynomial> = gens.iter().map(|t| build(&ring, t)).collect();
                let gb = buchberger(&gens).map_err(|e| TestCaseError::fail(e.to_string()))?;
                let mut reversed = gens.clone();
                reversed.reverse();
                let gb_rev = buchberger(&reversed).map_err(|e| TestCaseError::fail(e.to_string()))?;
                prop_assert_eq!(&gb, &gb_rev);
                for g in &gens {
                    prop_assert!(normal_form(g, &gb).is_zero());
                }
                for (i, f) in gb.iter().enumerate() {
                    prop_assert_eq!(f.leading_coefficient().cloned(), Some(BigRational::from_integer(1.into())));
                    for g in &gb[i + 1..] {
                        prop_assert!(normal_form(&s_polynomial(f, g), &gb).is_zero());
                    }
                }
                let combo = &(&build(&ring, &m1) * &gens[0]) + &(&build(&ring, &m2) * &gens[gens.len() - 1]);
                prop_assert!(normal_form(&combo, &gb).is_zero());
                let nf = normal_form(&build(&ring, &m1), &gb);
                prop_assert_eq!(&normal_form(&nf, &gb), &nf);
                Ok(())
            },
        )
        .map_err(err)
}

fn c12_properties() -> Check {
    for (t, rank) in WEYL_CASES {
        weyl_invariants(t, rank).map_err(|e| format!("{t}{rank}: {e}"))?;
    }
    for n in 2..=5 {
        monomial_order(n).map_err(|e| format!("order n={n}: {e}"))?;
    }
    ring_axioms().map_err(|e| format!("ring axioms: {e}"))?;
    groebner_consistency().map_err(|e| format!("Gröbner bases: {e}"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "coset table for S=(1,1,-1,-1)", budget: secs(5), run: c1_example_table },
        Criterion { name: "components and singular locus for S=(1,1,-1,-1)", budget: secs(5), run: c2_components_and_singular_locus },
        Criterion { name: "component index set for S=(2,2,-1,-3)", budget: secs(5), run: c3_two_one_one },
        Criterion { name: "C2 decomposition and GKM graph for S=(1,1)", budget: secs(5), run: c4_symplectic_example },
        Criterion { name: "regular GKM graphs in A2 and C2", budget: secs(5), run: c5_regular_graphs },
        Criterion { name: "GKM out-degree equals cell dimension", budget: secs(5), run: c6_out_degree_identity },
        Criterion { name: "patch ideal at s2", budget: secs(5), run: c7_patch_at_s2 },
        Criterion { name: "patch ideal at s2s1 for h=(3,4,4,4)", budget: secs(5), run: c8_patch_non_standard },
        Criterion { name: "Jacobian criterion agrees with the decomposition", budget: secs(60), run: c9_cross_validation },
        Criterion { name: "degenerate cases", budget: secs(5), run: c10_degenerate },
        Criterion { name: "geometric property table", budget: secs(5), run: c11_table },
        Criterion { name: "Weyl group and polynomial properties", budget: secs(5), run: c12_properties },
    ];
    let mut failed = 0;
    for (k, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > c.budget {
                Err(format!("over budget of {}s", c.budget.as_secs()))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {} ({:.2}s)", k + 1, c.name, elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({:.2}s): {e}", k + 1, c.name, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
