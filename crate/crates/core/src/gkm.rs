//! GKM graphs of semisimple Hessenberg varieties, their component and
//! singular-locus subgraphs, and DOT/JSON export.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::components::{ComponentDatum, DecompositionReport, HessenbergSpace, SemisimpleElement};
use crate::error::Result;
use crate::root_system::RootId;
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmEdge {
    pub src: WeylElement,
    pub dst: WeylElement,
    pub label: RootId,
    /// Indices of components containing both endpoints.
    pub components: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct GkmGraph {
    /// In group order.
    pub vertices: Vec<WeylElement>,
    /// Grouped by source in group order, then by label.
    pub edges: Vec<GkmEdge>,
    /// Parallel to `vertices`; empty until [`GkmGraph::annotate`].
    pub vertex_components: Vec<Vec<usize>>,
    /// Parallel to `vertices`.
    pub singular: Vec<bool>,
}

/// GKM graph of `B(S, H_Δ)`: `w → s_γ w` for `γ ∈ N(w⁻¹)` with `γ ∈ Φ_M⁺` or
/// `w⁻¹γ` a negative simple root.
pub fn build_gkm(wg: &WeylGroup, s: &SemisimpleElement) -> Result<GkmGraph> {
    let rs = wg.root_system();
    build_with(wg, s, |r| rs.simple_index(rs.negate(r)).is_some())
}

/// Same construction for an arbitrary Hessenberg space, with the second
/// condition replaced by `w⁻¹γ ∈ Φ_H⁻`. Not covered by the out-degree
/// identity outside `H_Δ`.
pub fn build_gkm_experimental(
    wg: &WeylGroup,
    s: &SemisimpleElement,
    h: &HessenbergSpace,
) -> Result<GkmGraph> {
    build_with(wg, s, |r| h.contains(r))
}

fn build_with(
    wg: &WeylGroup,
    s: &SemisimpleElement,
    allowed: impl Fn(RootId) -> bool + Sync,
) -> Result<GkmGraph> {
    let rs = wg.root_system();
    let vertices = wg.enumerate()?;
    let phi_m: HashSet<RootId> = wg.parabolic_positive_roots(s.delta_m()).into_iter().collect();
    let edges: Vec<GkmEdge> = vertices
        .par_iter()
        .flat_map_iter(|w| {
            let winv = wg.inverse(w);
            let mut out: Vec<GkmEdge> = rs
                .positive_roots()
                .filter_map(|gamma| {
                    let image = wg.act(&winv, gamma);
                    if rs.is_positive(image) || !(phi_m.contains(&gamma) || allowed(image)) {
                        return None;
                    }
                    Some(GkmEdge {
                        src: w.clone(),
                        dst: wg.mul(&wg.reflection_for_root(gamma), w),
                        label: gamma,
                        components: Vec::new(),
                    })
                })
                .collect();
            out.sort_by_key(|e| e.label);
            out
        })
        .collect();
    let n = vertices.len();
    Ok(GkmGraph { vertices, edges, vertex_components: vec![Vec::new(); n], singular: vec![false; n] })
}

impl GkmGraph {
    pub fn out_degree(&self, w: &WeylElement) -> usize {
        self.edges.iter().filter(|e| &e.src == w).count()
    }

    pub fn vertex_index(&self, w: &WeylElement) -> Option<usize> {
        self.vertices.iter().position(|v| v == w)
    }

    /// Attach component membership and singular flags from a decomposition
    /// of the same variety.
    pub fn annotate(&mut self, report: &DecompositionReport) {
        let singular: HashSet<&WeylElement> = report.all_singular.iter().collect();
        self.vertex_components = self.vertices.iter().map(|w| report.components_containing(w)).collect();
        self.singular = self.vertices.iter().map(|w| singular.contains(w)).collect();
        for e in &mut self.edges {
            let a = report.components_containing(&e.src);
            let b: BTreeSet<usize> = report.components_containing(&e.dst).into_iter().collect();
            e.components = a.into_iter().filter(|i| b.contains(i)).collect();
        }
    }

    /// Induced subgraph on `keep`, preserving annotations.
    pub fn induced(&self, keep: &HashSet<WeylElement>) -> GkmGraph {
        self.restrict(keep, |e| keep.contains(&e.src) && keep.contains(&e.dst))
    }

    fn restrict(&self, keep: &HashSet<WeylElement>, edge_ok: impl Fn(&GkmEdge) -> bool) -> GkmGraph {
        let mut g = GkmGraph::default();
        for (i, w) in self.vertices.iter().enumerate() {
            if keep.contains(w) {
                g.vertices.push(w.clone());
                g.vertex_components.push(self.vertex_components[i].clone());
                g.singular.push(self.singular[i]);
            }
        }
        g.edges = self.edges.iter().filter(|e| edge_ok(e)).cloned().collect();
        g
    }
}

/// Induced subgraph on the fixed points of one component.
pub fn component_subgraph(graph: &GkmGraph, component: &ComponentDatum) -> GkmGraph {
    graph.induced(&component.vertices.iter().cloned().collect())
}

/// Union over intersecting pairs of the induced subgraphs on `V(v, τ)`.
/// An edge joining two singular points that share no pair is not included.
pub fn singular_subgraph(graph: &GkmGraph, report: &DecompositionReport) -> GkmGraph {
    let pairs: Vec<HashSet<&WeylElement>> =
        report.singular_pairs.iter().map(|p| p.vertices.iter().collect()).collect();
    let keep: HashSet<WeylElement> = report.all_singular.iter().cloned().collect();
    graph.restrict(&keep, |e| pairs.iter().any(|p| p.contains(&e.src) && p.contains(&e.dst)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Highlight {
    #[default]
    None,
    /// Every vertex and edge coloured by component membership.
    Components,
    /// Only singular vertices coloured.
    Singular,
}

/// Component colours, indexed by component position.
pub const PALETTE: [&str; 8] = ["red", "blue", "gold", "teal", "magenta", "sienna", "olive", "slategray"];

fn rgb(name: &str) -> (u8, u8, u8) {
    match name {
        "red" => (0xff, 0x00, 0x00),
        "blue" => (0x00, 0x00, 0xff),
        "gold" => (0xff, 0xd7, 0x00),
        "teal" => (0x00, 0x80, 0x80),
        "magenta" => (0xff, 0x00, 0xff),
        "sienna" => (0xa0, 0x52, 0x2d),
        "olive" => (0x80, 0x80, 0x00),
        _ => (0x70, 0x80, 0x90),
    }
}

pub fn component_color(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// Colour for a point on components `i < j`: the painter's mix for the
/// primary pairs, otherwise the RGB midpoint.
pub fn blend_color(i: usize, j: usize) -> String {
    let (a, b) = (component_color(i), component_color(j));
    let mut key = [a, b];
    key.sort_unstable();
    match key {
        ["blue", "red"] => "violet".into(),
        ["blue", "gold"] => "green".into(),
        ["gold", "red"] => "orange".into(),
        _ => {
            let (x, y) = (rgb(a), rgb(b));
            let mid = |p: u8, q: u8| ((p as u16 + q as u16) / 2) as u8;
            format!("#{:02x}{:02x}{:02x}", mid(x.0, y.0), mid(x.1, y.1), mid(x.2, y.2))
        }
    }
}

fn membership_color(ids: &[usize]) -> Option<String> {
    match ids {
        [] => None,
        [i] => Some(component_color(*i).to_string()),
        [i, j, ..] => Some(blend_color(*i, *j)),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(graph: &GkmGraph, wg: &WeylGroup, highlight: Highlight) -> String {
    let rs = wg.root_system();
    let mut out = String::from("digraph G {\n");
    for (i, w) in graph.vertices.iter().enumerate() {
        let word = w.compact();
        let comps = graph.vertex_components.get(i).map_or(&[][..], |c| &c[..]);
        let color = match highlight {
            Highlight::None => None,
            Highlight::Components => membership_color(comps),
            Highlight::Singular if graph.singular.get(i).copied().unwrap_or(false) => {
                Some(membership_color(comps).unwrap_or_else(|| "red".into()))
            }
            Highlight::Singular => None,
        };
        let _ = match color {
            Some(c) => writeln!(
                out,
                "  {} [label={}, style=filled, fillcolor={}];",
                quote(&word),
                quote(&word),
                quote(&c)
            ),
            None => writeln!(out, "  {} [label={}];", quote(&word), quote(&word)),
        };
    }
    for e in &graph.edges {
        let color = match highlight {
            Highlight::Components => membership_color(&e.components),
            _ => None,
        };
        let label = quote(&rs.pretty(e.label));
        let _ = match color {
            Some(c) => writeln!(
                out,
                "  {} -> {} [label={}, color={}];",
                quote(&e.src.compact()),
                quote(&e.dst.compact()),
                label,
                quote(&c)
            ),
            None => writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(&e.src.compact()),
                quote(&e.dst.compact()),
                label
            ),
        };
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub word: String,
    pub components: Vec<usize>,
    pub singular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: String,
    pub dst: String,
    pub label: String,
    pub components: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

pub fn to_json(graph: &GkmGraph, wg: &WeylGroup) -> GraphJson {
    let rs = wg.root_system();
    GraphJson {
        vertices: graph
            .vertices
            .iter()
            .enumerate()
            .map(|(i, w)| VertexJson {
                word: w.compact(),
                components: graph.vertex_components.get(i).cloned().unwrap_or_default(),
                singular: graph.singular.get(i).copied().unwrap_or(false),
            })
            .collect(),
        edges: graph
            .edges
            .iter()
            .map(|e| EdgeJson {
                src: e.src.compact(),
                dst: e.dst.compact(),
                label: rs.pretty(e.label),
                components: e.components.clone(),
            })
            .collect(),
    }
}

/// `(src, label, dst)` triples as compact words and pretty roots, sorted.
pub fn edge_triples(graph: &GkmGraph, wg: &WeylGroup) -> Vec<(String, String, String)> {
    let rs = wg.root_system();
    let mut v: Vec<_> = graph
        .edges
        .iter()
        .map(|e| (e.src.compact(), rs.pretty(e.label), e.dst.compact()))
        .collect();
    v.sort();
    v
}

/// Out-degree of every vertex, keyed by compact word.
pub fn out_degrees(graph: &GkmGraph) -> BTreeMap<String, usize> {
    let mut m: BTreeMap<String, usize> = graph.vertices.iter().map(|w| (w.compact(), 0)).collect();
    for e in &graph.edges {
        *m.entry(e.src.compact()).or_default() += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::{cell_dimension, component_data, make_semisimple, standard_hessenberg};
    use crate::rational::parse_rationals;
    use crate::root_system::CartanType;

    fn setup(t: CartanType, rank: usize, s: &str) -> (WeylGroup, SemisimpleElement) {
        let wg = WeylGroup::of_type(t, rank).unwrap();
        let s = make_semisimple(wg.root_system(), parse_rationals(s).unwrap()).unwrap();
        (wg, s)
    }

    fn triples(list: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
        let mut v: Vec<_> =
            list.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect();
        v.sort();
        v
    }

    #[test]
    fn a2_regular() {
        let (wg, s) = setup(CartanType::A, 2, "3,1,0");
        let g = build_gkm(&wg, &s).unwrap();
        let expected = triples(&[
            ("s1s2s1", "a2", "s1s2"),
            ("s1s2s1", "a1", "s2s1"),
            ("s1s2", "a1+a2", "s1"),
            ("s2s1", "a1+a2", "s2"),
            ("s1", "a1", "e"),
            ("s2", "a2", "e"),
        ]);
        assert_eq!(edge_triples(&g, &wg), expected);
    }

    #[test]
    fn zero_s_is_full_bruhat_graph() {
        let (wg, s) = setup(CartanType::A, 2, "0,0,0");
        let g = build_gkm(&wg, &s).unwrap();
        // ℓ(w₀)·|W|/2
        assert_eq!(g.edges.len(), 3 * 6 / 2);
    }

    #[test]
    fn out_degree_is_cell_dimension() {
        for (t, r, s) in [(CartanType::A, 3, "1,1,-1,-1"), (CartanType::C, 2, "1,1"), (CartanType::B, 2, "1,0")] {
            let (wg, s) = setup(t, r, s);
            let h = standard_hessenberg(wg.root_system());
            let g = build_gkm(&wg, &s).unwrap();
            for w in &g.vertices {
                assert_eq!(g.out_degree(w), cell_dimension(&wg, w, &s, &h), "{w}");
            }
        }
    }

    #[test]
    fn experimental_matches_standard_on_standard_h() {
        let (wg, s) = setup(CartanType::A, 3, "2,2,-1,-3");
        let h = standard_hessenberg(wg.root_system());
        let a = build_gkm(&wg, &s).unwrap();
        let b = build_gkm_experimental(&wg, &s, &h).unwrap();
        assert_eq!(a.edges, b.edges);
    }

    #[test]
    fn subgraphs() {
        let (wg, s) = setup(CartanType::A, 3, "1,1,-1,-1");
        let report = component_data(&wg, &s).unwrap();
        let mut g = build_gkm(&wg, &s).unwrap();
        g.annotate(&report);
        let s2 = wg.parse_word("s2").unwrap();
        let c = report.components.iter().find(|c| c.v == s2).unwrap();
        let sub = component_subgraph(&g, c);
        assert_eq!(sub.vertices.len(), 8);
        for e in &g.edges {
            let inside = c.vertices.contains(&e.src) && c.vertices.contains(&e.dst);
            assert_eq!(inside, sub.edges.contains(e));
        }
        let sing = singular_subgraph(&g, &report);
        assert_eq!(sing.vertices, report.all_singular);
        assert_eq!(sing.vertices.len(), 8);
        assert!(g.singular.iter().filter(|b| **b).count() == 8);
    }

    #[test]
    fn regular_subgraphs() {
        let (wg, s) = setup(CartanType::A, 2, "3,1,0");
        let report = component_data(&wg, &s).unwrap();
        let mut g = build_gkm(&wg, &s).unwrap();
        g.annotate(&report);
        let whole = component_subgraph(&g, &report.components[0]);
        assert_eq!(whole.edges, g.edges);
        assert!(singular_subgraph(&g, &report).vertices.is_empty());
        let dot = to_dot(&g, &wg, Highlight::Singular);
        assert!(!dot.contains("fillcolor"));
    }

    #[test]
    fn dot_output() {
        let g = GkmGraph::default();
        let wg = WeylGroup::of_type(CartanType::A, 1).unwrap();
        assert_eq!(to_dot(&g, &wg, Highlight::None).split_whitespace().collect::<String>(), "digraphG{}");

        let (wg, s) = setup(CartanType::A, 2, "3,1,0");
        let g = build_gkm(&wg, &s).unwrap();
        let dot = to_dot(&g, &wg, Highlight::None);
        assert_eq!(dot.matches("->").count(), 6);
        assert_eq!(dot.matches("label=\"a1+a2\"]").count(), 2);
    }

    #[test]
    fn blends() {
        assert_eq!(blend_color(0, 1), "violet");
        assert_eq!(blend_color(1, 2), "green");
        assert_eq!(blend_color(0, 2), "orange");
        assert_eq!(blend_color(0, 3), "#7f4040");
    }

    #[test]
    fn json_round_trip() {
        let (wg, s) = setup(CartanType::C, 2, "1,1");
        let report = component_data(&wg, &s).unwrap();
        let mut g = build_gkm(&wg, &s).unwrap();
        g.annotate(&report);
        let j = to_json(&g, &wg);
        let text = serde_json::to_string(&j).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
    }
}
