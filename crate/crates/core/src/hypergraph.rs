//! Triangle decompositions of 3-colored graphs and their dual hypergraphs.
//!
//! When every monochromatic component of a 3-colored graph is a triangle,
//! the dual has one vertex per triangle and one hyperedge per graph vertex
//! (the triangles through it). Two graph vertices are adjacent exactly when
//! their hyperedges meet, so the chromatic number of the graph equals the
//! chromatic index of the dual.
//!
//! Duals of 6-regular hosts are 3-uniform, 3-regular, 3-partite (by triangle
//! color) and linear. Such hypergraphs with parts of size `p` are the same
//! thing as `p x p` arrays with three filled cells in every row and column,
//! each of `p` symbols used three times, and no symbol repeated in a row or
//! column: rows, columns and symbols are the three parts and filled cells
//! are the hyperedges.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, ColoredMatrix};
use crate::graph::{connected_components, ColoredGraph, Graph, Vertex};

/// A monochromatic triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Triangle {
    pub color: usize,
    pub vertices: [Vertex; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleDecomposition {
    pub host: ColoredGraph,
    /// Sorted by color, then by vertices.
    pub triangles: Vec<Triangle>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NotDecomposed {
    #[error("a triangle decomposition needs 3 colors, got {0}")]
    ColorCount(usize),
    #[error("color {color} has a component on {vertices:?} that is not a triangle")]
    Component { color: usize, vertices: Vec<Vertex> },
}

/// The triangles of `cg` if every monochromatic component is a triangle,
/// otherwise the first offending component.
pub fn detect_triangle_decomposition(cg: &ColoredGraph) -> Result<TriangleDecomposition, NotDecomposed> {
    if cg.k() != 3 {
        return Err(NotDecomposed::ColorCount(cg.k()));
    }
    let mut triangles = Vec::new();
    for color in 0..3 {
        let class = cg.color_subgraph(color).expect("color in range");
        for comp in connected_components(&class).into_iter().filter(|c| c.len() > 1) {
            let edges = comp.iter().map(|&v| class.degree(v)).sum::<usize>() / 2;
            if comp.len() != 3 || edges != 3 {
                return Err(NotDecomposed::Component { color, vertices: comp });
            }
            triangles.push(Triangle { color, vertices: [comp[0], comp[1], comp[2]] });
        }
    }
    triangles.sort();
    Ok(TriangleDecomposition { host: cg.clone(), triangles })
}

/// A hypergraph on `0..vertices`, optionally with a vertex partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph3 {
    #[serde(rename = "v")]
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub uniform: bool,
    pub regular: bool,
    pub partite: bool,
    pub linear: bool,
}

impl Properties {
    pub fn all(&self) -> bool {
        self.uniform && self.regular && self.partite && self.linear
    }
}

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("hyperedge {edge} mentions vertex {vertex} outside 0..{vertices}")]
    VertexOutOfRange { edge: usize, vertex: usize, vertices: usize },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Hypergraph3 {
    pub fn new(vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        for (i, e) in edges.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= vertices) {
                return Err(HypergraphError::VertexOutOfRange { edge: i, vertex: v, vertices });
            }
        }
        Ok(Hypergraph3 { vertices, edges, parts: None })
    }

    pub fn from_json(text: &str) -> Result<Self, HypergraphError> {
        let h: Hypergraph3 = serde_json::from_str(text)?;
        Hypergraph3::new(h.vertices, h.edges).map(|g| Hypergraph3 { parts: h.parts, ..g })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.iter().all(|e| {
            let mut s = e.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == 3 && e.len() == 3
        })
    }

    pub fn is_regular(&self) -> bool {
        (0..self.vertices).all(|v| self.degree(v) == 3)
    }

    pub fn is_linear(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, e)| self.edges[i + 1..].iter().all(|f| e.iter().filter(|v| f.contains(v)).count() <= 1))
    }

    /// Whether the stored partition has three classes covering every vertex
    /// once and meets every hyperedge in exactly one vertex per class.
    pub fn is_partite_by_parts(&self) -> bool {
        let Some(parts) = &self.parts else { return false };
        let Some(label) = labels_of(parts, self.vertices) else { return false };
        parts.len() == 3 && self.edges.iter().all(|e| meets_each_part_once(e, &label))
    }

    /// A partition into three classes meeting every hyperedge once, found
    /// by search (for hypergraphs supplied without one).
    pub fn find_three_partition(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_uniform() {
            return None;
        }
        let mut label = vec![usize::MAX; self.vertices];
        if !self.assign_parts(0, &mut label) {
            return None;
        }
        let mut parts = vec![Vec::new(); 3];
        for (v, l) in label.into_iter().enumerate() {
            // vertices on no hyperedge may go anywhere
            parts[if l == usize::MAX { 0 } else { l }].push(v);
        }
        Some(parts)
    }

    fn assign_parts(&self, i: usize, label: &mut [usize]) -> bool {
        let Some(e) = self.edges.get(i) else { return true };
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for perm in PERMS {
            if e.iter().zip(perm).any(|(&v, p)| label[v] != usize::MAX && label[v] != p) {
                continue;
            }
            let fresh: Vec<usize> = e.iter().copied().filter(|&v| label[v] == usize::MAX).collect();
            for (&v, p) in e.iter().zip(perm) {
                label[v] = p;
            }
            if self.assign_parts(i + 1, label) {
                return true;
            }
            for v in fresh {
                label[v] = usize::MAX;
            }
            // a hyperedge with all vertices labeled admits at most one permutation
            if e.iter().all(|&v| label[v] != usize::MAX) {
                break;
            }
        }
        false
    }

    pub fn properties(&self) -> Properties {
        Properties {
            uniform: self.is_uniform(),
            regular: self.is_regular(),
            partite: self.is_partite_by_parts(),
            linear: self.is_linear(),
        }
    }

    /// The graph on hyperedges, adjacent when they share a vertex.
    pub fn intersection_graph(&self) -> Graph {
        Graph::from_fn(self.edges.len(), |a, b| self.edges[a].iter().any(|v| self.edges[b].contains(v)))
    }

    /// Canonical code up to hypergraph isomorphism (partitions ignored).
    pub fn canonical_code(&self) -> Vec<u8> {
        let n = self.vertices + self.edges.len();
        let colors = (0..n).map(|i| u32::from(i >= self.vertices)).collect();
        let mut m = ColoredMatrix::new(n, colors);
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                m.set(v, self.vertices + i, 1);
            }
        }
        canonical_code(&m)
    }
}

fn labels_of(parts: &[Vec<usize>], vertices: usize) -> Option<Vec<usize>> {
    let mut label = vec![usize::MAX; vertices];
    for (p, class) in parts.iter().enumerate() {
        for &v in class {
            if v >= vertices || label[v] != usize::MAX {
                return None;
            }
            label[v] = p;
        }
    }
    label.iter().all(|&l| l != usize::MAX).then_some(label)
}

fn meets_each_part_once(e: &[usize], label: &[usize]) -> bool {
    let mut seen: Vec<usize> = e.iter().map(|&v| label[v]).collect();
    seen.sort_unstable();
    seen == [0, 1, 2]
}

/// The dual with its property checks.
#[derive(Clone, Debug, Serialize)]
pub struct Dual {
    pub hypergraph: Hypergraph3,
    pub properties: Properties,
    pub host_six_regular: bool,
}

/// Dual of a triangle decomposition: vertex `i` is `td.triangles[i]`,
/// hyperedge `v` lists the triangles through host vertex `v`, and parts are
/// the triangle colors.
pub fn build_dual(td: &TriangleDecomposition) -> Dual {
    let n = td.host.n();
    let mut edges = vec![Vec::new(); n];
    for (i, t) in td.triangles.iter().enumerate() {
        for &v in &t.vertices {
            edges[v].push(i);
        }
    }
    let mut parts = vec![Vec::new(); 3];
    for (i, t) in td.triangles.iter().enumerate() {
        parts[t.color].push(i);
    }
    let hypergraph = Hypergraph3 { vertices: td.triangles.len(), edges, parts: Some(parts) };
    let g = td.host.graph();
    Dual { properties: hypergraph.properties(), host_six_regular: (0..n).all(|v| g.degree(v) == 6), hypergraph }
}

/// Rebuilds the 3-colored host from a dual with parts: host vertices are
/// hyperedges, and two of them are joined in color `c` when they share a
/// vertex of part `c`.
pub fn host_from_dual(h: &Hypergraph3) -> Option<ColoredGraph> {
    let label = labels_of(h.parts.as_ref()?, h.vertices)?;
    let mut edges = Vec::new();
    for a in 0..h.edges.len() {
        for b in a + 1..h.edges.len() {
            let shared: Vec<usize> = h.edges[a].iter().copied().filter(|v| h.edges[b].contains(v)).collect();
            match shared.as_slice() {
                [] => {}
                [v] => edges.push((a, b, label[*v].min(2))),
                _ => return None,
            }
        }
    }
    ColoredGraph::from_colored_edges(h.edges.len(), 3, edges).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ChromaticIndex {
    Exact { value: usize },
    Indeterminate { lower: usize, upper: usize },
}

impl ChromaticIndex {
    pub fn exact(self) -> Option<usize> {
        match self {
            ChromaticIndex::Exact { value } => Some(value),
            ChromaticIndex::Indeterminate { .. } => None,
        }
    }
}

/// Fewest colors on the hyperedges so that intersecting hyperedges differ,
/// by backtracking on the hyperedges with at most `budget` nodes per color
/// count. Starts from the maximum vertex degree.
pub fn chromatic_index(h: &Hypergraph3, budget: Option<u64>) -> ChromaticIndex {
    let m = h.edges.len();
    if m == 0 {
        return ChromaticIndex::Exact { value: 0 };
    }
    let lower = (0..h.vertices).map(|v| h.degree(v)).max().unwrap_or(1).max(1);
    // order hyperedges so each meets many earlier ones
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|a| (0..m).filter(|&b| b != a && h.edges[a].iter().any(|v| h.edges[b].contains(v))).collect())
        .collect();
    let mut order = vec![0usize];
    let mut placed = vec![false; m];
    placed[0] = true;
    while order.len() < m {
        let next = (0..m)
            .filter(|&e| !placed[e])
            .max_by_key(|&e| (adj[e].iter().filter(|&&f| placed[f]).count(), std::cmp::Reverse(e)))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut k = lower;
    loop {
        let mut color = vec![usize::MAX; m];
        let mut nodes = 0u64;
        match color_edges(&order, &adj, k, 0, 0, &mut color, &mut nodes, budget) {
            Some(true) => return ChromaticIndex::Exact { value: k },
            Some(false) => k += 1,
            None => return ChromaticIndex::Indeterminate { lower: k, upper: m },
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn color_edges(
    order: &[usize],
    adj: &[Vec<usize>],
    k: usize,
    i: usize,
    used: usize,
    color: &mut [usize],
    nodes: &mut u64,
    budget: Option<u64>,
) -> Option<bool> {
    *nodes += 1;
    if budget.is_some_and(|b| *nodes > b) {
        return None;
    }
    let Some(&e) = order.get(i) else { return Some(true) };
    for c in 0..k.min(used + 1) {
        if adj[e].iter().any(|&f| color[f] == c) {
            continue;
        }
        color[e] = c;
        let r = color_edges(order, adj, k, i + 1, used.max(c + 1), color, nodes, budget);
        color[e] = usize::MAX;
        match r {
            Some(false) => {}
            other => return other,
        }
    }
    Some(false)
}

/// Why a corpus member was not searched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub index: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub index: usize,
    pub hyperedges: usize,
    pub chromatic_index: ChromaticIndex,
    /// At least 6: a 3-partite linear instance that five colors do not suffice for.
    pub flagged: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchSummary {
    pub results: Vec<InstanceResult>,
    pub skipped: Vec<Skipped>,
    pub max_chromatic_index: Option<usize>,
    pub flagged: usize,
    pub indeterminate: usize,
}

/// Chromatic index of every valid member (3-uniform, 3-regular, linear,
/// 3-partite by its parts or by a found partition), flagging any that
/// need 6 or more colors.
pub fn chromatic_index_search(corpus: &[Hypergraph3], budget: Option<u64>) -> SearchSummary {
    let outcomes: Vec<Result<InstanceResult, Skipped>> = corpus
        .par_iter()
        .enumerate()
        .map(|(index, h)| {
            let props = h.properties();
            let partite = props.partite || (h.parts.is_none() && h.find_three_partition().is_some());
            let reason = [
                (!props.uniform, "not 3-uniform"),
                (!props.regular, "not 3-regular"),
                (!props.linear, "not linear"),
                (!partite, "not 3-partite"),
            ]
            .iter()
            .filter(|(bad, _)| *bad)
            .map(|(_, r)| *r)
            .collect::<Vec<_>>();
            if !reason.is_empty() {
                return Err(Skipped { index, reason: reason.join(", ") });
            }
            let chi = chromatic_index(h, budget);
            Ok(InstanceResult {
                index,
                hyperedges: h.edges.len(),
                chromatic_index: chi,
                flagged: matches!(chi, ChromaticIndex::Exact { value } if value >= 6),
            })
        })
        .collect();
    let mut summary = SearchSummary::default();
    for o in outcomes {
        match o {
            Ok(r) => {
                match r.chromatic_index {
                    ChromaticIndex::Exact { value } => {
                        summary.max_chromatic_index = summary.max_chromatic_index.max(Some(value));
                    }
                    ChromaticIndex::Indeterminate { .. } => summary.indeterminate += 1,
                }
                summary.flagged += usize::from(r.flagged);
                summary.results.push(r);
            }
            Err(s) => summary.skipped.push(s),
        }
    }
    summary
}

/// Filled cells `(row, column, symbol)` of an array as above, as a
/// hypergraph with rows `0..p`, columns `p..2p` and symbols `2p..3p`.
pub fn hypergraph_from_cells(p: usize, cells: &[(usize, usize, usize)]) -> Hypergraph3 {
    Hypergraph3 {
        vertices: 3 * p,
        edges: cells.iter().map(|&(r, c, s)| vec![r, p + c, 2 * p + s]).collect(),
        parts: Some((0..3).map(|k| (k * p..(k + 1) * p).collect()).collect()),
    }
}

struct CellSearch {
    p: usize,
    cells: Vec<(usize, usize, usize)>,
    col_count: Vec<usize>,
    sym_count: Vec<usize>,
    col_sym: Vec<Vec<bool>>,
    row_sym: Vec<Vec<bool>>,
}

impl CellSearch {
    fn new(p: usize) -> Self {
        CellSearch {
            p,
            cells: Vec::new(),
            col_count: vec![0; p],
            sym_count: vec![0; p],
            col_sym: vec![vec![false; p]; p],
            row_sym: vec![vec![false; p]; p],
        }
    }

    fn place(&mut self, (r, c, s): (usize, usize, usize), on: bool) {
        if on {
            self.cells.push((r, c, s));
        } else {
            self.cells.pop();
        }
        let d = if on { 1 } else { usize::MAX };
        self.col_count[c] = self.col_count[c].wrapping_add(d);
        self.sym_count[s] = self.sym_count[s].wrapping_add(d);
        self.col_sym[c][s] = on;
        self.row_sym[r][s] = on;
    }

    /// Candidate cells for the next slot of row `r` after column `after`.
    fn options(&self, r: usize, after: Option<usize>) -> Vec<(usize, usize, usize)> {
        let first_new_col = self.col_count.iter().position(|&c| c == 0).unwrap_or(self.p);
        let first_new_sym = self.sym_count.iter().position(|&c| c == 0).unwrap_or(self.p);
        let mut out = Vec::new();
        for c in after.map_or(0, |a| a + 1)..self.p {
            // unused columns and symbols are interchangeable: only try the first
            if self.col_count[c] >= 3 || (self.col_count[c] == 0 && c != first_new_col) {
                continue;
            }
            for s in 0..self.p {
                if self.sym_count[s] >= 3 || self.row_sym[r][s] || self.col_sym[c][s] {
                    continue;
                }
                if self.sym_count[s] == 0 && s != first_new_sym {
                    continue;
                }
                out.push((r, c, s));
            }
        }
        out
    }
}

/// Every valid array with parts of size `p`, one per hypergraph
/// isomorphism class, sorted by canonical code.
pub fn valid_instances_with_parts(p: usize) -> Vec<Hypergraph3> {
    fn fill(
        search: &mut CellSearch,
        r: usize,
        slot: usize,
        after: Option<usize>,
        out: &mut Vec<Vec<(usize, usize, usize)>>,
    ) {
        if r == search.p {
            out.push(search.cells.clone());
            return;
        }
        if slot == 3 {
            fill(search, r + 1, 0, None, out);
            return;
        }
        for cell in search.options(r, after) {
            search.place(cell, true);
            fill(search, r, slot + 1, Some(cell.1), out);
            search.place(cell, false);
        }
    }
    if p < 3 {
        return Vec::new();
    }
    let mut arrays = Vec::new();
    fill(&mut CellSearch::new(p), 0, 0, None, &mut arrays);
    let mut coded: Vec<(Vec<u8>, Hypergraph3)> = arrays
        .into_par_iter()
        .map(|cells| {
            let h = hypergraph_from_cells(p, &cells);
            (h.canonical_code(), h)
        })
        .collect();
    coded.sort_by(|a, b| a.0.cmp(&b.0));
    coded.dedup_by(|a, b| a.0 == b.0);
    coded.into_iter().map(|(_, h)| h).collect()
}

/// Every valid instance with at most `max_edges` hyperedges, one per
/// isomorphism class. Each has `3p` hyperedges for parts of size `p >= 3`.
pub fn valid_instances(max_edges: usize) -> Vec<Hypergraph3> {
    (3..=max_edges / 3).flat_map(valid_instances_with_parts).collect()
}

/// A random valid array with parts of size `p >= 3`, by randomized search
/// with restarts.
pub fn random_instance<R: Rng>(p: usize, rng: &mut R) -> Hypergraph3 {
    assert!(p >= 3, "parts need at least 3 vertices");
    loop {
        let mut search = CellSearch::new(p);
        if random_fill(&mut search, 0, 0, None, rng, &mut 0) {
            return hypergraph_from_cells(p, &search.cells);
        }
    }
}

fn random_fill<R: Rng>(
    search: &mut CellSearch,
    r: usize,
    slot: usize,
    after: Option<usize>,
    rng: &mut R,
    steps: &mut usize,
) -> bool {
    *steps += 1;
    if *steps > 20_000 {
        return false;
    }
    if r == search.p {
        return true;
    }
    if slot == 3 {
        return random_fill(search, r + 1, 0, None, rng, steps);
    }
    let mut options: Vec<_> = (after.map_or(0, |a| a + 1)..search.p)
        .flat_map(|c| (0..search.p).map(move |s| (r, c, s)))
        .filter(|&(r, c, s)| {
            search.col_count[c] < 3 && search.sym_count[s] < 3 && !search.row_sym[r][s] && !search.col_sym[c][s]
        })
        .collect();
    options.shuffle(rng);
    for cell in options {
        search.place(cell, true);
        if random_fill(search, r, slot + 1, Some(cell.1), rng, steps) {
            return true;
        }
        search.place(cell, false);
    }
    false
}

/// The 6-regular 3-colored host of a valid instance, with its vertices
/// shuffled.
pub fn random_decomposed_host<R: Rng>(p: usize, rng: &mut R) -> ColoredGraph {
    let h = random_instance(p, rng);
    let host = host_from_dual(&h).expect("valid instance");
    let mut perm: Vec<usize> = (0..host.n()).collect();
    perm.shuffle(rng);
    let g = host.graph();
    ColoredGraph::from_colored_edges(
        host.n(),
        3,
        g.edges().iter().enumerate().map(|(e, &(u, v))| (perm[u], perm[v], host.color(e))),
    )
    .expect("relabeling keeps the graph simple")
}

/// Distinct isomorphism classes among `instances`.
pub fn distinct_classes(instances: &[Hypergraph3]) -> usize {
    instances.iter().map(Hypergraph3::canonical_code).collect::<HashSet<_>>().len()
}
