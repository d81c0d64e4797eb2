//! Simple graphs, total edge colorings, partial orientations and the
//! uncolored multigraphs used by the main-part pipeline.
//!
//! Vertices are dense indices `0..n`. Edges are stored once, as sorted pairs
//! `(u, v)` with `u < v`, in lexicographic order; the position of an edge in
//! that list is its [`EdgeId`] and every per-edge map (colors, marks) is a
//! plain vector indexed by it.

use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("color {color} is outside 0..{k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("expected {expected} per-edge entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no edge between {0} and {1}")]
    MissingEdge(Vertex, Vertex),
    #[error("multigraph edge label {0} is used twice")]
    DuplicateLabel(usize),
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    /// Pairs may be given in either order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted(n, edges)
    }

    /// The path `0 - 1 - ... - (n-1)` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// The star on `n` vertices, centered at vertex 0.
    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (0, v))).expect("star edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("bipartite edges are valid")
    }

    /// Builds a graph from an adjacency predicate evaluated on all pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(Vertex, Vertex) -> bool) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Incident `(neighbor, edge)` pairs, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u].binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || connected_components(self).len() == 1
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Neighborhood bitmasks; only for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask views need n <= 64");
        (0..self.n).map(|v| self.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect()
    }

    /// The subgraph induced by `vertices` (relabelled `0..len` in the given
    /// order) together with the local-to-global vertex map.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
            }
        }
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph is simple");
        (g, vertices.to_vec())
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation preserves simplicity")
    }

    /// The spanning subgraph on the given edge ids.
    pub fn spanning_subgraph(&self, ids: impl IntoIterator<Item = EdgeId>) -> Graph {
        let mut edges: Vec<_> = ids.into_iter().map(|e| self.edges[e]).collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(self.n, edges)
    }

    /// Disjoint union, with `other` shifted past the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges.iter().copied().chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
        .expect("disjoint union is simple")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Partition of the vertex set into maximal connected sets. Blocks are sorted
/// internally and listed by their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut block = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    block.push(w);
                    stack.push(w);
                }
            }
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

/// A graph with a total coloring of its edges by `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    graph: Graph,
    k: usize,
    colors: Vec<usize>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, k: usize, colors: Vec<usize>) -> Result<Self, GraphError> {
        if colors.len() != graph.edge_count() {
            return Err(GraphError::LengthMismatch { expected: graph.edge_count(), got: colors.len() });
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= k) {
            return Err(GraphError::ColorOutOfRange { color, k });
        }
        Ok(ColoredGraph { graph, k, colors })
    }

    /// Builds from `(u, v, color)` triples.
    pub fn from_colored_edges<I>(n: usize, k: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, usize)>,
    {
        let triples: Vec<_> = edges.into_iter().collect();
        let graph = Graph::new(n, triples.iter().map(|&(u, v, _)| (u, v)))?;
        let mut colors = vec![0; graph.edge_count()];
        for &(u, v, c) in &triples {
            colors[graph.edge_id(u, v).expect("edge was inserted")] = c;
        }
        Self::new(graph, k, colors)
    }

    /// Every edge of `graph` in color 0 of a `k`-coloring.
    pub fn monochrome(graph: Graph, k: usize) -> Self {
        let colors = vec![0; graph.edge_count()];
        ColoredGraph { graph, k: k.max(1), colors }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.colors[e]
    }

    pub fn color_between(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.graph.edge_id(u, v).map(|e| self.colors[e])
    }

    /// Edge ids of color `c`.
    pub fn class_edges(&self, c: usize) -> impl Iterator<Item = EdgeId> + '_ {
        self.colors.iter().enumerate().filter(move |&(_, &col)| col == c).map(|(e, _)| e)
    }

    /// Spanning subgraph formed by the edges of color `c`.
    pub fn color_subgraph(&self, c: usize) -> Result<Graph, GraphError> {
        if c >= self.k {
            return Err(GraphError::ColorOutOfRange { color: c, k: self.k });
        }
        Ok(self.graph.spanning_subgraph(self.class_edges(c)))
    }

    /// Number of edges of color `c` at `v`.
    pub fn color_degree(&self, v: Vertex, c: usize) -> usize {
        self.graph.incident(v).iter().filter(|&&(_, e)| self.colors[e] == c).count()
    }
}

/// Orientation state of one edge. `Forward` points from the smaller endpoint
/// to the larger one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mark {
    #[default]
    Unoriented,
    Forward,
    Backward,
}

impl Mark {
    /// The mark on edge `(min(u,v), max(u,v))` that points from `from` to `to`.
    pub fn arc(from: Vertex, to: Vertex) -> Mark {
        if from < to {
            Mark::Forward
        } else {
            Mark::Backward
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Mark::Unoriented => 0,
            Mark::Forward => 1,
            Mark::Backward => 2,
        }
    }

    pub fn from_code(code: u8) -> Option<Mark> {
        match code {
            0 => Some(Mark::Unoriented),
            1 => Some(Mark::Forward),
            2 => Some(Mark::Backward),
            _ => None,
        }
    }

    /// Tail and head of an oriented edge with endpoints `(u, v)`, `u < v`.
    pub fn direct(self, (u, v): (Vertex, Vertex)) -> Option<(Vertex, Vertex)> {
        match self {
            Mark::Unoriented => None,
            Mark::Forward => Some((u, v)),
            Mark::Backward => Some((v, u)),
        }
    }
}

/// Per-color degree triple at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Degrees {
    pub unoriented: usize,
    pub in_degree: usize,
    pub out_degree: usize,
}

/// A colored graph with a mark on every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialOrientation {
    base: ColoredGraph,
    marks: Vec<Mark>,
}

impl PartialOrientation {
    pub fn unoriented(base: ColoredGraph) -> Self {
        let marks = vec![Mark::Unoriented; base.graph().edge_count()];
        PartialOrientation { base, marks }
    }

    pub fn new(base: ColoredGraph, marks: Vec<Mark>) -> Result<Self, GraphError> {
        if marks.len() != base.graph().edge_count() {
            return Err(GraphError::LengthMismatch { expected: base.graph().edge_count(), got: marks.len() });
        }
        Ok(PartialOrientation { base, marks })
    }

    pub fn base(&self) -> &ColoredGraph {
        &self.base
    }

    pub fn graph(&self) -> &Graph {
        self.base.graph()
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn mark(&self, e: EdgeId) -> Mark {
        self.marks[e]
    }

    /// Orients the edge `{from, to}` as `from -> to`.
    pub fn set_arc(&mut self, from: Vertex, to: Vertex) -> Result<(), GraphError> {
        let e = self.graph().edge_id(from, to).ok_or(GraphError::MissingEdge(from, to))?;
        self.marks[e] = Mark::arc(from, to);
        Ok(())
    }

    /// `(tail, head)` of edge `e` if it is oriented.
    pub fn arc(&self, e: EdgeId) -> Option<(Vertex, Vertex)> {
        self.marks[e].direct(self.graph().endpoints(e))
    }

    pub fn is_oriented(&self, e: EdgeId) -> bool {
        self.marks[e] != Mark::Unoriented
    }

    /// Unoriented, in- and out-degree of `v` among the edges of color `c`.
    pub fn degrees(&self, v: Vertex, c: usize) -> Result<Degrees, GraphError> {
        let n = self.base.n();
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        if c >= self.base.k() {
            return Err(GraphError::ColorOutOfRange { color: c, k: self.base.k() });
        }
        let mut d = Degrees::default();
        for &(_, e) in self.graph().incident(v) {
            if self.base.color(e) != c {
                continue;
            }
            match self.arc(e) {
                None => d.unoriented += 1,
                Some((tail, _)) if tail == v => d.out_degree += 1,
                Some(_) => d.in_degree += 1,
            }
        }
        Ok(d)
    }

    /// Number of oriented edges of color `c`.
    pub fn oriented_count(&self, c: usize) -> usize {
        (0..self.marks.len()).filter(|&e| self.base.color(e) == c && self.is_oriented(e)).count()
    }
}

/// An undirected multigraph whose edges carry unique labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    labels: Vec<usize>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new(), labels: Vec::new() }
    }

    /// Adds an edge and returns its index.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, label: usize) -> Result<usize, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::OutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.labels.contains(&label) {
            return Err(GraphError::DuplicateLabel(label));
        }
        self.edges.push((u, v));
        self.labels.push(label);
        Ok(self.edges.len() - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(GraphError::OutOfRange { .. })));
    }

    #[test]
    fn color_subgraph_filters_edges() {
        let k3 = ColoredGraph::from_colored_edges(3, 2, [(0, 1, 0), (1, 2, 0), (0, 2, 1)]).unwrap();
        let red = k3.color_subgraph(0).unwrap();
        assert_eq!(red.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(crate::detect::longest_path_order(&red), 3);
        assert_eq!(k3.color_subgraph(2), Err(GraphError::ColorOutOfRange { color: 2, k: 2 }));

        let mono = ColoredGraph::monochrome(Graph::complete(4), 2);
        let empty = mono.color_subgraph(1).unwrap();
        assert_eq!(empty.n(), 4);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn figure_one_blue_class() {
        let po = crate::testing::two_colored_example();
        let blue = po.base().color_subgraph(0).unwrap();
        // K4 (6 edges) + edge 9-10 + four arcs.
        assert_eq!(blue.edge_count(), 11);
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(blue.has_edge(a, b));
            }
        }
        assert!(blue.has_edge(8, 9));
        let comps: Vec<_> = connected_components(&blue).into_iter().filter(|c| c.len() > 1).collect();
        assert_eq!(comps, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7, 8, 9]]);
    }

    #[test]
    fn degree_triples() {
        let po = crate::testing::two_colored_example();
        // v5 in red: unoriented to v3 and v6, four arcs out.
        assert_eq!(po.degrees(4, 1).unwrap(), Degrees { unoriented: 2, in_degree: 0, out_degree: 4 });
        let iso = PartialOrientation::unoriented(ColoredGraph::monochrome(Graph::empty(3), 1));
        assert_eq!(iso.degrees(2, 0).unwrap(), Degrees::default());

        let mut star = PartialOrientation::unoriented(ColoredGraph::monochrome(Graph::star(5), 1));
        for leaf in 1..5 {
            star.set_arc(0, leaf).unwrap();
        }
        assert_eq!(star.degrees(0, 0).unwrap(), Degrees { unoriented: 0, in_degree: 0, out_degree: 4 });
        assert!(star.degrees(5, 0).is_err());
    }

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(connected_components(&Graph::empty(3)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(connected_components(&Graph::complete(5)), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn multigraph_counts_parallel_edges() {
        let mut mg = Multigraph::new(2);
        for label in 0..3 {
            mg.add_edge(0, 1, label).unwrap();
        }
        assert_eq!(mg.multiplicity(1, 0), 3);
        assert_eq!(mg.max_degree(), 3);
        assert_eq!(mg.add_edge(0, 1, 2), Err(GraphError::DuplicateLabel(2)));
    }
}
