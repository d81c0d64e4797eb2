//! From monochromatic parts to a proper vertex coloring: when every vertex
//! of a 2-colored graph lies in one part of each color, the parts form a
//! bipartite multigraph with one edge per vertex, and a proper edge coloring
//! of that multigraph (König) is a proper vertex coloring of the graph.
//!
//! Also checks empirically that bounded partial orientations of graphs with
//! large minimum degree leave every part unoriented.

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{connected_components, ColoredGraph, GraphError, Multigraph, PartialOrientation, Vertex};
use crate::orientation::{check_st_bounded, classify_part, BoundParams, OrientError, PartClassification, Violation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("the pipeline needs exactly 2 colors, got {0}")]
    NotTwoColors(usize),
    #[error("vertex {vertex} lies in {parts} monochromatic part(s), needs 2")]
    VertexInFewerThanTwoParts { vertex: Vertex, parts: usize },
    #[error("part {part} is not a component of color {color}")]
    NotAPart { part: usize, color: usize },
    #[error("multigraph edge {edge} joins two vertices on the same side")]
    NotBipartite { edge: usize },
    #[error("side assignment has {found} entries for {n} vertices")]
    SideCount { n: usize, found: usize },
    #[error("edge coloring is not proper at multigraph vertex {vertex}")]
    ImproperEdgeColoring { vertex: Vertex },
    #[error("adjacent vertices {u} and {v} received the same color")]
    ImproperVertexColoring { u: Vertex, v: Vertex },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A connected component (with at least one edge) of one color class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub color: usize,
    pub vertices: Vec<Vertex>,
}

/// All monochromatic parts, by color and then by least vertex. Vertices
/// with no edge of a color are not parts of that color.
pub fn monochromatic_parts(cg: &ColoredGraph) -> Vec<Part> {
    (0..cg.k())
        .flat_map(|color| {
            let class = cg.color_subgraph(color).expect("color in range");
            connected_components(&class)
                .into_iter()
                .filter(|c| c.len() > 1)
                .map(move |vertices| Part { color, vertices })
        })
        .collect()
}

/// Parts as multigraph vertices, with one edge per graph vertex joining its
/// two parts, labeled by that vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainPartMultigraph {
    pub parts: Vec<Part>,
    pub multigraph: Multigraph,
}

impl MainPartMultigraph {
    /// Side of each multigraph vertex: the color of its part.
    pub fn sides(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.color).collect()
    }

    /// Index of the multigraph edge standing for each graph vertex.
    pub fn edge_of_vertex(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (e, &label) in self.multigraph.labels().iter().enumerate() {
            out[label] = e;
        }
        out
    }
}

/// Builds the multigraph on `parts`. Every vertex of `cg` must lie in a
/// part of each of the two colors.
pub fn build_main_part_multigraph(cg: &ColoredGraph, parts: &[Part]) -> Result<MainPartMultigraph, DecomposeError> {
    if cg.k() != 2 {
        return Err(DecomposeError::NotTwoColors(cg.k()));
    }
    let mut owner = vec![[usize::MAX; 2]; cg.n()];
    for (i, part) in parts.iter().enumerate() {
        if part.color >= 2 || !is_component(cg, part) {
            return Err(DecomposeError::NotAPart { part: i, color: part.color });
        }
        for &v in &part.vertices {
            owner[v][part.color] = i;
        }
    }
    let mut multigraph = Multigraph::new(parts.len());
    for (v, [blue, red]) in owner.into_iter().enumerate() {
        if blue == usize::MAX || red == usize::MAX {
            let count = usize::from(blue != usize::MAX) + usize::from(red != usize::MAX);
            return Err(DecomposeError::VertexInFewerThanTwoParts { vertex: v, parts: count });
        }
        multigraph.add_edge(blue, red, v)?;
    }
    let mpm = MainPartMultigraph { parts: parts.to_vec(), multigraph };
    check_bipartite(&mpm.multigraph, &mpm.sides())?;
    Ok(mpm)
}

fn is_component(cg: &ColoredGraph, part: &Part) -> bool {
    let po = PartialOrientation::unoriented(cg.clone());
    classify_part(&po, &part.vertices, part.color).is_ok()
}

fn check_bipartite(mg: &Multigraph, sides: &[usize]) -> Result<(), DecomposeError> {
    if sides.len() != mg.n() {
        return Err(DecomposeError::SideCount { n: mg.n(), found: sides.len() });
    }
    match mg.edges().iter().position(|&(u, v)| sides[u] == sides[v]) {
        Some(edge) => Err(DecomposeError::NotBipartite { edge }),
        None => Ok(()),
    }
}

/// Proper edge coloring of a bipartite multigraph with exactly `max_degree`
/// colors. Edges are colored in order; when the least color free at one
/// end is busy at the other, the two-colored path from that end is flipped.
/// `sides[v]` is 0 or 1.
pub fn konig_edge_coloring(mg: &Multigraph, sides: &[usize]) -> Result<Vec<usize>, DecomposeError> {
    check_bipartite(mg, sides)?;
    let delta = mg.max_degree();
    let mut at = vec![vec![usize::MAX; delta]; mg.n()];
    let mut color = vec![usize::MAX; mg.edges().len()];
    let free = |at: &[Vec<usize>], v: Vertex| at[v].iter().position(|&e| e == usize::MAX).expect("degree below max");
    for (e, &(u, v)) in mg.edges().iter().enumerate() {
        let a = free(&at, u);
        if at[v][a] != usize::MAX {
            let b = free(&at, v);
            // the a/b path from v never reaches u in a bipartite graph
            let mut path = Vec::new();
            let (mut x, mut c) = (v, a);
            while at[x][c] != usize::MAX {
                let f = at[x][c];
                path.push(f);
                let (p, q) = mg.edges()[f];
                x = if p == x { q } else { p };
                c = if c == a { b } else { a };
            }
            for &f in &path {
                let (p, q) = mg.edges()[f];
                at[p][color[f]] = usize::MAX;
                at[q][color[f]] = usize::MAX;
            }
            for &f in &path {
                let (p, q) = mg.edges()[f];
                color[f] = if color[f] == a { b } else { a };
                at[p][color[f]] = f;
                at[q][color[f]] = f;
            }
        }
        color[e] = a;
        at[u][a] = e;
        at[v][a] = e;
    }
    Ok(color)
}

/// Checks that no two edges at a vertex share a color.
pub fn is_proper_edge_coloring(mg: &Multigraph, colors: &[usize]) -> Result<(), DecomposeError> {
    for v in 0..mg.n() {
        let mut seen: Vec<usize> =
            mg.edges().iter().zip(colors).filter(|(&(a, b), _)| a == v || b == v).map(|(_, &c)| c).collect();
        let total = seen.len();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != total {
            return Err(DecomposeError::ImproperEdgeColoring { vertex: v });
        }
    }
    Ok(())
}

/// Gives each graph vertex the color of its multigraph edge and checks the
/// result is proper on the underlying graph.
pub fn induced_vertex_coloring(
    cg: &ColoredGraph,
    mpm: &MainPartMultigraph,
    edge_colors: &[usize],
) -> Result<Vec<usize>, DecomposeError> {
    is_proper_edge_coloring(&mpm.multigraph, edge_colors)?;
    let edge_of = mpm.edge_of_vertex(cg.n());
    let colors: Vec<usize> = edge_of.iter().map(|&e| edge_colors[e]).collect();
    if let Some(&(u, v)) = cg.graph().edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
        return Err(DecomposeError::ImproperVertexColoring { u, v });
    }
    Ok(colors)
}

/// Every stage of the part-to-coloring pipeline on one graph.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub mpm: MainPartMultigraph,
    pub edge_colors: Vec<usize>,
    pub vertex_colors: Vec<usize>,
    pub max_degree: usize,
    pub colors_used: usize,
}

impl PipelineReport {
    pub fn to_json(&self) -> Value {
        let mg = &self.mpm.multigraph;
        json!({
            "parts": self.mpm.parts,
            "multigraph": {
                "vertices": mg.n(),
                "edges": mg.edges().iter().zip(mg.labels()).map(|(&(u, v), &l)| [u, v, l]).collect::<Vec<_>>(),
                "max_degree": self.max_degree,
            },
            "edge_coloring": self.edge_colors,
            "vertex_coloring": self.vertex_colors,
            "colors_used": self.colors_used,
            "proper": true,
        })
    }
}

/// Parts, multigraph, König coloring and induced vertex coloring. The
/// graph's structure, not freeness from any target, is what matters here.
pub fn run_pipeline(cg: &ColoredGraph) -> Result<PipelineReport, DecomposeError> {
    let parts = monochromatic_parts(cg);
    let mpm = build_main_part_multigraph(cg, &parts)?;
    let edge_colors = konig_edge_coloring(&mpm.multigraph, &mpm.sides())?;
    let vertex_colors = induced_vertex_coloring(cg, &mpm, &edge_colors)?;
    let mut used = vertex_colors.clone();
    used.sort_unstable();
    used.dedup();
    Ok(PipelineReport {
        max_degree: mpm.multigraph.max_degree(),
        colors_used: used.len(),
        mpm,
        edge_colors,
        vertex_colors,
    })
}

/// A hypothesis of the lemma that does not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "hypothesis", rename_all = "snake_case")]
pub enum HypothesisFailure {
    /// `n > s + t - 1` or `n > 2s + 2` fails.
    Params {
        n: usize,
        s: usize,
        t: usize,
    },
    MinDegree {
        vertex: Vertex,
        degree: usize,
        required: usize,
    },
    NotBounded {
        color: usize,
        part: Vec<Vertex>,
        violations: Vec<Violation>,
    },
}

/// A part left with oriented edges although every hypothesis holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConclusionFailure {
    pub color: usize,
    pub classification: PartClassification,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaVerdict {
    /// Hypotheses hold and every part is unoriented.
    Holds,
    /// Some hypothesis fails, so nothing is concluded.
    HypothesisFailed,
    /// Hypotheses hold yet some part is oriented.
    CounterexampleCandidate,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub verdict: LemmaVerdict,
    pub hypothesis_failures: Vec<HypothesisFailure>,
    pub conclusion_failures: Vec<ConclusionFailure>,
    /// Total in-degree and out-degree over all vertices (always equal).
    pub in_degree_sum: usize,
    pub out_degree_sum: usize,
}

/// Checks the hypotheses (admissible parameters, minimum degree at least
/// `n`, every part `(s, t)`-bounded) and, separately, the conclusion that
/// no part has an oriented edge.
pub fn validate_technical_lemma(po: &PartialOrientation, params: BoundParams) -> Result<LemmaReport, OrientError> {
    let cg = po.base();
    let g = po.graph();
    let mut hypothesis_failures = Vec::new();
    if !params.is_admissible() {
        hypothesis_failures.push(HypothesisFailure::Params { n: params.n, s: params.s, t: params.t });
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < params.n) {
        hypothesis_failures.push(HypothesisFailure::MinDegree { vertex: v, degree: g.degree(v), required: params.n });
    }
    let mut conclusion_failures = Vec::new();
    for part in monochromatic_parts(cg) {
        let verdict = check_st_bounded(po, &part.vertices, part.color, params.s, params.t)?;
        if !verdict.passes() {
            hypothesis_failures.push(HypothesisFailure::NotBounded {
                color: part.color,
                part: part.vertices.clone(),
                violations: verdict.violations,
            });
        }
        if !verdict.classification.is_empty() {
            conclusion_failures.push(ConclusionFailure { color: part.color, classification: verdict.classification });
        }
    }
    let (mut in_sum, mut out_sum) = (0, 0);
    for v in 0..g.n() {
        for c in 0..cg.k() {
            let d = po.degrees(v, c)?;
            in_sum += d.in_degree;
            out_sum += d.out_degree;
        }
    }
    let verdict = match (hypothesis_failures.is_empty(), conclusion_failures.is_empty()) {
        (false, _) => LemmaVerdict::HypothesisFailed,
        (true, true) => LemmaVerdict::Holds,
        (true, false) => LemmaVerdict::CounterexampleCandidate,
    };
    Ok(LemmaReport {
        verdict,
        hypothesis_failures,
        conclusion_failures,
        in_degree_sum: in_sum,
        out_degree_sum: out_sum,
    })
}
