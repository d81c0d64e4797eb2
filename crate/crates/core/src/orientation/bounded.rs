//! Classification of a monochromatic part into sink and source sets, and
//! the degree conditions of bounded partial orientations.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::graph::{ColoredGraph, Graph, Mark, PartialOrientation, Vertex};

use super::{BoundParams, OrientError};

/// The vertex sets of one monochromatic part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PartClassification {
    pub part: Vec<Vertex>,
    /// In-degree at least 2 and no nontrivial directed path to another
    /// vertex of in-degree at least 2.
    pub t_minus: Vec<Vertex>,
    /// Vertices with a nontrivial directed path into `t_minus`.
    pub t_plus: Vec<Vertex>,
    /// Remaining vertices incident with an oriented edge.
    pub x_set: Vec<Vertex>,
}

impl PartClassification {
    pub fn is_empty(&self) -> bool {
        self.t_minus.is_empty() && self.t_plus.is_empty() && self.x_set.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// A vertex with an incoming arc has `d + d_in + min(1, d_out) > s`.
    InDegree { vertex: Vertex, value: usize, s: usize },
    /// A vertex has `d + min(1, d_in + d_out) > t - 1`.
    UnorientedDegree { vertex: Vertex, value: usize, t: usize },
    /// The sink set is nonempty but not larger than the source set.
    SinkBalance { t_minus: usize, t_plus: usize },
    /// A part larger than `n` has no oriented edge.
    UnorientedLargePart { size: usize, n: usize },
}

impl Violation {
    /// Number of the violated condition, 1 through 4.
    pub fn condition(&self) -> u8 {
        match self {
            Violation::InDegree { .. } => 1,
            Violation::UnorientedDegree { .. } => 2,
            Violation::SinkBalance { .. } => 3,
            Violation::UnorientedLargePart { .. } => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub classification: PartClassification,
    pub violations: Vec<Violation>,
}

impl BoundVerdict {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `part` is exactly the vertex set of one component of the
/// color-`c` subgraph. Returns it sorted.
fn validate_part(po: &PartialOrientation, part: &[Vertex], c: usize) -> Result<Vec<Vertex>, OrientError> {
    let cg = po.base();
    if c >= cg.k() {
        return Err(crate::graph::GraphError::ColorOutOfRange { color: c, k: cg.k() }.into());
    }
    let mut sorted = part.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() || sorted.len() != part.len() || *sorted.last().unwrap() >= cg.n() {
        return Err(OrientError::NotAComponent);
    }
    let g = cg.graph();
    let mut seen = vec![false; g.n()];
    seen[sorted[0]] = true;
    let mut stack = vec![sorted[0]];
    let mut comp = vec![sorted[0]];
    while let Some(v) = stack.pop() {
        for &(w, e) in g.incident(v) {
            if cg.color(e) == c && !seen[w] {
                seen[w] = true;
                comp.push(w);
                stack.push(w);
            }
        }
    }
    comp.sort_unstable();
    if comp != sorted {
        return Err(OrientError::NotAComponent);
    }
    Ok(sorted)
}

fn classify_sorted(po: &PartialOrientation, part: Vec<Vertex>, c: usize) -> PartClassification {
    let g = po.graph();
    let cg = po.base();
    let mut out_arcs: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    let mut indeg = vec![0usize; g.n()];
    let mut touched = vec![false; g.n()];
    for &v in &part {
        for &(_, e) in g.incident(v) {
            if cg.color(e) != c {
                continue;
            }
            if let Some((from, to)) = po.arc(e) {
                if from == v {
                    out_arcs[v].push(to);
                    indeg[to] += 1;
                }
                touched[v] = true;
            }
        }
    }
    let heavy = |v: Vertex| indeg[v] >= 2;
    // reach[i]: vertices reachable from part[i] by a nontrivial directed path
    let reach: Vec<Vec<Vertex>> = part
        .iter()
        .map(|&v| {
            let mut seen = vec![false; g.n()];
            let mut queue: VecDeque<Vertex> = out_arcs[v].iter().copied().collect();
            let mut found = Vec::new();
            while let Some(w) = queue.pop_front() {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                found.push(w);
                queue.extend(out_arcs[w].iter().copied());
            }
            found
        })
        .collect();
    let t_minus: BTreeSet<Vertex> =
        part.iter().zip(&reach).filter(|&(&v, r)| heavy(v) && !r.iter().any(|&u| heavy(u))).map(|(&v, _)| v).collect();
    let t_plus: BTreeSet<Vertex> =
        part.iter().zip(&reach).filter(|(_, r)| r.iter().any(|u| t_minus.contains(u))).map(|(&v, _)| v).collect();
    let x_set = part.iter().copied().filter(|&v| touched[v] && !t_minus.contains(&v) && !t_plus.contains(&v)).collect();
    PartClassification { part, t_minus: t_minus.into_iter().collect(), t_plus: t_plus.into_iter().collect(), x_set }
}

/// Splits the vertices of one color-`c` part into sinks, sources and the
/// remaining oriented-incident vertices.
pub fn classify_part(po: &PartialOrientation, part: &[Vertex], c: usize) -> Result<PartClassification, OrientError> {
    let part = validate_part(po, part, c)?;
    Ok(classify_sorted(po, part, c))
}

/// Conditions (1)-(3) of an `(s, t)`-bounded orientation for one part.
/// Every violation is listed with its witnessing vertex.
pub fn check_st_bounded(
    po: &PartialOrientation,
    part: &[Vertex],
    c: usize,
    s: usize,
    t: usize,
) -> Result<BoundVerdict, OrientError> {
    let classification = classify_part(po, part, c)?;
    let mut violations = Vec::new();
    for &v in &classification.part {
        let d = po.degrees(v, c)?;
        if d.in_degree > 0 {
            let value = d.unoriented + d.in_degree + d.out_degree.min(1);
            if value > s {
                violations.push(Violation::InDegree { vertex: v, value, s });
            }
        }
        let value = d.unoriented + (d.in_degree + d.out_degree).min(1);
        if value + 1 > t {
            violations.push(Violation::UnorientedDegree { vertex: v, value, t });
        }
    }
    let (minus, plus) = (classification.t_minus.len(), classification.t_plus.len());
    if minus > 0 && minus <= plus {
        violations.push(Violation::SinkBalance { t_minus: minus, t_plus: plus });
    }
    Ok(BoundVerdict { classification, violations })
}

/// Conditions (1)-(4) of an `(n, s, t)`-bounded orientation for one part.
pub fn check_nst_bounded(
    po: &PartialOrientation,
    part: &[Vertex],
    c: usize,
    params: BoundParams,
) -> Result<BoundVerdict, OrientError> {
    let mut verdict = check_st_bounded(po, part, c, params.s, params.t)?;
    let size = verdict.classification.part.len();
    let oriented =
        verdict.classification.part.iter().any(|&v| po.degrees(v, c).is_ok_and(|d| d.in_degree + d.out_degree > 0));
    if size > params.n && !oriented {
        verdict.violations.push(Violation::UnorientedLargePart { size, n: params.n });
    }
    Ok(verdict)
}

/// Checks marks on a connected single-color graph against `params`.
pub fn check_marks(g: &Graph, marks: &[Mark], params: BoundParams) -> Result<BoundVerdict, OrientError> {
    let po = PartialOrientation::new(ColoredGraph::monochrome(g.clone(), 1), marks.to_vec())?;
    let part: Vec<Vertex> = (0..g.n()).collect();
    check_nst_bounded(&po, &part, 0, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_components;
    use crate::testing;

    const BLUE: usize = 0;
    const RED: usize = 1;

    fn marks_from_arcs(g: &Graph, arcs: &[(Vertex, Vertex)]) -> Vec<Mark> {
        let mut marks = vec![Mark::Unoriented; g.edge_count()];
        for &(a, b) in arcs {
            let e = g.edge_id(a, b).unwrap();
            let (u, _) = g.endpoints(e);
            marks[e] = if u == a { Mark::Forward } else { Mark::Backward };
        }
        marks
    }

    fn single(g: &Graph, arcs: &[(Vertex, Vertex)]) -> PartialOrientation {
        PartialOrientation::new(ColoredGraph::monochrome(g.clone(), 1), marks_from_arcs(g, arcs)).unwrap()
    }

    #[test]
    fn unoriented_part_has_empty_classification() {
        let po = single(&Graph::complete(4), &[]);
        let cl = classify_part(&po, &[0, 1, 2, 3], 0).unwrap();
        assert!(cl.is_empty());
    }

    #[test]
    fn single_arc_is_residual() {
        let po = single(&Graph::path(2), &[(0, 1)]);
        let cl = classify_part(&po, &[0, 1], 0).unwrap();
        assert!(cl.t_minus.is_empty() && cl.t_plus.is_empty());
        assert_eq!(cl.x_set, vec![0, 1]);
    }

    #[test]
    fn double_source_configuration() {
        // a = 0 and c = 2 both point at the four common neighbours 1, 3, 4, 5
        let g = testing::four_cycle_with_midpoints(2, 0, 0);
        let arcs: Vec<_> = [1, 3, 4, 5].iter().flat_map(|&v| [(0, v), (2, v)]).collect();
        let po = single(&g, &arcs);
        let cl = classify_part(&po, &(0..6).collect::<Vec<_>>(), 0).unwrap();
        assert_eq!(cl.t_minus, vec![1, 3, 4, 5]);
        assert_eq!(cl.t_plus, vec![0, 2]);
        assert!(cl.x_set.is_empty());
        let verdict = check_st_bounded(&po, &cl.part, 0, 2, 5).unwrap();
        assert!(verdict.passes(), "{:?}", verdict.violations);
    }

    #[test]
    fn chains_of_heavy_vertices() {
        // 0 -> 2 <- 1, 2 -> 5, 3 -> 5 <- 4: only 5 is a terminal heavy vertex
        let g = Graph::new(6, [(0, 2), (1, 2), (2, 5), (3, 5), (4, 5)]).unwrap();
        let po = single(&g, &[(0, 2), (1, 2), (2, 5), (3, 5), (4, 5)]);
        let cl = classify_part(&po, &(0..6).collect::<Vec<_>>(), 0).unwrap();
        assert_eq!(cl.t_minus, vec![5]);
        assert_eq!(cl.t_plus, vec![0, 1, 2, 3, 4]);
        let verdict = check_st_bounded(&po, &cl.part, 0, 3, 5).unwrap();
        assert!(verdict.violations.contains(&Violation::SinkBalance { t_minus: 1, t_plus: 5 }));
    }

    #[test]
    fn rejects_non_components() {
        let po = single(&Graph::path(3), &[]);
        assert!(matches!(classify_part(&po, &[0, 1], 0), Err(OrientError::NotAComponent)));
        assert!(matches!(classify_part(&po, &[], 0), Err(OrientError::NotAComponent)));
        assert!(classify_part(&po, &[0, 1, 2], 1).is_err());
    }

    #[test]
    fn figure_parts_are_bounded() {
        let po = testing::two_colored_example();
        let blue_k4 = [0, 1, 2, 3];
        let k4 = PartialOrientation::unoriented(ColoredGraph::monochrome(Graph::complete(4), 1));
        let verdict = check_st_bounded(&k4, &blue_k4, 0, 1, 4).unwrap();
        assert!(verdict.passes());

        let red = po.base().color_subgraph(RED).unwrap();
        for comp in connected_components(&red) {
            if comp.len() > 1 {
                let v = check_nst_bounded(&po, &comp, RED, BoundParams::P5).unwrap();
                assert!(v.passes(), "{comp:?}: {:?}", v.violations);
            }
        }
        let blue = po.base().color_subgraph(BLUE).unwrap();
        for comp in connected_components(&blue) {
            if comp.len() > 1 {
                let v = check_st_bounded(&po, &comp, BLUE, 1, 4).unwrap();
                assert!(v.passes(), "{comp:?}: {:?}", v.violations);
            }
        }
    }

    #[test]
    fn in_and_out_arc_violates_first_condition() {
        let po = single(&Graph::path(3), &[(0, 1), (1, 2)]);
        let verdict = check_st_bounded(&po, &[0, 1, 2], 0, 1, 4).unwrap();
        assert_eq!(verdict.violations, vec![Violation::InDegree { vertex: 1, value: 2, s: 1 }]);
        assert_eq!(verdict.violations[0].condition(), 1);
    }

    #[test]
    fn size_condition() {
        let c6 = Graph::cycle(6);
        let v = check_marks(&c6, &[Mark::Unoriented; 6], BoundParams::P5).unwrap();
        assert_eq!(v.violations, vec![Violation::UnorientedLargePart { size: 6, n: 5 }]);
        let c5 = Graph::cycle(5);
        assert!(check_marks(&c5, &[Mark::Unoriented; 5], BoundParams::P5).unwrap().passes());
    }
}
