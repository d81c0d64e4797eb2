//! Orientation constructors for connected P5-, P6- and P7-free graphs.
//!
//! Each constructor produces an ordered list of candidate orientations,
//! starting with the case analysis of the goodness proofs, and returns the
//! first one that passes the bounded check for its family. A graph where
//! every candidate fails is reported as an error rather than returned
//! unverified.

use std::collections::VecDeque;

use serde::Serialize;

use crate::detect::{find_path, find_pendant_structures, longest_cycle, PendantKind, PendantStructure};
use crate::graph::{Graph, Mark, Vertex};

use super::{check_marks, BoundParams, BoundVerdict, OrientError};

/// Which construction produced an orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Nothing oriented: a longest cycle spans the part.
    MainPart,
    /// Only edges at degree-one vertices, each toward its leaf.
    PendantEdges,
    /// Pendant edges, stars and triangles in standard orientation.
    StandardStructures,
    /// Two cycle vertices `a`, `c` orient every edge away from themselves,
    /// so all common neighbours become sinks.
    DoubleSource,
    /// As [`Rule::DoubleSource`], but common neighbours that carry pendant
    /// edges keep their edges to `a` and `c` unoriented.
    DoubleSourceUnloaded,
    /// One arc from `a` to the first common neighbour and one from `c` to
    /// the second, plus standard pendant orientation.
    SplitSources,
    /// Breadth-first orientation away from a longest cycle.
    AwayFromCycle,
    /// Every edge of a tree oriented away from a root.
    AwayFromRoot,
}

impl Rule {
    /// Whether the rule is one the case analysis prescribes, as opposed to
    /// a fallback used when the prescribed orientation fails the check.
    pub fn is_fallback(self) -> bool {
        matches!(self, Rule::DoubleSourceUnloaded | Rule::AwayFromCycle)
    }
}

/// A verified orientation of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub marks: Vec<Mark>,
    pub rule: Rule,
    pub verdict: BoundVerdict,
}

impl Construction {
    pub fn arcs<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
        self.marks.iter().enumerate().filter_map(|(e, m)| m.direct(g.endpoints(e)))
    }
}

struct Marks<'g> {
    g: &'g Graph,
    marks: Vec<Mark>,
}

impl<'g> Marks<'g> {
    fn new(g: &'g Graph) -> Self {
        Marks { g, marks: vec![Mark::Unoriented; g.edge_count()] }
    }

    /// Orients `from -> to` unless the edge already carries a direction.
    fn arc(&mut self, from: Vertex, to: Vertex) -> &mut Self {
        let e = self.g.edge_id(from, to).expect("arc along an existing edge");
        if self.marks[e] == Mark::Unoriented {
            self.marks[e] = Mark::arc(from, to);
        }
        self
    }

    fn arcs(&mut self, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> &mut Self {
        for (a, b) in arcs {
            self.arc(a, b);
        }
        self
    }

    fn done(&mut self) -> Vec<Mark> {
        std::mem::take(&mut self.marks)
    }
}

fn precheck(g: &Graph, order: usize) -> Result<(), OrientError> {
    if g.n() == 0 || !g.is_connected() {
        return Err(OrientError::NotConnected);
    }
    match find_path(g, order) {
        Some(witness) => Err(OrientError::ContainsPath { order, witness }),
        None => Ok(()),
    }
}

fn pick(g: &Graph, params: BoundParams, candidates: Vec<(Rule, Vec<Mark>)>) -> Result<Construction, OrientError> {
    let mut first_failure = None;
    let mut tried: Vec<Vec<Mark>> = Vec::new();
    for (rule, marks) in candidates {
        if tried.contains(&marks) {
            continue;
        }
        let verdict = check_marks(g, &marks, params)?;
        if verdict.passes() {
            if first_failure.is_some() {
                log::debug!("orientation fell back to {rule:?}");
            }
            return Ok(Construction { marks, rule, verdict });
        }
        first_failure.get_or_insert(verdict.violations);
        tried.push(marks);
    }
    Err(OrientError::SelfCheckFailed { violations: first_failure.unwrap_or_default() })
}

/// Arcs of the standard orientation: a pendant edge toward its leaf, a
/// pendant star along paths from the attach vertex, a pendant triangle with
/// both edges at the attach vertex pointing away from it.
fn standard_arcs(s: &PendantStructure) -> Vec<(Vertex, Vertex)> {
    let v = s.attach;
    match s.kind {
        PendantKind::PendantEdge => vec![(v, s.members[0])],
        PendantKind::PendantTriangle => vec![(v, s.members[0]), (v, s.members[1])],
        PendantKind::PendantStar => {
            let center = s.members[0];
            std::iter::once((v, center)).chain(s.members[1..].iter().map(|&w| (center, w))).collect()
        }
    }
}

/// Standard orientation of one pendant structure of `g`.
pub fn standard_orient(g: &Graph, structure: &PendantStructure) -> Result<Vec<Mark>, OrientError> {
    if !structure.is_valid_in(g) {
        return Err(OrientError::MalformedStructure);
    }
    Ok(Marks::new(g).arcs(standard_arcs(structure)).done())
}

/// Edges at degree-one vertices, each toward the leaf. An isolated edge is
/// oriented toward its higher-indexed end.
fn leaf_arcs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    g.edges()
        .iter()
        .filter_map(|&(u, v)| match (g.degree(u), g.degree(v)) {
            (_, 1) => Some((u, v)),
            (1, _) => Some((v, u)),
            _ => None,
        })
        .collect()
}

fn structure_arcs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    find_pendant_structures(g).iter().flat_map(standard_arcs).collect()
}

/// Orients every edge from the endpoint nearer to `sources` to the farther
/// one; edges between equidistant vertices stay unoriented.
fn away_from(g: &Graph, sources: &[Vertex]) -> Vec<Mark> {
    let mut level = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        level[s] = 0;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if level[w] == usize::MAX {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    g.edges()
        .iter()
        .map(|&(u, v)| match level[u].cmp(&level[v]) {
            std::cmp::Ordering::Less => Mark::Forward,
            std::cmp::Ordering::Greater => Mark::Backward,
            std::cmp::Ordering::Equal => Mark::Unoriented,
        })
        .collect()
}

/// Orients every edge of a tree away from `root`.
pub fn orient_away_from_root(g: &Graph, root: Vertex) -> Vec<Mark> {
    away_from(g, &[root])
}

fn common_neighbors(g: &Graph, a: Vertex, c: Vertex) -> Vec<Vertex> {
    g.neighbors(a).filter(|&v| g.has_edge(v, c)).collect::<std::collections::BTreeSet<_>>().into_iter().collect()
}

/// Every edge at `a` or `c`, other than `a`-`c` itself and edges to
/// `excluded`, oriented away from `a` or `c`.
fn hub_arcs(g: &Graph, a: Vertex, c: Vertex, excluded: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    [a, c]
        .into_iter()
        .flat_map(|h| g.neighbors(h).filter(move |&w| w != a && w != c && !excluded.contains(&w)).map(move |w| (h, w)))
        .collect()
}

/// Candidates when a longest cycle is the 4-cycle `a, b, c, d`.
fn four_cycle_candidates(g: &Graph, cycle: &[Vertex]) -> Vec<(Rule, Vec<Mark>)> {
    let structures = structure_arcs(g);
    let mut out = Vec::new();
    let pairs = [(cycle[0], cycle[2]), (cycle[1], cycle[3])];
    let hub = pairs.into_iter().map(|(a, c)| (a, c, common_neighbors(g, a, c))).find(|(_, _, mids)| mids.len() >= 3);
    if let Some((a, c, mids)) = hub {
        out.push((Rule::DoubleSource, Marks::new(g).arcs(hub_arcs(g, a, c, &[])).arcs(structures.clone()).done()));
        let (loaded, unloaded): (Vec<_>, Vec<_>) = mids.iter().partition(|&&v| g.degree(v) > 2);
        if !loaded.is_empty() && unloaded.len() >= 3 {
            out.push((
                Rule::DoubleSourceUnloaded,
                Marks::new(g).arcs(hub_arcs(g, a, c, &loaded)).arcs(structures.clone()).done(),
            ));
        }
        out.push((Rule::SplitSources, Marks::new(g).arc(a, mids[0]).arc(c, mids[1]).arcs(structures.clone()).done()));
    }
    out.push((Rule::StandardStructures, Marks::new(g).arcs(structures).done()));
    out.push((Rule::AwayFromCycle, away_from(g, cycle)));
    out
}

/// Candidates when a longest cycle is a 5-cycle in a P7-free graph.
fn five_cycle_candidates(g: &Graph, cycle: &[Vertex]) -> Vec<(Rule, Vec<Mark>)> {
    let on_cycle = |v: Vertex| cycle.contains(&v);
    let inner: Vec<Vertex> = (0..g.n()).filter(|&v| !on_cycle(v) && g.degree(v) > 1).collect();
    let leaves = leaf_arcs(g);
    // labelings a..e of the cycle under which every off-cycle vertex of
    // degree > 1 is a common neighbour of a and c
    let mut labelings: Vec<[Vertex; 5]> = (0..5)
        .flat_map(|r| {
            [1, 4].map(|step| {
                let mut lab = [0; 5];
                for (i, slot) in lab.iter_mut().enumerate() {
                    *slot = cycle[(r + i * step) % 5];
                }
                lab
            })
        })
        .filter(|lab| inner.iter().all(|&v| g.has_edge(lab[0], v) && g.has_edge(v, lab[2])))
        .collect();
    labelings.sort_unstable();
    let mut out = Vec::new();
    for [a, b, c, _, _] in labelings {
        let mids: Vec<Vertex> = std::iter::once(b).chain(inner.iter().copied()).collect();
        let mut marks = Marks::new(g);
        let rule = match mids.len() {
            1 => Rule::PendantEdges,
            2 => {
                marks.arc(a, mids[0]).arc(c, mids[1]);
                Rule::SplitSources
            }
            _ => {
                marks.arcs(mids.iter().flat_map(|&v| [(a, v), (c, v)]));
                Rule::DoubleSource
            }
        };
        out.push((rule, marks.arcs(leaves.clone()).done()));
    }
    out.push((Rule::PendantEdges, Marks::new(g).arcs(leaves).done()));
    out.push((Rule::AwayFromCycle, away_from(g, cycle)));
    out
}

fn triangle_candidates(g: &Graph, cycle: &[Vertex]) -> Vec<(Rule, Vec<Mark>)> {
    vec![
        (Rule::StandardStructures, Marks::new(g).arcs(structure_arcs(g)).done()),
        (Rule::AwayFromCycle, away_from(g, cycle)),
    ]
}

/// Orients the pendant edges of a connected P5-free graph toward their
/// leaves, verified `(5, 1, 4)`-bounded.
pub fn orient_p5_free(g: &Graph) -> Result<Construction, OrientError> {
    precheck(g, 5)?;
    let marks = Marks::new(g).arcs(leaf_arcs(g)).done();
    pick(g, BoundParams::P5, vec![(Rule::PendantEdges, marks)])
}

/// A `(7, 2, 5)`-bounded orientation of a connected P6-free graph, chosen
/// by the length of a longest cycle.
pub fn orient_p6_free(g: &Graph) -> Result<Construction, OrientError> {
    precheck(g, 6)?;
    let candidates = match longest_cycle(g) {
        None => vec![(Rule::AwayFromRoot, orient_away_from_root(g, 0))],
        Some(c) if c.len() >= 5 => vec![(Rule::MainPart, vec![Mark::Unoriented; g.edge_count()])],
        Some(c) if c.len() == 4 => four_cycle_candidates(g, &c),
        Some(c) => triangle_candidates(g, &c),
    };
    pick(g, BoundParams::P6, candidates)
}

/// An `(8, 2, 6)`-bounded orientation of a connected P7-free graph, chosen
/// by the length of a longest cycle.
pub fn orient_p7_free(g: &Graph) -> Result<Construction, OrientError> {
    precheck(g, 7)?;
    let candidates = match longest_cycle(g) {
        None => vec![(Rule::AwayFromRoot, orient_away_from_root(g, 0))],
        Some(c) if c.len() >= 6 => vec![(Rule::MainPart, vec![Mark::Unoriented; g.edge_count()])],
        Some(c) if c.len() == 5 => five_cycle_candidates(g, &c),
        Some(c) if c.len() == 4 => four_cycle_candidates(g, &c),
        Some(c) => triangle_candidates(g, &c),
    };
    pick(g, BoundParams::P7, candidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing;
    use std::collections::BTreeSet;

    fn arcs(g: &Graph, c: &Construction) -> BTreeSet<(Vertex, Vertex)> {
        c.arcs(g).collect()
    }

    #[test]
    fn p5_examples() {
        let k4 = orient_p5_free(&Graph::complete(4)).unwrap();
        assert!(k4.marks.iter().all(|&m| m == Mark::Unoriented));

        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend((3..7).map(|l| (0, l)));
        let g = Graph::new(7, edges).unwrap();
        let c = orient_p5_free(&g).unwrap();
        assert_eq!(arcs(&g, &c), (3..7).map(|l| (0, l)).collect());

        let k2 = Graph::path(2);
        assert_eq!(arcs(&k2, &orient_p5_free(&k2).unwrap()), BTreeSet::from([(0, 1)]));

        match orient_p5_free(&Graph::path(5)) {
            Err(OrientError::ContainsPath { order: 5, witness }) => assert_eq!(witness.len(), 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(orient_p5_free(&Graph::empty(2)), Err(OrientError::NotConnected)));
    }

    #[test]
    fn p6_five_cycle_is_main() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]).unwrap();
        let c = orient_p6_free(&g).unwrap();
        assert_eq!(c.rule, Rule::MainPart);
        assert!(arcs(&g, &c).is_empty());
    }

    #[test]
    fn p6_many_midpoints() {
        let g = testing::four_cycle_with_midpoints(3, 2, 1);
        let c = orient_p6_free(&g).unwrap();
        assert_eq!(c.rule, Rule::DoubleSource);
        let cl = &c.verdict.classification;
        assert_eq!(cl.t_minus, vec![1, 3, 4, 5, 6]);
        assert_eq!(cl.t_plus, vec![0, 2]);
        // the chord a-c stays unoriented
        assert_eq!(c.marks[g.edge_id(0, 2).unwrap()], Mark::Unoriented);
        assert!(arcs(&g, &c).contains(&(0, 7)) && arcs(&g, &c).contains(&(2, 9)));
    }

    #[test]
    fn p6_two_midpoints_orients_pendants_only() {
        let g = testing::four_cycle_with_midpoints(0, 2, 1);
        let c = orient_p6_free(&g).unwrap();
        assert_eq!(c.rule, Rule::StandardStructures);
        assert_eq!(arcs(&g, &c), BTreeSet::from([(0, 4), (0, 5), (2, 6)]));
    }

    #[test]
    fn trees_orient_away_from_root() {
        // a spider with legs of length 2 is P6-free and has 9 vertices
        let g = Graph::new(9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)]).unwrap();
        for c in [orient_p6_free(&g).unwrap(), orient_p7_free(&g).unwrap()] {
            assert_eq!(c.rule, Rule::AwayFromRoot);
            assert!(c.marks.iter().all(|&m| m != Mark::Unoriented));
            assert!(arcs(&g, &c).contains(&(1, 2)));
        }
    }

    #[test]
    fn p6_triangle_with_structures() {
        let g = testing::hub_with_triangles();
        // longest paths run triangle - hub - triangle, five vertices
        let c = orient_p6_free(&g).unwrap();
        assert_eq!(c.rule, Rule::StandardStructures);
        let a = arcs(&g, &c);
        assert!(a.contains(&(0, 10)) && a.contains(&(10, 12)) && a.contains(&(0, 9)));
        assert!(a.contains(&(0, 3)) && a.contains(&(0, 4)));
        assert!(!a.contains(&(0, 1)));
        assert_eq!(c.marks[g.edge_id(3, 4).unwrap()], Mark::Unoriented);
    }

    #[test]
    fn p7_five_cycle_single_midpoint() {
        let g = testing::five_cycle_pendants_only();
        let c = orient_p7_free(&g).unwrap();
        assert_eq!(c.rule, Rule::PendantEdges);
        assert_eq!(arcs(&g, &c), BTreeSet::from([(0, 5), (0, 6), (0, 7), (3, 8), (3, 9), (3, 10)]));
    }

    #[test]
    fn p7_five_cycle_two_midpoints() {
        let g = testing::five_cycle_two_midpoints();
        let c = orient_p7_free(&g).unwrap();
        assert_eq!(c.rule, Rule::SplitSources);
        let mut expected: BTreeSet<_> = [(0, 1), (2, 5)].into();
        expected.extend((6..10).map(|l| (0, l)));
        expected.extend((10..13).map(|l| (2, l)));
        assert_eq!(arcs(&g, &c), expected);
    }

    #[test]
    fn p7_five_cycle_three_midpoints() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        edges.extend([(0, 5), (2, 5), (0, 6), (2, 6), (0, 7)]);
        let g = Graph::new(8, edges).unwrap();
        let c = orient_p7_free(&g).unwrap();
        assert_eq!(c.rule, Rule::DoubleSource);
        assert_eq!(c.verdict.classification.t_minus, vec![1, 5, 6]);
        assert_eq!(c.verdict.classification.t_plus, vec![0, 2]);
    }

    #[test]
    fn p7_complete_six_is_main() {
        let c = orient_p7_free(&Graph::complete(6)).unwrap();
        assert_eq!(c.rule, Rule::MainPart);
    }

    #[test]
    fn p7_four_cycle_with_structures() {
        let g = testing::four_cycle_rich();
        let c = orient_p7_free(&g).unwrap();
        assert_eq!(c.rule, Rule::DoubleSource);
        let a = arcs(&g, &c);
        for (x, y) in [(0, 8), (8, 13), (0, 9), (0, 10), (2, 17), (0, 4), (2, 4)] {
            assert!(a.contains(&(x, y)), "missing {x}->{y}");
        }
        assert_eq!(c.marks[g.edge_id(9, 10).unwrap()], Mark::Unoriented);
        assert_eq!(c.verdict.classification.t_plus, vec![0, 2]);
        assert_eq!(c.verdict.classification.t_minus.len(), 6);
    }

    #[test]
    fn p7_loaded_midpoint_needs_fallback() {
        // midpoint 4 carries a pendant edge: two arcs in and one out breaks
        // the in-degree condition, so it keeps its hub edges unoriented
        let base = testing::four_cycle_with_midpoints(3, 0, 0);
        let mut edges = base.edges().to_vec();
        edges.push((4, 7));
        let g = Graph::new(8, edges).unwrap();
        let c = orient_p7_free(&g).unwrap();
        assert_eq!(c.rule, Rule::DoubleSourceUnloaded);
        assert!(c.rule.is_fallback());
        assert_eq!(c.marks[g.edge_id(0, 4).unwrap()], Mark::Unoriented);
        assert_eq!(c.verdict.classification.t_minus, vec![1, 3, 5, 6]);
    }

    #[test]
    fn standard_orientation_of_each_kind() {
        let g = testing::hub_with_triangles();
        let found = find_pendant_structures(&g);
        for s in &found {
            let marks = standard_orient(&g, s).unwrap();
            let arcs: Vec<_> = marks.iter().enumerate().filter_map(|(e, m)| m.direct(g.endpoints(e))).collect();
            match s.kind {
                PendantKind::PendantEdge => assert_eq!(arcs, vec![(0, s.members[0])]),
                PendantKind::PendantTriangle => {
                    assert_eq!(arcs.len(), 2);
                    assert!(arcs.iter().all(|&(from, _)| from == 0));
                }
                PendantKind::PendantStar => {
                    assert_eq!(arcs.len(), 4);
                    assert!(arcs.contains(&(0, 10)) && arcs.contains(&(10, 14)));
                }
            }
        }
        let bogus = PendantStructure { kind: PendantKind::PendantEdge, attach: 0, members: vec![1] };
        assert!(matches!(standard_orient(&g, &bogus), Err(OrientError::MalformedStructure)));
    }
}
