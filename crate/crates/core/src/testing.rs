//! Hand-transcribed graphs shared by unit tests.

use crate::graph::{ColoredGraph, Graph, PartialOrientation};

/// Two-colored graph with a blue K4 on 1..4, a red triangle 3,5,6 whose
/// vertex 5 sends red arcs to 1,4,7,8, and a blue edge 9-10 with arcs
/// 9->5, 9->6, 10->7, 10->8. Vertex `i` is index `i - 1`; blue is color 0.
pub(crate) fn two_colored_example() -> PartialOrientation {
    const BLUE: usize = 0;
    const RED: usize = 1;
    let v = |i: usize| i - 1;
    let mut edges = Vec::new();
    for a in 1..=4 {
        for b in a + 1..=4 {
            edges.push((v(a), v(b), BLUE));
        }
    }
    edges.extend([(v(3), v(5), RED), (v(3), v(6), RED), (v(5), v(6), RED)]);
    for t in [1, 4, 7, 8] {
        edges.push((v(5), v(t), RED));
    }
    edges.push((v(9), v(10), BLUE));
    for (a, b) in [(9, 5), (9, 6), (10, 7), (10, 8)] {
        edges.push((v(a), v(b), BLUE));
    }
    let cg = ColoredGraph::from_colored_edges(10, 2, edges).unwrap();
    let mut po = PartialOrientation::unoriented(cg);
    for t in [1, 4, 7, 8] {
        po.set_arc(v(5), v(t)).unwrap();
    }
    for (a, b) in [(9, 5), (9, 6), (10, 7), (10, 8)] {
        po.set_arc(v(a), v(b)).unwrap();
    }
    po
}

/// Hub 0 carrying four triangles (1,2), (3,4), (5,6), (7,8), pendant edges
/// to 9 and 11, and a three-leaf star centered at 10 (leaves 12, 13, 14).
pub(crate) fn hub_with_triangles() -> Graph {
    let mut edges = vec![];
    for (x, y) in [(1, 2), (3, 4), (5, 6), (7, 8)] {
        edges.extend([(0, x), (0, y), (x, y)]);
    }
    edges.extend([(0, 9), (0, 10), (0, 11), (10, 12), (10, 13), (10, 14)]);
    Graph::new(15, edges).unwrap()
}

/// 4-cycle a=0, b=1, c=2, d=3 with chord a-c and extra a-c midpoints
/// `4..4+extra`, followed by `a_leaves` pendant edges at a and `c_leaves` at c.
pub(crate) fn four_cycle_with_midpoints(extra: usize, a_leaves: usize, c_leaves: usize) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
    let mut next = 4;
    for _ in 0..extra {
        edges.extend([(0, next), (2, next)]);
        next += 1;
    }
    for _ in 0..a_leaves {
        edges.push((0, next));
        next += 1;
    }
    for _ in 0..c_leaves {
        edges.push((2, next));
        next += 1;
    }
    Graph::new(next, edges).unwrap()
}

/// 4-cycle a,b,c,d = 0..4 with chord a-c and midpoints 4..8. Vertex a also
/// carries pendant triangles (9,10) and (11,12) and a star centered at 8
/// with leaves 13..17; c has pendant edges to 17..20.
pub(crate) fn four_cycle_rich() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
    for v in 4..8 {
        edges.extend([(0, v), (2, v)]);
    }
    for a in 8..13 {
        edges.push((0, a));
    }
    edges.extend([(9, 10), (11, 12)]);
    for leaf in 13..17 {
        edges.push((8, leaf));
    }
    for leaf in 17..20 {
        edges.push((2, leaf));
    }
    Graph::new(20, edges).unwrap()
}

/// 5-cycle a..e = 0..4 with chords a-c, a-d, c-e, an extra a-c midpoint 5,
/// four pendant edges at a (6..9) and three at c (10..12).
pub(crate) fn five_cycle_two_midpoints() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3), (2, 4)];
    edges.extend([(0, 5), (2, 5)]);
    for leaf in 6..10 {
        edges.push((0, leaf));
    }
    for leaf in 10..13 {
        edges.push((2, leaf));
    }
    Graph::new(13, edges).unwrap()
}

/// 5-cycle 0..4 with chords 0-2, 1-3, 3-0 and three pendant edges at 0
/// (5..7) and at 3 (8..10).
pub(crate) fn five_cycle_pendants_only() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (3, 0)];
    edges.extend([(0, 5), (0, 6), (0, 7), (3, 8), (3, 9), (3, 10)]);
    Graph::new(11, edges).unwrap()
}
