//! The two-colored complete graph on `N + floor(N/2) - 2` vertices with no
//! monochromatic `P_N`, and its partial orientation.

use crate::graph::{ColoredGraph, Graph, PartialOrientation};

use super::{BoundParams, OrientError};

pub const BLUE: usize = 0;
pub const RED: usize = 1;

fn sizes(order: usize) -> Result<(usize, usize), OrientError> {
    if order < 4 {
        return Err(OrientError::WitnessTooSmall(order));
    }
    Ok((order - 1, order / 2 - 1))
}

/// A red clique on `0..N-1` and a blue clique on the remaining
/// `floor(N/2) - 1` vertices, with every edge between them blue.
pub fn build_witness(order: usize) -> Result<ColoredGraph, OrientError> {
    let (red, blue) = sizes(order)?;
    let g = Graph::complete(red + blue);
    let colors = g.edges().iter().map(|&(u, v)| if u < red && v < red { RED } else { BLUE }).collect();
    Ok(ColoredGraph::new(g, 2, colors)?)
}

/// [`build_witness`] with every edge between the cliques oriented from its
/// blue-clique end to its red-clique end.
pub fn witness_orientation(order: usize) -> Result<PartialOrientation, OrientError> {
    let (red, _) = sizes(order)?;
    let cg = build_witness(order)?;
    let mut po = PartialOrientation::unoriented(cg);
    let cross: Vec<_> = po.graph().edges().iter().copied().filter(|&(u, v)| u < red && v >= red).collect();
    for (u, v) in cross {
        po.set_arc(v, u)?;
    }
    Ok(po)
}

/// `(n, s, t) = (N + floor(N/2) - 2, floor(N/2) - 1, N - 1)`. The triple is
/// admissible only for `N >= 5`.
pub fn witness_params(order: usize) -> BoundParams {
    let half = order / 2;
    BoundParams { n: order + half - 2, s: half.saturating_sub(1), t: order.saturating_sub(1) }
}
