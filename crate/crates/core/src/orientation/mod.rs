//! Bounded partial orientations: checking them, and building them for
//! P5-, P6- and P7-free graphs and for the lower-bound construction.

mod bounded;
mod construct;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{connected_components, ColoredGraph, GraphError, PartialOrientation, Vertex};

pub use bounded::{
    check_marks, check_nst_bounded, check_st_bounded, classify_part, BoundVerdict, PartClassification, Violation,
};
pub use construct::{
    orient_away_from_root, orient_p5_free, orient_p6_free, orient_p7_free, standard_orient, Construction, Rule,
};
pub use witness::{build_witness, witness_orientation, witness_params, BLUE, RED};

#[derive(Debug, Error)]
pub enum OrientError {
    #[error("parameters (n={n}, s={s}, t={t}) need n > s + t - 1 and n > 2s + 2")]
    InvalidParams { n: usize, s: usize, t: usize },
    #[error("vertex set is not a connected component of the color class")]
    NotAComponent,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph contains a path on {order} vertices: {witness:?}")]
    ContainsPath { order: usize, witness: Vec<Vertex> },
    #[error("malformed pendant structure")]
    MalformedStructure,
    #[error("no candidate orientation is bounded; first candidate: {violations:?}")]
    SelfCheckFailed { violations: Vec<Violation> },
    #[error("witness construction needs N >= 4, got {0}")]
    WitnessTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A triple `(n, s, t)` meeting `n > s + t - 1` and `n > 2s + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoundParams {
    pub n: usize,
    pub s: usize,
    pub t: usize,
}

impl BoundParams {
    pub const P5: BoundParams = BoundParams { n: 5, s: 1, t: 4 };
    pub const P6: BoundParams = BoundParams { n: 7, s: 2, t: 5 };
    pub const P7: BoundParams = BoundParams { n: 8, s: 2, t: 6 };

    pub fn new(n: usize, s: usize, t: usize) -> Result<Self, OrientError> {
        if n + 1 > s + t && n > 2 * s + 2 {
            Ok(BoundParams { n, s, t })
        } else {
            Err(OrientError::InvalidParams { n, s, t })
        }
    }

    /// The side conditions, for triples built without [`BoundParams::new`].
    pub fn is_admissible(&self) -> bool {
        Self::new(self.n, self.s, self.t).is_ok()
    }
}

/// The path-free families with a known orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    P5,
    P6,
    P7,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::P5, Family::P6, Family::P7];

    /// Order of the forbidden path.
    pub fn path_order(self) -> usize {
        match self {
            Family::P5 => 5,
            Family::P6 => 6,
            Family::P7 => 7,
        }
    }

    pub fn params(self) -> BoundParams {
        match self {
            Family::P5 => BoundParams::P5,
            Family::P6 => BoundParams::P6,
            Family::P7 => BoundParams::P7,
        }
    }

    pub fn orient(self, g: &crate::graph::Graph) -> Result<Construction, OrientError> {
        match self {
            Family::P5 => orient_p5_free(g),
            Family::P6 => orient_p6_free(g),
            Family::P7 => orient_p7_free(g),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.path_order())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "p5" => Ok(Family::P5),
            "p6" => Ok(Family::P6),
            "p7" => Ok(Family::P7),
            _ => Err(format!("unknown family `{s}` (expected p5, p6 or p7)")),
        }
    }
}

/// One monochromatic part with its constructor outcome.
#[derive(Clone, Debug, Serialize)]
pub struct OrientedPart {
    pub color: usize,
    pub part: Vec<Vertex>,
    pub rule: Rule,
    pub verdict: BoundVerdict,
}

/// Orients every monochromatic part (with at least one edge) of `cg` with
/// the family's constructor, and re-checks each part in the combined
/// orientation.
pub fn orient_colored(
    cg: &ColoredGraph,
    family: Family,
) -> Result<(PartialOrientation, Vec<OrientedPart>), OrientError> {
    let mut po = PartialOrientation::unoriented(cg.clone());
    let mut rules = Vec::new();
    for c in 0..cg.k() {
        let class = cg.color_subgraph(c)?;
        for comp in connected_components(&class) {
            if comp.len() < 2 {
                continue;
            }
            let (sub, map) = class.induced(&comp);
            let built = family.orient(&sub)?;
            for (e, mark) in built.marks.iter().enumerate() {
                if let Some((from, to)) = mark.direct(sub.endpoints(e)) {
                    po.set_arc(map[from], map[to])?;
                }
            }
            rules.push((c, comp, built.rule));
        }
    }
    let parts = rules
        .into_iter()
        .map(|(color, part, rule)| {
            let verdict = check_nst_bounded(&po, &part, color, family.params())?;
            Ok(OrientedPart { color, part, rule, verdict })
        })
        .collect::<Result<_, OrientError>>()?;
    Ok((po, parts))
}
