//! Monochromatic stars. `S_n` is the star on `n` vertices (`n - 1` leaves).

use serde::Serialize;
use thiserror::Error;

use super::chromatic::chromatic_number;
use crate::graph::{ColoredGraph, Graph};

/// `R_k(S_n) = k(n - 2) + e` with `e = 1` when `n` is odd and `k` is even,
/// `e = 2` otherwise.
pub fn star_ramsey(n: usize, k: usize) -> usize {
    assert!(n >= 2 && k >= 1, "star_ramsey needs n >= 2 and k >= 1");
    let e = if n % 2 == 1 && k.is_multiple_of(2) { 1 } else { 2 };
    k * (n - 2) + e
}

/// Why every `k`-coloring of the host has a monochromatic `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum StarGuarantee {
    /// `center` has more than `k(n - 2)` incident edges, so some color
    /// owns at least `n - 1` of them.
    HighDegree { center: usize, degree: usize },
    /// On an odd cycle with two colors two consecutive edges share a color,
    /// which is an `S_3`.
    OddCycle { length: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarError {
    #[error("complete graphs are excluded")]
    Complete,
    #[error("chromatic number {chi} is below k(n-2)+1 = {required}")]
    ChromaticTooSmall { chi: usize, required: usize },
    #[error("chromatic number could not be determined within the budget")]
    Indeterminate,
    #[error("an odd cycle only forces S_3 in at most two colors (n = {n}, k = {k})")]
    OddCycleTooWeak { n: usize, k: usize },
    #[error("no vertex of degree above {bound} and not an odd cycle")]
    NoBranch { bound: usize },
}

/// Identifies which case of Brooks' theorem guarantees a monochromatic
/// `S_n` in every `k`-coloring of a non-complete `g` with chromatic number
/// at least `k(n - 2) + 1`.
pub fn brooks_star_check(g: &Graph, n: usize, k: usize) -> Result<StarGuarantee, StarError> {
    assert!(n >= 2 && k >= 1);
    if g.is_complete() {
        return Err(StarError::Complete);
    }
    let bound = k * (n - 2);
    let chi = chromatic_number(g, None).exact().ok_or(StarError::Indeterminate)?;
    if chi < bound + 1 {
        return Err(StarError::ChromaticTooSmall { chi, required: bound + 1 });
    }
    if let Some(center) = (0..g.n()).find(|&v| g.degree(v) > bound) {
        return Ok(StarGuarantee::HighDegree { center, degree: g.degree(center) });
    }
    if is_odd_cycle(g) {
        // the cycle forces S_3 only, and only when at most two colors are in play
        return if n <= 3 && k <= 2 {
            Ok(StarGuarantee::OddCycle { length: g.n() })
        } else {
            Err(StarError::OddCycleTooWeak { n, k })
        };
    }
    Err(StarError::NoBranch { bound })
}

fn is_odd_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.n() % 2 == 1 && g.edge_count() == g.n() && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// A vertex and color with at least `n - 1` edges of that color at it.
pub fn monochromatic_star(cg: &ColoredGraph, n: usize) -> Option<(usize, usize)> {
    (0..cg.n()).find_map(|v| (0..cg.k()).find(|&c| cg.color_degree(v, c) + 1 >= n).map(|c| (v, c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form() {
        assert_eq!(star_ramsey(3, 2), 3);
        assert_eq!(star_ramsey(4, 2), 6);
        for k in 1..6 {
            assert_eq!(star_ramsey(2, k), 2);
        }
        assert_eq!(star_ramsey(5, 3), 11);
        assert_eq!(star_ramsey(5, 2), 7);
    }

    #[test]
    fn branches() {
        assert_eq!(brooks_star_check(&Graph::cycle(7), 3, 2), Ok(StarGuarantee::OddCycle { length: 7 }));
        assert_eq!(brooks_star_check(&Graph::complete(5), 3, 2), Err(StarError::Complete));
        let wheel = Graph::new(6, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5)])).unwrap();
        assert_eq!(brooks_star_check(&wheel, 3, 2), Ok(StarGuarantee::HighDegree { center: 0, degree: 3 }));
        assert_eq!(
            brooks_star_check(&Graph::cycle(6), 3, 2),
            Err(StarError::ChromaticTooSmall { chi: 2, required: 3 })
        );
        assert_eq!(brooks_star_check(&Graph::cycle(5), 4, 1), Err(StarError::OddCycleTooWeak { n: 4, k: 1 }));
    }

    #[test]
    fn odd_cycle_colorings_all_have_a_star() {
        let c = Graph::cycle(7);
        for mask in 0u32..1 << 7 {
            let cg = ColoredGraph::new(c.clone(), 2, (0..7).map(|e| (mask >> e & 1) as usize).collect()).unwrap();
            assert!(monochromatic_star(&cg, 3).is_some());
        }
    }
}
