//! Exact chromatic number by branch and bound: a maximum clique gives the
//! lower bound, DSATUR gives the first upper bound, and a DSATUR-ordered
//! backtracking search decides each intermediate color count.

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Chromatic {
    Exact {
        value: usize,
    },
    /// The node budget ran out; the true value lies in `lower..=upper`.
    Indeterminate {
        lower: usize,
        upper: usize,
    },
}

impl Chromatic {
    pub fn exact(self) -> Option<usize> {
        match self {
            Chromatic::Exact { value } => Some(value),
            Chromatic::Indeterminate { .. } => None,
        }
    }
}

/// Size of a maximum clique.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, candidates: &[usize], best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            grow(g, size + 1, &next, best);
        }
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = 0;
    grow(g, 0, &all, &mut best);
    best
}

/// Greedy DSATUR coloring: repeatedly colors the vertex seeing the most
/// distinct colors (ties by degree, then index) with its least free color.
pub fn dsatur_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (saturation(g, &color, v), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        color[v] = least_free(g, &color, v);
    }
    color
}

fn saturation(g: &Graph, color: &[usize], v: usize) -> usize {
    let mut seen: Vec<usize> = g.neighbors(v).map(|w| color[w]).filter(|&c| c != usize::MAX).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn least_free(g: &Graph, color: &[usize], v: usize) -> usize {
    (0..).find(|&c| g.neighbors(v).all(|w| color[w] != c)).expect("some color is free")
}

/// Whether `g` has a proper coloring with `k` colors, searching at most
/// `budget` nodes. `None` means the budget ran out.
pub fn is_colorable(g: &Graph, k: usize, budget: Option<u64>) -> Option<bool> {
    let n = g.n();
    if n == 0 {
        return Some(true);
    }
    if k == 0 {
        return Some(false);
    }
    let mut search = Search { g, k, color: vec![usize::MAX; n], nodes: 0, budget };
    search.run(0)
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    /// Colors already present around `v`, as flags over `0..limit`.
    fn blocked(&self, v: usize, limit: usize) -> Vec<bool> {
        let mut blocked = vec![false; limit];
        for w in self.g.neighbors(v) {
            if let Some(b) = blocked.get_mut(self.color[w]) {
                *b = true;
            }
        }
        blocked
    }

    fn run(&mut self, used: usize) -> Option<bool> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return None;
        }
        // most constrained uncolored vertex
        let pick = (0..self.color.len())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (saturation(self.g, &self.color, v), self.g.degree(v), std::cmp::Reverse(v)));
        let Some(v) = pick else {
            return Some(true);
        };
        // colors above `used` are interchangeable, so try only the first of them
        let limit = self.k.min(used + 1);
        let blocked = self.blocked(v, limit);
        for c in (0..limit).filter(|&c| !blocked[c]) {
            self.color[v] = c;
            let r = self.run(used.max(c + 1));
            self.color[v] = usize::MAX;
            if r != Some(false) {
                return r;
            }
        }
        Some(false)
    }
}

/// Exact chromatic number, or bounds if `budget` search nodes per color
/// count do not suffice.
pub fn chromatic_number(g: &Graph, budget: Option<u64>) -> Chromatic {
    if g.n() == 0 {
        return Chromatic::Exact { value: 0 };
    }
    let lower = clique_number(g);
    let upper = dsatur_coloring(g).into_iter().max().map_or(0, |c| c + 1);
    for k in lower..upper {
        match is_colorable(g, k, budget) {
            Some(true) => return Chromatic::Exact { value: k },
            Some(false) => {}
            None => return Chromatic::Indeterminate { lower: k, upper },
        }
    }
    Chromatic::Exact { value: upper }
}

/// Whether `colors` is a proper vertex coloring of `g`.
pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::build_witness;

    /// Oracle: least k such that some assignment of k colors is proper.
    fn brute_chromatic(g: &Graph) -> usize {
        let n = g.n();
        (0..=n)
            .find(|&k| {
                let total = (k as u64).pow(n as u32);
                (0..total.max(1)).any(|mut x| {
                    let colors: Vec<usize> = (0..n)
                        .map(|_| {
                            let c = (x % k.max(1) as u64) as usize;
                            x /= k.max(1) as u64;
                            c
                        })
                        .collect();
                    (k > 0 || n == 0) && is_proper_coloring(g, &colors)
                })
            })
            .unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number(&Graph::complete(6), None).exact(), Some(6));
        assert_eq!(chromatic_number(&Graph::cycle(7), None).exact(), Some(3));
        assert_eq!(chromatic_number(&Graph::cycle(8), None).exact(), Some(2));
        assert_eq!(chromatic_number(&Graph::empty(3), None).exact(), Some(1));
        let w = build_witness(10).unwrap();
        assert_eq!(chromatic_number(w.graph(), None).exact(), Some(13));
        // Petersen graph
        let petersen =
            Graph::new(10, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)])).unwrap();
        assert_eq!(chromatic_number(&petersen, None).exact(), Some(3));
        assert_eq!(clique_number(&petersen), 2);
    }

    #[test]
    fn agrees_with_brute_force_on_all_small_graphs() {
        for g in crate::corpus::connected_graphs_by_order(6, |_| true).into_iter().flatten() {
            assert_eq!(chromatic_number(&g, None).exact(), Some(brute_chromatic(&g)), "{g:?}");
            assert!(is_proper_coloring(&g, &dsatur_coloring(&g)));
        }
    }

    #[test]
    fn tiny_budget_is_indeterminate() {
        // Mycielski graph of C5 (Groetzsch): triangle-free with chromatic number 4
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((i + 5, (i + 1) % 5));
            edges.push((i + 5, (i + 4) % 5));
            edges.push((i + 5, 10));
        }
        let g = Graph::new(11, edges).unwrap();
        assert_eq!(chromatic_number(&g, None).exact(), Some(4));
        assert!(matches!(
            chromatic_number(&g, Some(2)),
            Chromatic::Indeterminate { lower: 2, .. } | Chromatic::Indeterminate { lower: 3, .. }
        ));
    }

    proptest::proptest! {
        #[test]
        fn between_clique_and_dsatur(n in 1usize..10, bits in proptest::collection::vec(proptest::bool::ANY, 45)) {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let g = Graph::new(n, pairs.zip(&bits).filter(|(_, &b)| b).map(|(p, _)| p)).unwrap();
            let greedy = dsatur_coloring(&g);
            let upper = greedy.iter().max().map_or(0, |&c| c + 1);
            let chi = chromatic_number(&g, None).exact().unwrap();
            proptest::prop_assert!(clique_number(&g) <= chi && chi <= upper);
            proptest::prop_assert_eq!(is_colorable(&g, chi, None), Some(true));
            proptest::prop_assert_eq!(is_colorable(&g, chi.saturating_sub(1), None), Some(chi == 0));
        }
    }
}
