//! Canonical forms of vertex- and edge-colored graphs by individualization
//! and refinement, with orbit pruning from automorphisms found at leaves.
//!
//! The canonical code is the lexicographically least leaf code reachable
//! from the refined root partition. Codes of isomorphic inputs are equal and
//! the code determines the input up to isomorphism.

use crate::graph::{ColoredGraph, Graph};

/// A complete description of a colored graph: `matrix[u * n + v]` is 0 for a
/// non-edge and `1 + color` for an edge.
#[derive(Clone, Debug)]
pub struct ColoredMatrix {
    n: usize,
    vertex_colors: Vec<u32>,
    matrix: Vec<u8>,
}

impl ColoredMatrix {
    pub fn new(n: usize, vertex_colors: Vec<u32>) -> Self {
        assert_eq!(vertex_colors.len(), n);
        ColoredMatrix { n, vertex_colors, matrix: vec![0; n * n] }
    }

    pub fn set(&mut self, u: usize, v: usize, value: u8) {
        self.matrix[u * self.n + v] = value;
        self.matrix[v * self.n + u] = value;
    }

    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.matrix[u * self.n + v]
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut m = ColoredMatrix::new(g.n(), vec![0; g.n()]);
        for &(u, v) in g.edges() {
            m.set(u, v, 1);
        }
        m
    }

    pub fn from_colored(cg: &ColoredGraph) -> Self {
        let mut m = ColoredMatrix::new(cg.n(), vec![0; cg.n()]);
        for (e, &(u, v)) in cg.graph().edges().iter().enumerate() {
            m.set(u, v, cg.color(e) as u8 + 1);
        }
        m
    }

    fn leaf_code(&self, perm: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut code = Vec::with_capacity(n * 4 + n * n.saturating_sub(1) / 2);
        for &v in perm {
            code.extend(self.vertex_colors[v].to_le_bytes());
        }
        for j in 1..n {
            for i in 0..j {
                code.push(self.get(perm[i], perm[j]));
            }
        }
        code
    }

    /// Stable colour refinement; returns colours `0..r` whose order depends
    /// only on isomorphism-invariant data.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let n = self.n;
        let mut classes = count_classes(&colors);
        loop {
            let signatures: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(u32, u8)> = (0..n)
                        .filter(|&w| w != v && self.get(v, w) != 0)
                        .map(|w| (colors[w], self.get(v, w)))
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<(u32, u8)>)> = signatures.iter().collect();
            distinct.sort();
            distinct.dedup();
            colors = signatures.iter().map(|s| distinct.binary_search(&s).unwrap() as u32).collect();
            let now = distinct.len();
            if now == classes || now == n {
                return colors;
            }
            classes = now;
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    m: &'a ColoredMatrix,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, colors: &[u32]) {
        let mut perm = vec![0; colors.len()];
        for (v, &c) in colors.iter().enumerate() {
            perm[c as usize] = v;
        }
        let code = self.m.leaf_code(&perm);
        match &self.best {
            Some((best, best_perm)) if *best == code => {
                // perm and best_perm relabel onto the same matrix
                let mut aut = vec![0; perm.len()];
                for i in 0..perm.len() {
                    aut[perm[i]] = best_perm[i];
                }
                self.automorphisms.push(aut);
            }
            Some((best, _)) if *best < code => {}
            _ => self.best = Some((code, perm)),
        }
    }

    fn node(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.in_orbit_of(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let individualized: Vec<u32> = colors.iter().enumerate().map(|(w, &c)| 2 * c + u32::from(w != v)).collect();
            let refined = self.m.refine(individualized);
            path.push(v);
            self.node(refined, path);
            path.pop();
        }
    }

    /// Whether `v` lies in the orbit of some tried vertex under the group
    /// generated by known automorphisms that fix `path` pointwise.
    fn in_orbit_of(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        if tried.is_empty() {
            return false;
        }
        let gens: Vec<&Vec<usize>> = self.automorphisms.iter().filter(|a| path.iter().all(|&p| a[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let n = self.m.n;
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = tried.to_vec();
        for &t in tried {
            seen[t] = true;
        }
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for a in &gens {
                let y = a[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// Canonical code and a canonical labeling: `perm[i]` is the input vertex
/// placed at position `i`.
pub fn canonical_labeling(m: &ColoredMatrix) -> (Vec<u8>, Vec<usize>) {
    let mut search = Search { m, best: None, automorphisms: Vec::new() };
    let mut ranks: Vec<u32> = m.vertex_colors.clone();
    let mut distinct = ranks.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for r in &mut ranks {
        *r = distinct.binary_search(r).unwrap() as u32;
    }
    // the input colours themselves are part of the code, so the initial
    // ranking only needs to respect their order
    let root = m.refine(ranks);
    search.node(root, &mut Vec::new());
    search.best.unwrap_or_default()
}

pub fn canonical_code(m: &ColoredMatrix) -> Vec<u8> {
    canonical_labeling(m).0
}

pub fn graph_code(g: &Graph) -> Vec<u8> {
    canonical_code(&ColoredMatrix::from_graph(g))
}

pub fn colored_code(cg: &ColoredGraph) -> Vec<u8> {
    canonical_code(&ColoredMatrix::from_colored(cg))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_labeling(&ColoredMatrix::from_graph(g));
    let mut position = vec![0; g.n()];
    for (i, &v) in perm.iter().enumerate() {
        position[v] = i;
    }
    g.permuted(&position)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Oracle: are two graphs isomorphic, by trying every bijection.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n()
            && a.edge_count() == b.edge_count()
            && all_permutations(a.n()).iter().any(|p| a.permuted(p) == *b)
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for g in [Graph::star(12), Graph::complete(10), Graph::complete_bipartite(6, 6), Graph::empty(12)] {
            let h = g.permuted(&(0..g.n()).rev().collect::<Vec<_>>());
            assert_eq!(graph_code(&g), graph_code(&h));
        }
        assert_ne!(graph_code(&Graph::cycle(6)), graph_code(&Graph::complete(3).disjoint_union(&Graph::complete(3))));
    }

    #[test]
    fn edge_colors_matter() {
        let a = ColoredGraph::from_colored_edges(3, 2, [(0, 1, 0), (1, 2, 1)]).unwrap();
        let b = ColoredGraph::from_colored_edges(3, 2, [(0, 1, 1), (1, 2, 0)]).unwrap();
        let c = ColoredGraph::from_colored_edges(3, 2, [(0, 1, 0), (1, 2, 0)]).unwrap();
        assert_eq!(colored_code(&a), colored_code(&b));
        assert_ne!(colored_code(&a), colored_code(&c));
    }

    #[test]
    fn counts_graphs_on_five_vertices() {
        // 34 graphs on 5 vertices up to isomorphism
        let mut codes = std::collections::HashSet::new();
        for mask in 0u32..1 << 10 {
            let mut bit = 0;
            let g = Graph::from_fn(5, |_, _| {
                bit += 1;
                mask >> (bit - 1) & 1 == 1
            });
            codes.insert(graph_code(&g));
        }
        assert_eq!(codes.len(), 34);
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(g in arb_graph(9), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.permuted(&perm);
            prop_assert_eq!(graph_code(&g), graph_code(&h));
            prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
            prop_assert!(g.n() > 6 || brute_isomorphic(&g, &canonical_graph(&g)));
        }

        #[test]
        fn equal_codes_mean_isomorphic(a in arb_graph(6), b in arb_graph(6)) {
            prop_assert_eq!(graph_code(&a) == graph_code(&b), brute_isomorphic(&a, &b));
        }
    }
}
