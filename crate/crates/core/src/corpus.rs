//! Exhaustive generation of small connected graphs up to isomorphism.
//!
//! Every connected graph on `n + 1` vertices has a vertex whose removal
//! leaves a connected graph, so extending each connected graph on `n`
//! vertices by a new vertex with every nonempty neighbourhood and keeping
//! one representative per canonical code yields all of them. A hereditary
//! filter (closed under taking induced subgraphs, such as being P_N-free)
//! may prune at every level without losing members.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_graph, graph_code};
use crate::detect::is_pn_free;
use crate::graph::Graph;

/// Connected graphs on `1..=max_n` vertices passing `keep`, one per
/// isomorphism class, grouped by order. `keep` must be hereditary.
/// Within each order graphs are sorted by canonical code, so output is
/// independent of thread scheduling.
pub fn connected_graphs_by_order<F>(max_n: usize, keep: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return levels;
    }
    let single = Graph::empty(1);
    levels.push(if keep(&single) { vec![single] } else { vec![] });
    for n in 1..max_n {
        let parents = &levels[n - 1];
        let mut children: Vec<(Vec<u8>, Graph)> = parents
            .par_iter()
            .flat_map_iter(|parent| {
                let mut local: Vec<(Vec<u8>, Graph)> = Vec::new();
                let mut seen = HashSet::new();
                for mask in 1u64..1 << n {
                    let edges =
                        parent.edges().iter().copied().chain((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n)));
                    let child = Graph::new(n + 1, edges).expect("extension is simple");
                    if !keep(&child) {
                        continue;
                    }
                    let code = graph_code(&child);
                    if seen.insert(code.clone()) {
                        local.push((code, child));
                    }
                }
                local
            })
            .collect();
        children.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        children.dedup_by(|a, b| a.0 == b.0);
        levels.push(children.into_iter().map(|(_, g)| canonical_graph(&g)).collect());
    }
    levels
}

/// All connected graphs on at most `max_n` vertices with no path on
/// `order` vertices.
pub fn connected_path_free(max_n: usize, order: usize) -> Vec<Graph> {
    connected_graphs_by_order(max_n, |g| is_pn_free(g, order)).into_iter().flatten().collect()
}
