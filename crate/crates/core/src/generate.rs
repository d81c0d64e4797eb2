//! Seeded random instances for property checks: 2-colored graphs whose
//! parts are small cliques crossing each other, bipartite multigraphs, and
//! random partial orientations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{connected_components, ColoredGraph, Graph, Multigraph, PartialOrientation};
use crate::orientation::{BLUE, RED};

/// A 2-colored graph in which every vertex lies in exactly one blue and one
/// red part. Vertices are the edges of a `size`-regular bipartite graph
/// between `groups` blue and `groups` red part labels (a union of `size`
/// relabeled cyclic perfect matchings); each part is a clique.
/// With `thin`, random edges inside parts are then removed while every
/// part stays connected and every vertex keeps degree at least `min_degree`.
pub fn crossing_parts<R: Rng>(rng: &mut R, groups: usize, size: usize, thin: bool, min_degree: usize) -> ColoredGraph {
    assert!(groups >= size && size >= 1, "need at least `size` groups");
    // `size` distinct cyclic shifts never repeat a pair; random relabeling
    // of both sides hides the cyclic structure
    let mut shifts: Vec<usize> = (0..groups).collect();
    shifts.shuffle(rng);
    let mut blue: Vec<usize> = (0..groups).collect();
    blue.shuffle(rng);
    let mut red: Vec<usize> = (0..groups).collect();
    red.shuffle(rng);
    let pairs: Vec<(usize, usize)> = shifts[..size]
        .iter()
        .flat_map(|&d| (0..groups).map(move |i| (i, (i + d) % groups)))
        .map(|(i, j)| (blue[i], red[j]))
        .collect();
    let n = pairs.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if pairs[u].0 == pairs[v].0 {
                edges.push((u, v, BLUE));
            } else if pairs[u].1 == pairs[v].1 {
                edges.push((u, v, RED));
            }
        }
    }
    let mut cg = ColoredGraph::from_colored_edges(n, 2, edges).expect("pairs are distinct");
    if thin {
        let mut order: Vec<usize> = (0..cg.graph().edge_count()).collect();
        order.shuffle(rng);
        let mut keep = vec![true; order.len()];
        for e in order {
            if rng.gen_bool(0.5) {
                continue;
            }
            let (u, v) = cg.graph().endpoints(e);
            let degree = |w: usize| cg.graph().incident(w).iter().filter(|&&(_, f)| keep[f]).count();
            if degree(u) <= min_degree || degree(v) <= min_degree {
                continue;
            }
            keep[e] = false;
            let c = cg.color(e);
            let class = Graph::new(
                n,
                cg.graph().edges().iter().enumerate().filter(|&(f, _)| keep[f] && cg.color(f) == c).map(|(_, &p)| p),
            )
            .expect("subgraph");
            // u and v must stay in one part
            let comp = connected_components(&class).into_iter().find(|c| c.contains(&u)).unwrap();
            if !comp.contains(&v) {
                keep[e] = true;
            }
        }
        cg = ColoredGraph::from_colored_edges(
            n,
            2,
            cg.graph().edges().iter().enumerate().filter(|&(e, _)| keep[e]).map(|(e, &(u, v))| (u, v, cg.color(e))),
        )
        .expect("subgraph");
    }
    cg
}

/// A bipartite multigraph with sides of 1..=8 vertices and maximum degree
/// at most `max_degree`; returns it with the side of each vertex.
pub fn bipartite_multigraph<R: Rng>(rng: &mut R, max_degree: usize) -> (Multigraph, Vec<usize>) {
    let a = rng.gen_range(1..=8);
    let b = rng.gen_range(1..=8);
    let mut mg = Multigraph::new(a + b);
    let mut degree = vec![0usize; a + b];
    let attempts = rng.gen_range(1..=a.max(b) * max_degree);
    for _ in 0..attempts {
        let u = rng.gen_range(0..a);
        let v = a + rng.gen_range(0..b);
        if degree[u] < max_degree && degree[v] < max_degree {
            let label = mg.edges().len();
            mg.add_edge(u, v, label).expect("distinct labels");
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    let sides = (0..a + b).map(|v| usize::from(v >= a)).collect();
    (mg, sides)
}

/// Orients each edge of `cg` with probability `p`, in a random direction.
pub fn random_orientation<R: Rng>(rng: &mut R, cg: &ColoredGraph, p: f64) -> PartialOrientation {
    let mut po = PartialOrientation::unoriented(cg.clone());
    for &(u, v) in cg.graph().edges() {
        if rng.gen_bool(p) {
            let (from, to) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            po.set_arc(from, to).expect("edge exists");
        }
    }
    po
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::monochromatic_parts;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn crossing_parts_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for thin in [false, true] {
            for size in [4, 5] {
                let cg = crossing_parts(&mut rng, 9, size, thin, 5);
                assert_eq!(cg.n(), 9 * size);
                assert!(cg.graph().min_degree() >= 5);
                let parts = monochromatic_parts(&cg);
                assert_eq!(parts.len(), 18);
                assert!(parts.iter().all(|p| p.vertices.len() == size));
            }
        }
    }

    #[test]
    fn multigraphs_respect_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let (mg, sides) = bipartite_multigraph(&mut rng, 8);
            assert!(mg.max_degree() <= 8);
            assert!(mg.edges().iter().all(|&(u, v)| sides[u] != sides[v]));
        }
    }
}
