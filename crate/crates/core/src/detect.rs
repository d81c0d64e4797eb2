//! Exact detection of paths, longest cycles, pendant structures and
//! forbidden subgraphs. Everything here is exponential-time search over
//! bitmask adjacency, meant for graphs on at most a few dozen vertices.

use std::fmt;
use std::str::FromStr;

use crate::graph::{connected_components, Graph, Vertex};

fn path_dfs(adj: &[u64], v: usize, visited: u64, len: usize, target: usize) -> bool {
    if len >= target {
        return true;
    }
    let mut next = adj[v] & !visited;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        if path_dfs(adj, w, visited | 1 << w, len + 1, target) {
            return true;
        }
    }
    false
}

/// True if the graph given by neighborhood masks has a path on `order`
/// vertices.
pub(crate) fn has_path_masks(adj: &[u64], order: usize) -> bool {
    if order == 0 {
        return true;
    }
    if order > adj.len() {
        return false;
    }
    (0..adj.len()).any(|v| path_dfs(adj, v, 1 << v, 1, order))
}

fn longest_dfs(adj: &[u64], v: usize, visited: u64, len: usize, best: &mut usize, cap: usize) {
    if len > *best {
        *best = len;
    }
    if *best >= cap {
        return;
    }
    let mut next = adj[v] & !visited;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        longest_dfs(adj, w, visited | 1 << w, len + 1, best, cap);
        if *best >= cap {
            return;
        }
    }
}

/// Number of vertices of a longest simple path (0 for the empty graph).
pub fn longest_path_order(g: &Graph) -> usize {
    let adj = g.adjacency_masks();
    let mut best = 0;
    for comp in connected_components(g) {
        let cap = comp.len();
        if cap <= best {
            continue;
        }
        let mut comp_best = 0;
        for &v in &comp {
            longest_dfs(&adj, v, 1 << v, 1, &mut comp_best, cap);
            if comp_best >= cap {
                break;
            }
        }
        best = best.max(comp_best);
    }
    best
}

/// True iff `g` has no (not necessarily induced) path on `order` vertices.
pub fn is_pn_free(g: &Graph, order: usize) -> bool {
    !has_path_masks(&g.adjacency_masks(), order)
}

/// Some path on exactly `order` vertices, if one exists. The search visits
/// start vertices and neighbors in ascending order.
pub fn find_path(g: &Graph, order: usize) -> Option<Vec<Vertex>> {
    fn dfs(adj: &[u64], path: &mut Vec<usize>, visited: u64, order: usize) -> bool {
        if path.len() == order {
            return true;
        }
        let v = *path.last().unwrap();
        let mut next = adj[v] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(w);
            if dfs(adj, path, visited | 1 << w, order) {
                return true;
            }
            path.pop();
        }
        false
    }
    if order == 0 || order > g.n() {
        return None;
    }
    let adj = g.adjacency_masks();
    (0..g.n()).find_map(|s| {
        let mut path = vec![s];
        dfs(&adj, &mut path, 1 << s, order).then_some(path)
    })
}

/// A longest cycle as a vertex sequence, or `None` for forests.
///
/// Among all longest cycles the lexicographically least sequence is
/// returned: it starts at the smallest vertex that lies on a longest cycle
/// and continues toward that vertex's smaller cycle neighbor.
pub fn longest_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let adj = g.adjacency_masks();
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    let mut path = Vec::with_capacity(n);

    // Cycles are enumerated from their minimum vertex `s`, using only
    // vertices above `s`, in lexicographic order; the first cycle of each new
    // maximum length is therefore the least one.
    fn dfs(adj: &[u64], s: usize, allowed: u64, visited: u64, path: &mut Vec<usize>, best: &mut Vec<usize>) {
        let v = *path.last().unwrap();
        if path.len() >= 3 && adj[v] >> s & 1 == 1 && path.len() > best.len() {
            *best = path.clone();
        }
        let remaining = (allowed & !visited).count_ones() as usize;
        if path.len() + remaining <= best.len() {
            return;
        }
        let mut next = adj[v] & allowed & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(w);
            dfs(adj, s, allowed, visited | 1 << w, path, best);
            path.pop();
        }
    }

    for comp in connected_components(g) {
        for (i, &s) in comp.iter().enumerate() {
            let allowed: u64 = comp[i..].iter().fold(0, |m, &v| m | 1 << v);
            if (allowed.count_ones() as usize) <= best.len() {
                break;
            }
            path.clear();
            path.push(s);
            dfs(&adj, s, allowed, 1 << s, &mut path, &mut best);
        }
    }
    (!best.is_empty()).then_some(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PendantKind {
    PendantEdge,
    PendantStar,
    PendantTriangle,
}

/// A pendant edge, star or triangle, joined to the rest of its component
/// only through `attach`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PendantStructure {
    pub kind: PendantKind,
    pub attach: Vertex,
    /// Vertices other than `attach`. For a star the center comes first.
    pub members: Vec<Vertex>,
}

impl PendantStructure {
    /// Edges of the structure as `(u, v)` pairs.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let v = self.attach;
        match self.kind {
            PendantKind::PendantEdge => vec![(v, self.members[0])],
            PendantKind::PendantTriangle => {
                vec![(v, self.members[0]), (v, self.members[1]), (self.members[0], self.members[1])]
            }
            PendantKind::PendantStar => {
                let center = self.members[0];
                std::iter::once((v, center)).chain(self.members[1..].iter().map(|&w| (center, w))).collect()
            }
        }
    }

    /// Checks the structure's defining shape inside `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let v = self.attach;
        if v >= g.n() || self.members.iter().any(|&m| m >= g.n() || m == v) {
            return false;
        }
        if self.edges().iter().any(|&(a, b)| !g.has_edge(a, b)) {
            return false;
        }
        let inside = |x: Vertex| x == v || self.members.contains(&x);
        // only the attach vertex may leave the structure
        let closed = self.members.iter().all(|&m| g.neighbors(m).all(inside));
        let own_edges = self.edges().len();
        let internal = self.members.iter().map(|&m| g.degree(m)).sum::<usize>();
        let attach_leaves = g.neighbors(v).any(|w| !inside(w));
        let size_ok = match self.kind {
            PendantKind::PendantEdge => self.members.len() == 1,
            PendantKind::PendantTriangle => self.members.len() == 2,
            PendantKind::PendantStar => self.members.len() >= 2,
        };
        // sum of member degrees counts each internal edge twice except the
        // ones at `v`, which the attach edges contribute once each
        let attach_edges = self.edges().iter().filter(|&&(a, b)| a == v || b == v).count();
        size_ok && closed && attach_leaves && internal == 2 * own_edges - attach_edges
    }
}

fn component_without(g: &Graph, removed: Vertex, start: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    seen[removed] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                stack.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

fn classify_branch(g: &Graph, v: Vertex, branch: &[Vertex]) -> Option<PendantStructure> {
    let attached: Vec<_> = branch.iter().copied().filter(|&x| g.has_edge(v, x)).collect();
    match (branch.len(), attached.len()) {
        (1, 1) => Some(PendantStructure { kind: PendantKind::PendantEdge, attach: v, members: vec![branch[0]] }),
        (2, 2) if g.has_edge(branch[0], branch[1]) && g.degree(branch[0]) == 2 && g.degree(branch[1]) == 2 => {
            Some(PendantStructure { kind: PendantKind::PendantTriangle, attach: v, members: branch.to_vec() })
        }
        (len, 1) if len >= 2 => {
            let center = attached[0];
            let leaves: Vec<_> = branch.iter().copied().filter(|&x| x != center).collect();
            let star = g.degree(center) == leaves.len() + 1
                && leaves.iter().all(|&w| g.degree(w) == 1 && g.has_edge(center, w));
            star.then(|| PendantStructure {
                kind: PendantKind::PendantStar,
                attach: v,
                members: std::iter::once(center).chain(leaves).collect(),
            })
        }
        _ => None,
    }
}

/// Pendant edges, stars and triangles hanging off the cyclic part of `g`.
///
/// A structure is a whole branch of the graph at its attach vertex, and is
/// reported when the rest of its component (attach vertex included) still
/// contains a cycle; acyclic components therefore contribute nothing. Only
/// maximal structures are kept: a pendant edge inside a reported star is
/// dropped. The least longest cycle is the core and is never itself
/// reported as a pendant triangle. Results are sorted by attach vertex,
/// then members.
pub fn find_pendant_structures(g: &Graph) -> Vec<PendantStructure> {
    let core = longest_cycle(g).map(|mut c| {
        c.sort_unstable();
        c
    });
    let mut comp_of = vec![0; g.n()];
    let comps = connected_components(g);
    let mut comp_edges = vec![0usize; comps.len()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }
    for &(u, _) in g.edges() {
        comp_edges[comp_of[u]] += 1;
    }
    let mut found = Vec::new();
    for v in 0..g.n() {
        let mut assigned = vec![false; g.n()];
        for w in g.neighbors(v) {
            if assigned[w] {
                continue;
            }
            let branch = component_without(g, v, w);
            for &x in &branch {
                assigned[x] = true;
            }
            let Some(s) = classify_branch(g, v, &branch) else {
                continue;
            };
            // the rest of the component is connected, so it has a cycle iff
            // it has at least as many edges as vertices
            let rest_vertices = comps[comp_of[v]].len() - branch.len();
            let rest_edges = comp_edges[comp_of[v]] - s.edges().len();
            if rest_edges < rest_vertices {
                continue;
            }
            if s.kind == PendantKind::PendantTriangle {
                let mut tri = vec![v, s.members[0], s.members[1]];
                tri.sort_unstable();
                if core.as_ref() == Some(&tri) {
                    continue;
                }
            }
            found.push(s);
        }
    }
    let edge_sets: Vec<Vec<(Vertex, Vertex)>> = found
        .iter()
        .map(|s| {
            let mut e: Vec<_> = s.edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            e.sort_unstable();
            e
        })
        .collect();
    let covered = |i: usize| {
        (0..found.len()).any(|j| {
            j != i
                && edge_sets[j].len() > edge_sets[i].len()
                && edge_sets[i].iter().all(|e| edge_sets[j].binary_search(e).is_ok())
        })
    };
    let mut out: Vec<_> = (0..found.len()).filter(|&i| !covered(i)).map(|i| found[i].clone()).collect();
    out.sort_by(|a, b| (a.attach, &a.members).cmp(&(b.attach, &b.members)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentShape {
    Star,
    Triangle,
}

/// If `g` is P4-free, the shape of each component (listed by smallest
/// vertex; isolated vertices count as stars); otherwise `None`.
pub fn p4_free_shape(g: &Graph) -> Option<Vec<ComponentShape>> {
    connected_components(g)
        .into_iter()
        .map(|comp| {
            let (h, _) = g.induced(&comp);
            let edges = h.edge_count();
            if h.n() == 3 && edges == 3 {
                Some(ComponentShape::Triangle)
            } else if edges + 1 == h.n() && (0..h.n()).filter(|&v| h.degree(v) > 1).count() <= 1 {
                Some(ComponentShape::Star)
            } else {
                None
            }
        })
        .collect()
}

/// A forbidden subgraph in a Ramsey-type statement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Path on the given number of vertices.
    Path(usize),
    /// Star on the given number of vertices.
    Star(usize),
    /// Arbitrary pattern graph.
    Graph(Graph),
}

impl Target {
    pub fn vertex_count(&self) -> usize {
        match self {
            Target::Path(n) | Target::Star(n) => *n,
            Target::Graph(h) => h.n(),
        }
    }

    pub fn as_graph(&self) -> Graph {
        match self {
            Target::Path(n) => Graph::path(*n),
            Target::Star(n) => Graph::star(*n),
            Target::Graph(h) => h.clone(),
        }
    }

    /// True if `g` contains the target as a subgraph.
    pub fn is_contained_in(&self, g: &Graph) -> bool {
        self.contained_in_masks(&g.adjacency_masks())
    }

    pub(crate) fn contained_in_masks(&self, adj: &[u64]) -> bool {
        match self {
            Target::Path(order) => has_path_masks(adj, *order),
            Target::Star(order) => match order {
                0 => true,
                1 => !adj.is_empty(),
                _ => adj.iter().any(|m| m.count_ones() as usize >= order - 1),
            },
            Target::Graph(h) => contains_subgraph(adj, h),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Path(n) => write!(f, "P{n}"),
            Target::Star(n) => write!(f, "S{n}"),
            Target::Graph(h) if h.is_complete() => write!(f, "K{}", h.n()),
            Target::Graph(h) => write!(f, "G[{}]", crate::format::to_graph6(h)),
        }
    }
}

impl FromStr for Target {
    type Err = String;

    /// Accepts `P<n>`, `S<n>`, `K<n>`, `C<n>`, or `G[<graph6>]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("G[").and_then(|r| r.strip_suffix(']')) {
            return crate::format::from_graph6(inner).map(Target::Graph).map_err(|e| e.to_string());
        }
        let (head, num) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let n: usize = num.parse().map_err(|_| format!("bad target `{s}`"))?;
        match head {
            "P" | "p" => Ok(Target::Path(n)),
            "S" | "s" => Ok(Target::Star(n)),
            "K" | "k" => Ok(Target::Graph(Graph::complete(n))),
            "C" | "c" if n >= 3 => Ok(Target::Graph(Graph::cycle(n))),
            _ => Err(format!("bad target `{s}`")),
        }
    }
}

/// Backtracking subgraph monomorphism test on bitmask adjacency.
fn contains_subgraph(adj: &[u64], pattern: &Graph) -> bool {
    let p = pattern.n();
    if p == 0 {
        return true;
    }
    if p > adj.len() {
        return false;
    }
    // order pattern vertices so that each (after the first of its component)
    // has an earlier neighbor
    let mut order = Vec::with_capacity(p);
    let mut placed = vec![false; p];
    while order.len() < p {
        let start = (0..p).filter(|&v| !placed[v]).max_by_key(|&v| pattern.degree(v)).unwrap();
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            for w in pattern.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let pmasks = pattern.adjacency_masks();
    let mut image = vec![usize::MAX; p];

    fn go(
        depth: usize,
        order: &[usize],
        pmasks: &[u64],
        pattern: &Graph,
        adj: &[u64],
        image: &mut [usize],
        used: u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let pv = order[depth];
        let mut candidates = (1u64 << adj.len()).wrapping_sub(1) & !used;
        if adj.len() == 64 {
            candidates = !used;
        }
        let mut pm = pmasks[pv];
        while pm != 0 {
            let q = pm.trailing_zeros() as usize;
            pm &= pm - 1;
            if image[q] != usize::MAX {
                candidates &= adj[image[q]];
            }
        }
        let need = pattern.degree(pv) as u32;
        while candidates != 0 {
            let h = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if adj[h].count_ones() < need {
                continue;
            }
            image[pv] = h;
            if go(depth + 1, order, pmasks, pattern, adj, image, used | 1 << h) {
                return true;
            }
            image[pv] = usize::MAX;
        }
        false
    }
    go(0, &order, &pmasks, pattern, adj, &mut image, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing;
    use proptest::prelude::*;

    /// Oracle: enumerate all injective vertex sequences of length `order` and
    /// test consecutive adjacency.
    fn brute_has_path(g: &Graph, order: usize) -> bool {
        fn extend(g: &Graph, seq: &mut Vec<usize>, order: usize) -> bool {
            if seq.len() == order {
                return true;
            }
            for v in 0..g.n() {
                if seq.contains(&v) {
                    continue;
                }
                if let Some(&last) = seq.last() {
                    if !g.has_edge(last, v) {
                        continue;
                    }
                }
                seq.push(v);
                if extend(g, seq, order) {
                    return true;
                }
                seq.pop();
            }
            false
        }
        order == 0 || extend(g, &mut Vec::new(), order)
    }

    /// Oracle: longest cycle length by trying every cyclic sequence.
    fn brute_longest_cycle(g: &Graph) -> usize {
        fn extend(g: &Graph, seq: &mut Vec<usize>, best: &mut usize) {
            if seq.len() >= 3 && g.has_edge(seq[0], *seq.last().unwrap()) {
                *best = (*best).max(seq.len());
            }
            for v in 0..g.n() {
                if seq.contains(&v) || !g.has_edge(*seq.last().unwrap(), v) {
                    continue;
                }
                seq.push(v);
                extend(g, seq, best);
                seq.pop();
            }
        }
        let mut best = 0;
        for s in 0..g.n() {
            extend(g, &mut vec![s], &mut best);
        }
        best
    }

    fn is_cycle(g: &Graph, c: &[usize]) -> bool {
        let mut sorted = c.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == c.len() && c.len() >= 3 && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    #[test]
    fn longest_path_examples() {
        assert_eq!(longest_path_order(&Graph::empty(4)), 1);
        assert_eq!(longest_path_order(&Graph::cycle(5)), 5);
        assert_eq!(longest_path_order(&Graph::complete(4)), 4);
        assert!(brute_has_path(&Graph::complete(4), 4));
        assert!(!brute_has_path(&Graph::complete(4), 5));
        assert_eq!(longest_path_order(&Graph::empty(0)), 0);
    }

    #[test]
    fn pn_free_examples() {
        assert!(is_pn_free(&Graph::complete(4), 5));
        assert!(!is_pn_free(&Graph::path(5), 5));
        // the red class of the N = 10 construction is K9 plus isolated vertices
        let red = Graph::complete(9).disjoint_union(&Graph::empty(4));
        assert!(is_pn_free(&red, 10));
        assert!(!is_pn_free(&red, 9));
        assert_eq!(find_path(&Graph::path(5), 5).unwrap().len(), 5);
        assert_eq!(find_path(&Graph::complete(3), 4), None);
    }

    #[test]
    fn longest_cycle_examples() {
        assert_eq!(longest_cycle(&Graph::star(6)), None);
        assert_eq!(longest_cycle(&Graph::path(4)), None);
        assert_eq!(longest_cycle(&Graph::complete(4)), Some(vec![0, 1, 2, 3]));
        assert_eq!(longest_cycle(&testing::four_cycle_rich()), Some(vec![0, 1, 2, 3]));
        // ties broken toward the lexicographically least sequence
        let two_triangles = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(longest_cycle(&two_triangles), Some(vec![0, 1, 2]));
        let g = Graph::new(5, [(4, 3), (3, 2), (2, 4), (0, 1)]).unwrap();
        assert_eq!(longest_cycle(&g), Some(vec![2, 3, 4]));
    }

    #[test]
    fn pendant_structures_of_small_graphs() {
        assert!(find_pendant_structures(&Graph::star(5)).is_empty());
        assert!(find_pendant_structures(&Graph::complete(3)).is_empty());

        let tri_tail = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(
            find_pendant_structures(&tri_tail),
            vec![PendantStructure { kind: PendantKind::PendantEdge, attach: 2, members: vec![3] }]
        );
    }

    #[test]
    fn pendant_star_away_from_the_cycle() {
        // triangle 4,5,7; path 7-6-8; leaves 0..3 at 8
        let g = Graph::new(9, [(0, 8), (1, 8), (2, 8), (3, 8), (4, 5), (4, 7), (5, 7), (6, 7), (6, 8)]).unwrap();
        assert_eq!(
            find_pendant_structures(&g),
            vec![PendantStructure { kind: PendantKind::PendantStar, attach: 6, members: vec![8, 0, 1, 2, 3] }]
        );
    }

    #[test]
    fn pendant_structures_at_a_hub() {
        let g = testing::hub_with_triangles();
        let found = find_pendant_structures(&g);
        let count = |k| found.iter().filter(|s| s.kind == k).count();
        assert_eq!(count(PendantKind::PendantEdge), 2);
        assert_eq!(count(PendantKind::PendantStar), 1);
        // four triangles at the hub, the least one is the core
        assert_eq!(count(PendantKind::PendantTriangle), 3);
        assert!(found.iter().all(|s| s.attach == 0 && s.is_valid_in(&g)));
        let star = found.iter().find(|s| s.kind == PendantKind::PendantStar).unwrap();
        assert_eq!(star.members, vec![10, 12, 13, 14]);
    }

    #[test]
    fn p4_free_shapes() {
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(p4_free_shape(&two_triangles), Some(vec![ComponentShape::Triangle, ComponentShape::Triangle]));
        assert_eq!(p4_free_shape(&Graph::path(4)), None);
        let mixed = Graph::star(4).disjoint_union(&Graph::complete(3)).disjoint_union(&Graph::complete(2));
        assert!(is_pn_free(&mixed, 4));
        assert_eq!(
            p4_free_shape(&mixed),
            Some(vec![ComponentShape::Star, ComponentShape::Triangle, ComponentShape::Star])
        );
    }

    #[test]
    fn target_parsing_and_containment() {
        assert_eq!("P5".parse::<Target>().unwrap(), Target::Path(5));
        assert_eq!("S3".parse::<Target>().unwrap(), Target::Star(3));
        assert_eq!("K3".parse::<Target>().unwrap().to_string(), "K3");
        assert!("X4".parse::<Target>().is_err());
        let c4: Target = "C4".parse().unwrap();
        assert!(c4.is_contained_in(&Graph::complete(4)));
        assert!(!c4.is_contained_in(&Graph::star(5)));
        assert!(Target::Star(4).is_contained_in(&Graph::star(4)));
        assert!(!Target::Star(5).is_contained_in(&Graph::cycle(6)));
        let g6: Target = "G[C~]".parse().unwrap();
        assert_eq!(g6, Target::Graph(Graph::complete(4)));
    }

    proptest! {
        #[test]
        fn path_search_matches_enumeration(g in arb_graph(8), order in 1usize..9) {
            prop_assert_eq!(!is_pn_free(&g, order), brute_has_path(&g, order));
        }

        #[test]
        fn longest_path_is_consistent(g in arb_graph(8)) {
            let l = longest_path_order(&g);
            prop_assert!(brute_has_path(&g, l));
            prop_assert!(!brute_has_path(&g, l + 1));
        }

        #[test]
        fn longest_cycle_matches_enumeration(g in arb_graph(8)) {
            match longest_cycle(&g) {
                None => prop_assert_eq!(brute_longest_cycle(&g), 0),
                Some(c) => {
                    prop_assert!(is_cycle(&g, &c));
                    prop_assert_eq!(c.len(), brute_longest_cycle(&g));
                }
            }
        }

        #[test]
        fn p4_shape_iff_p4_free(g in arb_graph(8)) {
            prop_assert_eq!(p4_free_shape(&g).is_some(), is_pn_free(&g, 4));
        }

        #[test]
        fn pendant_structures_are_valid_and_edge_disjoint(g in arb_graph(9)) {
            let found = find_pendant_structures(&g);
            let mut used = std::collections::HashSet::new();
            for s in &found {
                prop_assert!(s.is_valid_in(&g), "{:?}", s);
                for (a, b) in s.edges() {
                    prop_assert!(used.insert((a.min(b), a.max(b))));
                }
            }
        }

        #[test]
        fn subgraph_search_agrees_for_paths(g in arb_graph(7), order in 1usize..8) {
            let as_graph = Target::Graph(Graph::path(order));
            prop_assert_eq!(as_graph.is_contained_in(&g), Target::Path(order).is_contained_in(&g));
        }
    }
}
