//! Search for an edge coloring of a host graph in which color `i` contains
//! no copy of target `i`.
//!
//! Three engines share one report type:
//!
//! * `Reference` walks every coloring in lexicographic order, no pruning.
//! * `Pruned` assigns edges in order of their larger endpoint and abandons a
//!   branch as soon as some color class contains its target. The space is
//!   split into fixed prefixes run in parallel; a task only stops early when
//!   a lower-numbered task has already found an avoider, so the reported
//!   witness is always the lexicographically first one.
//! * `Symmetric` (complete hosts only) builds avoiding colorings of `K_m`
//!   one vertex at a time, keeping one representative per isomorphism class.
//!
//! For the first two engines `colorings_checked` is the number of colorings
//! accounted for in lexicographic order (a pruned branch accounts for all
//! its completions), and the coloring budget limits the searched prefix of
//! that order, so results do not depend on the number of workers. For the
//! symmetric engine it is the number of one-vertex extensions examined.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_labeling, ColoredMatrix};
use crate::detect::Target;
use crate::graph::{ColoredGraph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Reference,
    Pruned,
    Symmetric,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Budget {
    pub max_colorings: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_colorings: None, max_seconds: None };

    pub fn colorings(max: u64) -> Self {
        Budget { max_colorings: Some(max), max_seconds: None }
    }
}

/// Engine choice, budget and degree of parallelism. `mode: None` picks the
/// symmetric engine for complete hosts and the pruned one otherwise.
#[derive(Clone, Debug, Default)]
pub struct SearchConfig {
    pub mode: Option<SearchMode>,
    pub budget: Budget,
    pub workers: Option<usize>,
}

impl SearchConfig {
    pub fn with_mode(mode: SearchMode) -> Self {
        SearchConfig { mode: Some(mode), ..Default::default() }
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    fn resolve(&self, host: &Graph) -> SearchMode {
        match self.mode {
            Some(SearchMode::Symmetric) if !host.is_complete() => SearchMode::Pruned,
            Some(m) => m,
            None if host.is_complete() && host.n() >= 2 => SearchMode::Symmetric,
            None => SearchMode::Pruned,
        }
    }

    /// Runs `f` on a pool with the configured number of workers.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build().expect("thread pool").install(f),
            None => f(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    /// A coloring with no target in its color.
    Avoider(ColoredGraph),
    /// Every coloring contains some target in its color.
    NoAvoider,
    /// The budget ran out first.
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub mode: SearchMode,
    pub colorings_checked: u128,
    pub elapsed: Duration,
}

/// Looks for a coloring of `host` with no copy of `targets[i]` in color `i`.
pub fn find_avoiding_coloring(host: &Graph, targets: &[Target], config: &SearchConfig) -> SearchReport {
    assert!(!targets.is_empty(), "at least one color");
    let start = Instant::now();
    let mode = config.resolve(host);
    let deadline = config.budget.max_seconds.map(|s| start + Duration::from_secs_f64(s));
    let (outcome, checked) = config.install(|| match mode {
        SearchMode::Symmetric => {
            let levels = symmetric_levels(host.n(), targets, config.budget.max_colorings, deadline);
            let outcome = match levels.levels.last() {
                Some(level) if level.complete => match &level.first {
                    Some(w) => SearchOutcome::Avoider(w.clone()),
                    None => SearchOutcome::NoAvoider,
                },
                _ => SearchOutcome::Indeterminate,
            };
            (outcome, levels.checked)
        }
        SearchMode::Pruned => LexSearch::new(host, targets, config.budget, deadline, true).run(),
        SearchMode::Reference => LexSearch::new(host, targets, config.budget, deadline, false).run(),
    });
    SearchReport { outcome, mode, colorings_checked: checked, elapsed: start.elapsed() }
}

/// Order in which edges are colored: by larger endpoint, then smaller.
pub(crate) fn edge_order(host: &Graph) -> Vec<(usize, usize)> {
    let mut edges = host.edges().to_vec();
    edges.sort_by_key(|&(u, v)| (v, u));
    edges
}

struct LexSearch<'a> {
    n: usize,
    edges: Vec<(usize, usize)>,
    targets: &'a [Target],
    k: usize,
    /// `weights[d]` = number of colorings of edges `d..`.
    weights: Vec<u128>,
    limit: u128,
    deadline: Option<Instant>,
    prune: bool,
}

struct Task {
    found: Option<(u128, Vec<u8>)>,
    timed_out: bool,
}

impl<'a> LexSearch<'a> {
    fn new(host: &Graph, targets: &'a [Target], budget: Budget, deadline: Option<Instant>, prune: bool) -> Self {
        let edges = edge_order(host);
        let k = targets.len();
        let mut weights = vec![1u128; edges.len() + 1];
        for d in (0..edges.len()).rev() {
            weights[d] = weights[d + 1].saturating_mul(k as u128);
        }
        let total = weights[0];
        let limit = budget.max_colorings.map_or(total, |m| total.min(m as u128));
        LexSearch { n: host.n(), edges, targets, k, weights, limit, deadline, prune }
    }

    fn hits(&self, masks: &[u64], c: usize) -> bool {
        self.targets[c].contained_in_masks(masks)
    }

    fn run(&self) -> (SearchOutcome, u128) {
        let total = self.weights[0];
        let e = self.edges.len();
        // enough prefixes to balance the pool, never more than the edges allow
        let wanted = (rayon::current_num_threads() * 16) as u128;
        let mut depth = 0;
        while depth < e && (self.k as u128).pow(depth as u32) < wanted {
            depth += 1;
        }
        let tasks = (self.k as u128).pow(depth as u32);
        let best = AtomicUsize::new(usize::MAX);
        let stop = AtomicBool::new(false);
        let results: Vec<Task> =
            (0..tasks as usize).into_par_iter().map(|t| self.run_task(t, depth, &best, &stop)).collect();
        if let Some((rank, colors)) = results.iter().find_map(|r| r.found.clone()) {
            let cg = ColoredGraph::from_colored_edges(
                self.n,
                self.k,
                self.edges.iter().zip(&colors).map(|(&(u, v), &c)| (u, v, c as usize)),
            )
            .expect("valid coloring");
            // tasks before the winner all ran to completion
            let earlier_timeout = results.iter().take_while(|r| r.found.is_none()).any(|r| r.timed_out);
            if earlier_timeout {
                return (SearchOutcome::Indeterminate, rank);
            }
            return (SearchOutcome::Avoider(cg), rank + 1);
        }
        if results.iter().any(|r| r.timed_out) || self.limit < total {
            return (SearchOutcome::Indeterminate, self.limit);
        }
        (SearchOutcome::NoAvoider, total)
    }

    fn run_task(&self, task: usize, depth: usize, best: &AtomicUsize, stop: &AtomicBool) -> Task {
        let mut colors = vec![0u8; self.edges.len()];
        let mut masks = vec![vec![0u64; self.n]; self.k];
        let mut rest = task;
        for d in (0..depth).rev() {
            colors[d] = (rest % self.k) as u8;
            rest /= self.k;
        }
        let mut lo = 0u128;
        for (d, &color) in colors.iter().enumerate().take(depth) {
            let c = color as usize;
            lo += c as u128 * self.weights[d + 1];
            let (u, v) = self.edges[d];
            masks[c][u] |= 1 << v;
            masks[c][v] |= 1 << u;
            if lo >= self.limit || (self.prune && self.hits(&masks[c], c)) {
                return Task { found: None, timed_out: false };
            }
        }
        let mut state = DfsState { task, best, stop, timed_out: false, steps: 0 };
        let found = self.dfs(depth, lo, &mut colors, &mut masks, &mut state);
        if found.is_some() {
            best.fetch_min(task, Ordering::SeqCst);
        }
        Task { found, timed_out: state.timed_out }
    }

    fn dfs(
        &self,
        d: usize,
        lo: u128,
        colors: &mut Vec<u8>,
        masks: &mut [Vec<u64>],
        state: &mut DfsState<'_>,
    ) -> Option<(u128, Vec<u8>)> {
        if lo >= self.limit || state.cancelled(self.deadline) {
            return None;
        }
        if d == self.edges.len() {
            let avoids = self.prune || (0..self.k).all(|c| !self.hits(&masks[c], c));
            return avoids.then(|| (lo, colors.clone()));
        }
        let (u, v) = self.edges[d];
        for c in 0..self.k {
            colors[d] = c as u8;
            masks[c][u] |= 1 << v;
            masks[c][v] |= 1 << u;
            let pruned = self.prune && self.hits(&masks[c], c);
            let found =
                if pruned { None } else { self.dfs(d + 1, lo + c as u128 * self.weights[d + 1], colors, masks, state) };
            masks[c][u] &= !(1 << v);
            masks[c][v] &= !(1 << u);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

struct DfsState<'a> {
    task: usize,
    best: &'a AtomicUsize,
    stop: &'a AtomicBool,
    timed_out: bool,
    steps: u64,
}

impl DfsState<'_> {
    fn cancelled(&mut self, deadline: Option<Instant>) -> bool {
        self.steps += 1;
        if !self.steps.is_multiple_of(1024) {
            return self.timed_out;
        }
        if self.best.load(Ordering::Relaxed) < self.task {
            return true;
        }
        if let Some(d) = deadline {
            if Instant::now() >= d {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        if self.stop.load(Ordering::Relaxed) {
            self.timed_out = true;
        }
        self.timed_out
    }
}

/// Avoiding colorings of `K_m` for one `m`, up to isomorphism.
#[derive(Clone, Debug)]
pub struct Level {
    pub order: usize,
    /// Number of isomorphism classes of avoiding colorings.
    pub classes: usize,
    /// The avoider with the least canonical code, if any.
    pub first: Option<ColoredGraph>,
    /// False if the budget ran out before the level was finished.
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct Levels {
    pub levels: Vec<Level>,
    pub checked: u128,
}

fn colored_from_column_major(order: usize, k: usize, colors: &[u8]) -> ColoredGraph {
    let mut edges = Vec::with_capacity(colors.len());
    let mut i = 0;
    for v in 1..order {
        for u in 0..v {
            edges.push((u, v, colors[i] as usize));
            i += 1;
        }
    }
    ColoredGraph::from_colored_edges(order, k, edges).expect("complete coloring")
}

fn masks_from_column_major(order: usize, k: usize, colors: &[u8]) -> Vec<Vec<u64>> {
    let mut masks = vec![vec![0u64; order]; k];
    let mut i = 0;
    for v in 1..order {
        for u in 0..v {
            let c = colors[i] as usize;
            masks[c][u] |= 1 << v;
            masks[c][v] |= 1 << u;
            i += 1;
        }
    }
    masks
}

/// Canonical column-major colors of a coloring of `K_order`.
fn canonical_colors(order: usize, colors: &[u8]) -> Vec<u8> {
    let mut m = ColoredMatrix::new(order, vec![0; order]);
    let mut i = 0;
    for v in 1..order {
        for u in 0..v {
            m.set(u, v, colors[i] + 1);
            i += 1;
        }
    }
    let (code, _) = canonical_labeling(&m);
    code[4 * order..].iter().map(|c| c - 1).collect()
}

/// Avoiding colorings of `K_1, ..., K_n` up to isomorphism, built by adding
/// one vertex at a time. Stops with an incomplete level when the next level
/// would push the examined extensions past `max_colorings`, or at the
/// deadline.
pub fn symmetric_levels(n: usize, targets: &[Target], max_colorings: Option<u64>, deadline: Option<Instant>) -> Levels {
    let k = targets.len();
    let avoids = |order: usize, colors: &[u8]| {
        let masks = masks_from_column_major(order, k, colors);
        (0..k).all(|c| !targets[c].contained_in_masks(&masks[c]))
    };
    let mut levels = Vec::new();
    let mut checked: u128 = 0;
    if n == 0 {
        return Levels { levels, checked };
    }
    let mut reps: Vec<Vec<u8>> = if avoids(1, &[]) { vec![vec![]] } else { vec![] };
    checked += 1;
    levels.push(Level {
        order: 1,
        classes: reps.len(),
        first: reps.first().map(|c| colored_from_column_major(1, k, c)),
        complete: true,
    });
    for order in 2..=n {
        let m = order - 1;
        let per_rep = (k as u128).pow(m as u32);
        let cost = per_rep * reps.len() as u128;
        let over_budget = max_colorings.is_some_and(|max| checked + cost > max as u128);
        let timed_out = deadline.is_some_and(|d| Instant::now() >= d);
        if over_budget || timed_out {
            levels.push(Level { order, classes: 0, first: None, complete: false });
            break;
        }
        let stop = AtomicBool::new(false);
        let mut next: Vec<Vec<u8>> = reps
            .par_iter()
            .flat_map_iter(|rep| {
                let mut local = Vec::new();
                for x in 0..per_rep {
                    if x % 256 == 0 && deadline.is_some_and(|d| Instant::now() >= d) {
                        stop.store(true, Ordering::Relaxed);
                    }
                    if stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let mut colors = rep.clone();
                    let mut rest = x;
                    for _ in 0..m {
                        colors.push((rest % k as u128) as u8);
                        rest /= k as u128;
                    }
                    if avoids(order, &colors) {
                        local.push(canonical_colors(order, &colors));
                    }
                }
                local
            })
            .collect();
        if stop.load(Ordering::Relaxed) {
            levels.push(Level { order, classes: 0, first: None, complete: false });
            break;
        }
        checked += cost;
        next.par_sort_unstable();
        next.dedup();
        levels.push(Level {
            order,
            classes: next.len(),
            first: next.first().map(|c| colored_from_column_major(order, k, c)),
            complete: true,
        });
        reps = next;
    }
    Levels { levels, checked }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paths(order: usize, k: usize) -> Vec<Target> {
        vec![Target::Path(order); k]
    }

    fn reverify(cg: &ColoredGraph, targets: &[Target]) -> bool {
        (0..cg.k()).all(|c| !targets[c].is_contained_in(&cg.color_subgraph(c).unwrap()))
    }

    #[test]
    fn engines_agree_on_small_hosts() {
        for (host, targets) in [
            (Graph::complete(4), paths(4, 2)),
            (Graph::complete(5), paths(4, 2)),
            (Graph::cycle(5), paths(3, 2)),
            (Graph::complete(4), vec![Target::Path(3), Target::Path(4)]),
        ] {
            let outcomes: Vec<_> = [SearchMode::Reference, SearchMode::Pruned, SearchMode::Symmetric]
                .into_iter()
                .map(|m| find_avoiding_coloring(&host, &targets, &SearchConfig::with_mode(m)))
                .collect();
            let found: Vec<bool> = outcomes.iter().map(|r| matches!(r.outcome, SearchOutcome::Avoider(_))).collect();
            assert!(found.iter().all(|&f| f == found[0]), "{host:?}: {found:?}");
            for r in &outcomes {
                if let SearchOutcome::Avoider(cg) = &r.outcome {
                    assert!(reverify(cg, &targets));
                }
            }
            // the pruned witness is the lexicographically first avoider
            assert_eq!(outcomes[0].outcome, outcomes[1].outcome);
            assert_eq!(outcomes[0].colorings_checked, outcomes[1].colorings_checked);
        }
    }

    #[test]
    fn results_do_not_depend_on_workers() {
        let host = Graph::complete(5);
        let targets = paths(5, 2);
        let reports: Vec<_> = [1, 2, 7]
            .into_iter()
            .map(|w| find_avoiding_coloring(&host, &targets, &SearchConfig::with_mode(SearchMode::Pruned).workers(w)))
            .collect();
        for r in &reports[1..] {
            assert_eq!(r.outcome, reports[0].outcome);
            assert_eq!(r.colorings_checked, reports[0].colorings_checked);
        }
    }

    #[test]
    fn budget_gives_indeterminate() {
        let host = Graph::complete(6);
        let targets = paths(5, 2);
        let r = find_avoiding_coloring(
            &host,
            &targets,
            &SearchConfig::with_mode(SearchMode::Pruned).budget(Budget::colorings(1000)),
        );
        assert_eq!(r.outcome, SearchOutcome::Indeterminate);
        assert_eq!(r.colorings_checked, 1000);
        let full = find_avoiding_coloring(&host, &targets, &SearchConfig::with_mode(SearchMode::Pruned));
        assert_eq!(full.outcome, SearchOutcome::NoAvoider);
        assert_eq!(full.colorings_checked, 1 << 15);
    }

    #[test]
    fn symmetric_levels_count_classes() {
        // 2-colorings of K_m up to isomorphism are graphs on m vertices:
        // with an unreachable target every class survives
        let targets = vec![Target::Path(10), Target::Path(10)];
        let levels = symmetric_levels(5, &targets, None, None);
        let classes: Vec<usize> = levels.levels.iter().map(|l| l.classes).collect();
        assert_eq!(classes, vec![1, 2, 4, 11, 34]);
    }
}
