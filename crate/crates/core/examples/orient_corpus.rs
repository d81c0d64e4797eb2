//! Orients every connected P7-free graph on at most 9 vertices with each
//! family constructor that applies and tallies the rule used.
//!
//! cargo run --release --example orient_corpus -- [max_vertices]

use std::collections::BTreeMap;
use std::time::Instant;

use ramsey_orient::corpus::connected_path_free;
use ramsey_orient::detect::is_pn_free;
use ramsey_orient::orientation::Family;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    let start = Instant::now();
    let corpus = connected_path_free(max_n, 7);
    println!("{} connected P7-free graphs on <= {max_n} vertices ({:.1?})", corpus.len(), start.elapsed());
    for family in Family::ALL {
        let members: Vec<_> = corpus.iter().filter(|g| is_pn_free(g, family.path_order())).collect();
        let mut rules = BTreeMap::new();
        let mut failures = Vec::new();
        for g in &members {
            match family.orient(g) {
                Ok(c) => *rules.entry(format!("{:?}", c.rule)).or_insert(0usize) += 1,
                Err(e) => failures.push((ramsey_orient::format::to_graph6(g), e.to_string())),
            }
        }
        println!("{family}: {} graphs, rules {rules:?}, failures {}", members.len(), failures.len());
        for (g6, e) in failures.iter().take(10) {
            println!("  {g6}: {e}");
        }
    }
}
