//! Builds the dual hypergraph of random triangle-decomposed 3-colored
//! hosts, then computes the chromatic index of every valid instance up to
//! a size bound, flagging any that need six or more colors.
//!
//! cargo run --release --example chromatic_index -- [max_hyperedges] [seed]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ramsey_orient::hypergraph::{
    build_dual, chromatic_index_search, detect_triangle_decomposition, random_decomposed_host, random_instance,
    valid_instances,
};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let max_edges = args.next().flatten().unwrap_or(12) as usize;
    let seed = args.next().flatten().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for p in 3..7 {
        let host = random_decomposed_host(p, &mut rng);
        let dual = build_dual(&detect_triangle_decomposition(&host).expect("generated hosts decompose"));
        println!(
            "host on {} vertices: dual has {} vertices, {} hyperedges, {:?}",
            host.n(),
            dual.hypergraph.vertices,
            dual.hypergraph.edges.len(),
            dual.properties
        );
    }
    let mut corpus = valid_instances(max_edges);
    let exhaustive = corpus.len();
    corpus.extend((5..9).map(|p| random_instance(p, &mut rng)));
    let summary = chromatic_index_search(&corpus, Some(10_000_000));
    println!(
        "{exhaustive} instances with <= {max_edges} hyperedges plus {} random: max chromatic index {:?}, {} flagged, {} indeterminate",
        corpus.len() - exhaustive,
        summary.max_chromatic_index,
        summary.flagged,
        summary.indeterminate
    );
}
