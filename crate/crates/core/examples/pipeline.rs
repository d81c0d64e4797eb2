//! Colors 2-colored graphs whose vertices each lie in one part of each
//! color: parts become multigraph vertices, graph vertices become edges,
//! a König edge coloring of that bipartite multigraph gives the vertex
//! coloring.
//!
//! cargo run --example pipeline -- [count] [seed]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ramsey_orient::decompose::run_pipeline;
use ramsey_orient::generate::crossing_parts;
use ramsey_orient::goodness::{chromatic_number, is_proper_coloring};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let count = args.next().flatten().unwrap_or(8) as usize;
    let seed = args.next().flatten().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let size = 4 + i % 2;
        let cg = crossing_parts(&mut rng, 6 + i, size, i % 2 == 1, 5);
        let report = run_pipeline(&cg).expect("every vertex lies in two parts");
        let proper = is_proper_coloring(cg.graph(), &report.vertex_colors);
        let chi = chromatic_number(cg.graph(), Some(1_000_000)).exact();
        println!(
            "{} vertices, {} parts, max part degree {}: {} colors (proper: {proper}, chromatic number {})",
            cg.n(),
            report.mpm.parts.len(),
            report.max_degree,
            report.colors_used,
            chi.map_or("?".to_string(), |c| c.to_string()),
        );
    }
}
