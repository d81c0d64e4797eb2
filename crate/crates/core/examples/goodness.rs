//! Checks every 2-coloring of non-complete hosts for a monochromatic path,
//! comparing the three search engines.
//!
//! cargo run --release --example goodness

use ramsey_orient::goodness::{chromatic_number, verify_goodness, SearchConfig, SearchMode};
use ramsey_orient::{Graph, Target};

fn main() {
    // K6 minus an edge and K6 minus a perfect matching, against R(P5, P5) = 6
    let minus_edge = Graph::from_fn(6, |u, v| (u, v) != (0, 1));
    let minus_matching = Graph::from_fn(6, |u, v| v != u + 1 || u % 2 == 1);
    let targets = [Target::Path(5), Target::Path(5)];
    for (name, g) in [("K6 - e", &minus_edge), ("K6 - 3e", &minus_matching), ("C5", &Graph::cycle(5))] {
        println!("{name}: chromatic number {:?}", chromatic_number(g, None));
        for mode in [SearchMode::Reference, SearchMode::Pruned] {
            let cert = verify_goodness(g, &targets, &SearchConfig::with_mode(mode));
            print!("  {mode:?}: {:?} after {} colorings", cert.verdict, cert.colorings_checked);
            match &cert.witness {
                Some(_) => println!(", avoiding coloring re-checked: {}", cert.witness_is_valid(&targets)),
                None => println!(),
            }
        }
    }
}
