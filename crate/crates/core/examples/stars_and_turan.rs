//! Star Ramsey numbers with their exhaustive check on small hosts, which
//! case of Brooks' theorem applies to a few hosts, and degree-based
//! thresholds from path Turán bounds.
//!
//! cargo run --release --example stars_and_turan

use ramsey_orient::goodness::{brooks_star_check, star_ramsey, turan_threshold, verify_ramsey_value, SearchConfig};
use ramsey_orient::{Graph, Target};

fn main() {
    println!("R_k(S_n), rows n = 2..=6, columns k = 1..=4");
    for n in 2..=6 {
        let row: Vec<String> = (1..=4).map(|k| format!("{:3}", star_ramsey(n, k))).collect();
        println!("  S{n}: {}", row.join(" "));
    }
    for (n, k) in [(3, 2), (4, 2), (3, 3), (5, 2)] {
        let order = star_ramsey(n, k);
        let report = verify_ramsey_value(order, &vec![Target::Star(n); k], &SearchConfig::default());
        println!("R_{k}(S{n}) = {order}: {:?} in {:.2?}", report.verdict, report.elapsed);
    }
    let wheel = Graph::new(6, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5)])).expect("simple");
    for (name, g) in [("C7", Graph::cycle(7)), ("W5", wheel), ("C6", Graph::cycle(6))] {
        println!("{name}, S3 in 2 colors: {:?}", brooks_star_check(&g, 3, 2));
    }
    for targets in [vec![Target::Path(4), Target::Path(5)], vec![Target::Path(4); 3]] {
        let names: Vec<String> = targets.iter().map(ToString::to_string).collect();
        println!(
            "threshold on 6 vertices for {}: {}",
            names.join(","),
            turan_threshold(6, &targets, None).expect("paths")
        );
    }
}
