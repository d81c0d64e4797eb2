//! Verifies small path Ramsey numbers by exhaustive search over colorings
//! of complete graphs, one isomorphism class at a time.
//!
//! Run with `cargo run --release --example ramsey_values [max_order]`.

use ramsey_orient::goodness::{symmetric_levels, verify_ramsey_value, SearchConfig};
use ramsey_orient::Target;

fn main() {
    let max_order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let cases: Vec<(usize, Vec<Target>)> = vec![
        (5, vec![Target::Path(4); 2]),
        (6, vec![Target::Path(5); 2]),
        (6, vec![Target::Path(4); 3]),
        (6, vec![Target::Path(4), Target::Path(5)]),
        (8, vec![Target::Path(6); 2]),
        (9, vec![Target::Path(7); 2]),
    ];
    for (order, targets) in cases.into_iter().filter(|(o, _)| *o <= max_order) {
        let report = verify_ramsey_value(order, &targets, &SearchConfig::default());
        let names: Vec<String> = targets.iter().map(ToString::to_string).collect();
        println!(
            "R({}) = {order}: {:?} ({} extensions, {:.2?})",
            names.join(","),
            report.verdict,
            report.colorings_checked,
            report.elapsed
        );
    }
    // how many avoiding colorings survive at each order
    let levels = symmetric_levels(max_order.min(9), &[Target::Path(6), Target::Path(6)], None, None);
    for level in &levels.levels {
        println!("K{}: {} classes of colorings avoid P6 in both colors", level.order, level.classes);
    }
}
