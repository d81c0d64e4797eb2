//! Builds the two-colored complete graph with no monochromatic P_N, checks
//! it, orients it and prints it as graph6 and JSON.
//!
//! cargo run --example witness -- [N]

use ramsey_orient::detect::find_path;
use ramsey_orient::format::{orientation_to_json, to_graph6};
use ramsey_orient::orientation::{build_witness, witness_orientation, witness_params};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let cg = match build_witness(order) {
        Ok(cg) => cg,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("N = {order}: K{} in {} colors", cg.n(), cg.k());
    for c in 0..cg.k() {
        let class = cg.color_subgraph(c).expect("color in range");
        println!("  color {c}: {} edges, P{order} present: {}", class.edge_count(), find_path(&class, order).is_some());
    }
    let params = witness_params(order);
    println!("orientation parameters (n, s, t) = ({}, {}, {})", params.n, params.s, params.t);
    println!("{}", to_graph6(cg.graph()));
    println!("{}", orientation_to_json(&witness_orientation(order).expect("valid order")));
}
