//! Random 2-colored graphs with random partial orientations, checked
//! against the minimum-degree lemma for each path family: inputs meeting
//! the hypotheses must have every part free of oriented edges.
//!
//! cargo run --example lemma_suite -- [inputs_per_family] [seed]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ramsey_orient::decompose::{validate_technical_lemma, LemmaVerdict};
use ramsey_orient::generate::{crossing_parts, random_orientation};
use ramsey_orient::orientation::{orient_colored, Family};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let count = args.next().flatten().unwrap_or(200) as usize;
    let seed = args.next().flatten().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for family in Family::ALL {
        let params = family.params();
        let (mut holds, mut hypothesis, mut counterexamples) = (0, 0, 0);
        for i in 0..count {
            let cg = crossing_parts(&mut rng, params.t + 1 + i % 3, params.t, i % 2 == 0, params.n);
            let po = if i % 5 == 0 {
                orient_colored(&cg, family).expect("cliques below the path order").0
            } else {
                random_orientation(&mut rng, &cg, 0.02 * (i % 5) as f64)
            };
            match validate_technical_lemma(&po, params).expect("parts are components").verdict {
                LemmaVerdict::Holds => holds += 1,
                LemmaVerdict::HypothesisFailed => hypothesis += 1,
                LemmaVerdict::CounterexampleCandidate => counterexamples += 1,
            }
        }
        println!(
            "{family} {params:?}: {holds} hold, {hypothesis} fail a hypothesis, {counterexamples} counterexamples"
        );
    }
}
