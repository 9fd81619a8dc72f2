//! Tallies failure reasons over random instances of one size.

use std::collections::BTreeMap;

use polycycle::generators::{generate_instance, trial_seed, GenConfig};
use polycycle::pipeline::{embed_cycle, Outcome};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, trials) = (args.first().copied().unwrap_or(10), args.get(1).copied().unwrap_or(20), args.get(2).copied().unwrap_or(100));
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut pieces = 0;
    for t in 0..trials {
        let inst = generate_instance(&GenConfig::new(m, n, trial_seed(1, m, n, t))).unwrap();
        let r = embed_cycle(&inst).unwrap();
        pieces += r.structure.decomposition.piece_count();
        let key = match &r.outcome {
            Outcome::Success(_) => "Success".to_string(),
            Outcome::Failure(f) => format!("{f}").split('(').next().unwrap().to_string(),
        };
        *tally.entry(key).or_default() += 1;
    }
    println!("m={m} n={n} mean pieces {:.2}", pieces as f64 / trials as f64);
    for (k, v) in tally {
        println!("{k:>20} {v}");
    }
}
