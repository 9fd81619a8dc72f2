//! Compares the heuristic with exhaustive search on the checked-in
//! instance where the heuristic gives up although a cycle exists.

use polycycle::io::parse_instance;
use polycycle::pipeline::embed_cycle;
use polycycle::verify::{brute_force_exists, validate_cycle, DEFAULT_ORACLE_CAP};

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/incomplete_witness.txt");
    let inst = parse_instance(&std::fs::read_to_string(path).unwrap()).unwrap();
    let result = embed_cycle(&inst).unwrap();
    println!("heuristic: {:?}", result.outcome);
    match brute_force_exists(&inst, DEFAULT_ORACLE_CAP).unwrap() {
        Some(cycle) => {
            println!("oracle witness: {cycle:?}");
            println!("witness valid: {}", validate_cycle(&inst, &cycle).is_valid());
        }
        None => println!("oracle: no cycle"),
    }
}
