//! Writes a random instance in the text format.

use polycycle::generators::{generate_instance, GenConfig};
use polycycle::io::serialize_instance;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n, seed) = (
        args.first().copied().unwrap_or(10) as usize,
        args.get(1).copied().unwrap_or(8) as usize,
        args.get(2).copied().unwrap_or(1),
    );
    let inst = generate_instance(&GenConfig::new(m, n, seed)).unwrap();
    print!("{}", serialize_instance(&inst));
    eprintln!("reflex vertices: {}", inst.polygon.reflex_vertices().len());
}
