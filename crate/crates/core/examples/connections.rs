//! Connection search events on a random instance.

use polycycle::generators::{generate_instance, GenConfig};
use polycycle::pipeline::embed_cycle;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let inst = generate_instance(&GenConfig::new(10, 15, seed)).unwrap();
    let r = embed_cycle(&inst).unwrap();
    let s = &r.structure;
    println!("tour: {:?}", s.tour.sequence);
    println!("points per piece: {:?}", s.assignment.counts());
    println!("requests: {:?}", s.connections.calls);
    for (pair, state) in s.connections.pairs() {
        println!("{pair:?}: {state:?}");
    }
    println!("events: {:?}", s.connections.events);
    println!("outcome: {:?}", r.outcome);
}
