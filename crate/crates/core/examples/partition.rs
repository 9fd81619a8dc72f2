//! Convex partition of a random polygon, its dual tree and Euler tour.

use polycycle::generators::{random_simple_polygon, GenConfig};
use polycycle::partition::{convex_partition, dual_tree, euler_tour, triangulate};

fn main() {
    let m = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(15);
    let polygon = random_simple_polygon(&GenConfig::new(m, 0, 7)).unwrap();
    let triangles = triangulate(&polygon).unwrap();
    let d = convex_partition(&polygon).unwrap();
    let tree = dual_tree(&d);
    let tour = euler_tour(&tree, 0).unwrap();

    println!("{m}-gon with {} reflex vertices", d.reflex_count);
    println!("{} triangles -> {} convex pieces", triangles.bounded_faces().len(), d.piece_count());
    println!("essential diagonals: {:?}", d.diagonal_vertices);
    println!("dual tree edges: {:?}", tree.edges.iter().map(|e| (e.0, e.1)).collect::<Vec<_>>());
    println!("euler tour ({} = 2 * {} + 1): {:?}", tour.len(), tree.edge_count(), tour.sequence);
}
