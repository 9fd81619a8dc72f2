//! The L-shaped hexagon with three points, step by step.

use polycycle::geometry::{Point, SimplePolygon};
use polycycle::pipeline::{embed_cycle, Instance};

fn main() {
    let pts = |c: &[(i64, i64)]| c.iter().map(|&(x, y)| Point::new(x, y)).collect::<Vec<_>>();
    let polygon = SimplePolygon::new(pts(&[(0, 0), (8, 0), (8, 4), (4, 4), (4, 8), (0, 8)])).unwrap();
    let inst = Instance::new(polygon, pts(&[(2, 1), (6, 2), (1, 6)])).unwrap();
    let result = embed_cycle(&inst).unwrap();
    let s = &result.structure;

    for (i, piece) in s.decomposition.pieces.iter().enumerate() {
        println!("piece {i}: {:?}", piece.vertices());
    }
    println!("diagonals: {:?}", s.decomposition.diagonals);
    println!("tour: {:?}", s.tour.sequence);
    for c in &s.cycles {
        println!("piece {} ring: {:?}", c.piece, c.points);
    }
    for e in s.connections.accepted() {
        println!("connection {} -- {}", e.segment.a, e.segment.b);
    }
    println!("outcome: {:?}", result.outcome);
}
