//! Leftmost/rightmost polygonization of a point set.

use polycycle::embedding::simple_polygon_generation;
use polycycle::geometry::{validate_simple_polygon, Point};

fn main() {
    let points: Vec<Point> = [(0, 0), (4, 1), (1, 2), (3, 3), (2, -1), (5, 4), (6, 0)]
        .iter()
        .map(|&(x, y)| Point::new(x, y))
        .collect();
    let order = simple_polygon_generation(&points).order;
    let ring: Vec<Point> = order.iter().map(|&i| points[i]).collect();
    println!("order: {order:?}");
    println!("ring: {ring:?}");
    println!("simple: {}", validate_simple_polygon(ring).is_ok());
}
