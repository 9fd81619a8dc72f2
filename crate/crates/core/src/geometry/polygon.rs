use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::predicates::{on_segment, orient, segments_conflict, Orientation};
use super::{GeometryError, Point, Segment};

/// Counter-clockwise simple polygon with no three consecutive collinear
/// vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplePolygon {
    vertices: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

impl SimplePolygon {
    /// Validates `ring` and returns it in canonical CCW order. A clockwise
    /// ring is reversed (keeping the first vertex first), not rejected.
    pub fn new(ring: Vec<Point>) -> Result<SimplePolygon, GeometryError> {
        validate_simple_polygon(ring)
    }

    /// Caller guarantees the ring is simple, CCW and non-degenerate.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> SimplePolygon {
        debug_assert!(vertices.len() >= 3);
        SimplePolygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Side `i` runs from vertex `i` to vertex `i + 1`.
    pub fn side(&self, i: usize) -> Segment {
        let k = self.vertices.len();
        Segment::between(self.vertices[i % k], self.vertices[(i + 1) % k])
    }

    pub fn sides(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.vertices.len()).map(move |i| self.side(i))
    }

    /// Exact area (always positive for a valid polygon).
    pub fn area(&self) -> BigRational {
        signed_area(&self.vertices)
    }

    pub fn is_convex(&self) -> bool {
        let k = self.vertices.len();
        (0..k).all(|i| {
            orient(
                &self.vertices[(i + k - 1) % k],
                &self.vertices[i],
                &self.vertices[(i + 1) % k],
            ) == Orientation::LeftTurn
        })
    }

    /// Indices of vertices whose interior angle exceeds 180 degrees.
    pub fn reflex_vertices(&self) -> Vec<usize> {
        let k = self.vertices.len();
        (0..k)
            .filter(|&i| {
                orient(
                    &self.vertices[(i + k - 1) % k],
                    &self.vertices[i],
                    &self.vertices[(i + 1) % k],
                ) == Orientation::RightTurn
            })
            .collect()
    }

    pub fn locate(&self, p: &Point) -> Location {
        point_in_polygon(p, self)
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        let xs = self.vertices.iter().min_by(|a, b| a.cmp_x(b)).unwrap();
        let xl = self.vertices.iter().max_by(|a, b| a.cmp_x(b)).unwrap();
        let ys = self.vertices.iter().min_by(|a, b| a.cmp_y(b)).unwrap();
        let yl = self.vertices.iter().max_by(|a, b| a.cmp_y(b)).unwrap();
        let lo = Point::from_ratios(xs.x(), ys.y()).expect("bounding box corner fits");
        let hi = Point::from_ratios(xl.x(), yl.y()).expect("bounding box corner fits");
        (lo, hi)
    }
}

/// Twice-shoelace sum halved, exact.
pub fn signed_area(ring: &[Point]) -> BigRational {
    let k = ring.len();
    let mut sum = BigRational::zero();
    for i in 0..k {
        let (ax, ay, ad) = ring[i].homogeneous();
        let (bx, by, bd) = ring[(i + 1) % k].homogeneous();
        let cross = BigInt::from(ax as i128 * by as i128 - ay as i128 * bx as i128);
        sum += BigRational::new(cross, BigInt::from(ad as i128 * bd as i128));
    }
    sum / BigRational::from_integer(2.into())
}

/// Validates a ring as a simple polygon, fixing orientation.
pub fn validate_simple_polygon(mut ring: Vec<Point>) -> Result<SimplePolygon, GeometryError> {
    let k = ring.len();
    if k < 3 {
        return Err(GeometryError::TooFewVertices(k));
    }
    let mut seen: HashMap<Point, usize> = HashMap::with_capacity(k);
    for (i, p) in ring.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(GeometryError::DuplicateVertex { first: j, second: i });
        }
        seen.insert(*p, i);
    }
    for i in 0..k {
        if orient(&ring[(i + k - 1) % k], &ring[i], &ring[(i + 1) % k]) == Orientation::Collinear {
            return Err(GeometryError::DegenerateCollinear { vertex: i });
        }
    }
    if let Some((i, j)) = first_side_conflict(&ring) {
        return Err(GeometryError::SelfIntersecting { first: i, second: j });
    }
    if signed_area(&ring).is_negative() {
        ring[1..].reverse();
    }
    Ok(SimplePolygon { vertices: ring })
}

/// First pair of sides `(i, j)`, `i < j`, that intersect improperly.
pub(crate) fn first_side_conflict(ring: &[Point]) -> Option<(usize, usize)> {
    let k = ring.len();
    let side = |i: usize| Segment::between(ring[i], ring[(i + 1) % k]);
    for i in 0..k {
        for j in (i + 1)..k {
            let adjacent = j == i + 1 || (i == 0 && j == k - 1);
            if segments_conflict(&side(i), &side(j), adjacent) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Exact winding-number classification.
pub fn point_in_polygon(p: &Point, polygon: &SimplePolygon) -> Location {
    let mut winding = 0i32;
    for s in polygon.sides() {
        if on_segment(&s, p) {
            return Location::Boundary;
        }
        let a_below = s.a.cmp_y(p) != std::cmp::Ordering::Greater;
        let b_below = s.b.cmp_y(p) != std::cmp::Ordering::Greater;
        if a_below && !b_below {
            if orient(&s.a, &s.b, p) == Orientation::LeftTurn {
                winding += 1;
            }
        } else if !a_below && b_below && orient(&s.a, &s.b, p) == Orientation::RightTurn {
            winding -= 1;
        }
    }
    if winding != 0 {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// Whether `s` touches the boundary of `polygon` anywhere other than at the
/// listed polygon vertices (which must be endpoints of `s`).
pub fn segment_conflicts_polygon(
    s: &Segment,
    polygon: &SimplePolygon,
    incident_vertices: &[usize],
) -> bool {
    let k = polygon.len();
    let incident = |v: usize| incident_vertices.contains(&v) && s.has_endpoint(&polygon.vertex(v));
    (0..k).any(|i| {
        let allow = incident(i) || incident((i + 1) % k);
        segments_conflict(s, &polygon.side(i), allow)
    })
}
