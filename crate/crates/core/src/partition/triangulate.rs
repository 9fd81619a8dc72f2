use crate::geometry::{orient, Location, Orientation, Point, SimplePolygon};

use super::dcel::{Dcel, VertexId};
use super::PartitionError;

/// Closed-triangle membership for a CCW triangle.
fn in_closed_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> Location {
    let o = [orient(a, b, p), orient(b, c, p), orient(c, a, p)];
    if o.contains(&Orientation::RightTurn) {
        Location::Outside
    } else if o.contains(&Orientation::Collinear) {
        Location::Boundary
    } else {
        Location::Inside
    }
}

/// Ear test at position `i` of the remaining chain.
fn is_ear(points: &[Point], remaining: &[VertexId], i: usize) -> bool {
    let k = remaining.len();
    let (ip, inext) = ((i + k - 1) % k, (i + 1) % k);
    let (a, b, c) = (
        &points[remaining[ip]],
        &points[remaining[i]],
        &points[remaining[inext]],
    );
    if orient(a, b, c) != Orientation::LeftTurn {
        return false;
    }
    remaining.iter().enumerate().all(|(j, &v)| {
        j == ip || j == i || j == inext || in_closed_triangle(a, b, c, &points[v]) == Location::Outside
    })
}

/// Ear-clipping triangulation as a DCEL with `m - 2` triangular faces.
///
/// Ears are searched from the start of the remaining chain after every
/// clip, so the diagonal creation order is deterministic.
pub fn triangulate(polygon: &SimplePolygon) -> Result<Dcel, PartitionError> {
    let points = polygon.vertices();
    let mut remaining: Vec<VertexId> = (0..points.len()).collect();
    let mut triangles: Vec<Vec<VertexId>> = Vec::with_capacity(points.len() - 2);
    let mut diagonals: Vec<(VertexId, VertexId)> = Vec::with_capacity(points.len() - 3);

    while remaining.len() > 3 {
        let k = remaining.len();
        let i = (0..k)
            .find(|&i| is_ear(points, &remaining, i))
            .ok_or(PartitionError::NoEar { remaining: k })?;
        let (prev, cur, next) = (remaining[(i + k - 1) % k], remaining[i], remaining[(i + 1) % k]);
        triangles.push(vec![prev, cur, next]);
        // The ear owns next -> prev; the rest of the polygon owns prev -> next.
        diagonals.push((next, prev));
        remaining.remove(i);
    }
    triangles.push(remaining);

    Ok(Dcel::from_faces(polygon, &triangles, &diagonals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::signed_area;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn poly(c: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::new(c.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn face_area_sum(d: &Dcel) -> BigRational {
        d.bounded_faces()
            .into_iter()
            .map(|f| {
                let ring: Vec<Point> = d.face_vertices(f).into_iter().map(|v| d.point(v)).collect();
                signed_area(&ring)
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    #[test]
    fn square_two_triangles() {
        let q = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let d = triangulate(&q).unwrap();
        assert_eq!(d.bounded_faces().len(), 2);
        assert_eq!(d.diagonals().len(), 1);
        d.check().unwrap();
        assert_eq!(face_area_sum(&d), q.area());
    }

    #[test]
    fn triangle_single_face() {
        let q = poly(&[(0, 0), (4, 0), (0, 4)]);
        let d = triangulate(&q).unwrap();
        assert_eq!(d.bounded_faces().len(), 1);
        assert!(d.diagonals().is_empty());
        d.check().unwrap();
    }

    #[test]
    fn l_hexagon_four_triangles() {
        let q = poly(&[(0, 0), (8, 0), (8, 4), (4, 4), (4, 8), (0, 8)]);
        let d = triangulate(&q).unwrap();
        assert_eq!(d.bounded_faces().len(), 4);
        d.check().unwrap();
        assert_eq!(face_area_sum(&d), q.area());
        let diag: Vec<(usize, usize)> = d
            .diagonals()
            .into_iter()
            .map(|h| {
                let (a, b) = (d.half_edge(h).origin, d.destination(h));
                (a.min(b), a.max(b))
            })
            .collect();
        // (0,0)-(4,4)-(0,8) fan after clipping (8,0) and (8,4).
        assert_eq!(diag, vec![(0, 2), (0, 3), (3, 5)]);
    }

    #[test]
    fn triangles_are_ccw() {
        let q = poly(&[(0, 0), (10, 0), (10, 10), (7, 10), (7, 3), (3, 3), (3, 10), (0, 10)]);
        let d = triangulate(&q).unwrap();
        for f in d.bounded_faces() {
            let v = d.face_vertices(f);
            assert_eq!(v.len(), 3);
            assert_eq!(orient(&d.point(v[0]), &d.point(v[1]), &d.point(v[2])), Orientation::LeftTurn);
        }
        assert_eq!(face_area_sum(&d), q.area());
    }
}
