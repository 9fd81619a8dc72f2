use crate::geometry::{orient, Orientation, Point, Segment, SimplePolygon};

use super::dcel::{Dcel, FaceId, HalfEdgeId, VertexId};
use super::PartitionError;

/// Convex decomposition of a simple polygon by diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Convex pieces, CCW, each rotated to start at its smallest polygon
    /// vertex index.
    pub pieces: Vec<SimplePolygon>,
    /// Polygon vertex indices of each piece, parallel to `pieces`.
    pub piece_vertices: Vec<Vec<VertexId>>,
    /// Essential diagonals.
    pub diagonals: Vec<Segment>,
    /// Endpoint vertex indices of each diagonal, smaller first.
    pub diagonal_vertices: Vec<(VertexId, VertexId)>,
    /// The two pieces flanking each diagonal, smaller id first.
    pub piece_of_diagonal: Vec<(usize, usize)>,
    /// Number of reflex vertices of the input polygon.
    pub reflex_count: usize,
}

impl Decomposition {
    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }
}

/// Would deleting diagonal `h` leave a convex face? Only the two endpoint
/// angles change.
fn removable(dcel: &Dcel, h: HalfEdgeId) -> bool {
    let e = *dcel.half_edge(h);
    let t = *dcel.half_edge(e.twin);
    let pt = |v: VertexId| -> Point { dcel.point(v) };

    // At the origin u: enters along prev(h), leaves along next(twin).
    let u = e.origin;
    let before_u = dcel.half_edge(e.prev).origin;
    let after_u = dcel.destination(t.next);
    // At v: enters along prev(twin), leaves along next(h).
    let v = t.origin;
    let before_v = dcel.half_edge(t.prev).origin;
    let after_v = dcel.destination(e.next);

    orient(&pt(before_u), &pt(u), &pt(after_u)) == Orientation::LeftTurn
        && orient(&pt(before_v), &pt(v), &pt(after_v)) == Orientation::LeftTurn
}

/// Hertel-Mehlhorn: drop every inessential diagonal, scanning in creation
/// order. At most four times the optimal number of pieces.
pub fn hertel_mehlhorn(triangulation: &Dcel) -> Result<Decomposition, PartitionError> {
    let mut dcel = triangulation.clone();
    for h in triangulation.diagonals() {
        if removable(&dcel, h) {
            dcel.remove_diagonal(h);
        }
    }
    decomposition_from(&dcel)
}

/// Reads the pieces and diagonals of a convex subdivision.
pub(crate) fn decomposition_from(dcel: &Dcel) -> Result<Decomposition, PartitionError> {
    let ring: Vec<Point> = (0..dcel.vertex_count()).map(|v| dcel.point(v)).collect();
    let polygon = SimplePolygon::from_ccw_unchecked(ring);

    let faces: Vec<FaceId> = dcel.bounded_faces();
    let piece_of_face = |f: FaceId| faces.binary_search(&f).expect("live face");

    let mut pieces = Vec::with_capacity(faces.len());
    let mut piece_vertices = Vec::with_capacity(faces.len());
    for &f in &faces {
        let vs = dcel.face_vertices(f);
        let piece = SimplePolygon::from_ccw_unchecked(vs.iter().map(|&v| dcel.point(v)).collect());
        if !piece.is_convex() {
            return Err(PartitionError::NonConvexPiece { piece: piece_vertices.len() });
        }
        pieces.push(piece);
        piece_vertices.push(vs);
    }

    let mut diagonals = Vec::new();
    let mut diagonal_vertices = Vec::new();
    let mut piece_of_diagonal = Vec::new();
    for h in dcel.diagonals() {
        let e = dcel.half_edge(h);
        let (a, b) = (e.origin, dcel.destination(h));
        let (a, b) = (a.min(b), a.max(b));
        diagonals.push(Segment::between(dcel.point(a), dcel.point(b)));
        diagonal_vertices.push((a, b));
        let (p, q) = (piece_of_face(e.face), piece_of_face(dcel.half_edge(e.twin).face));
        piece_of_diagonal.push((p.min(q), p.max(q)));
    }

    let reflex_count = polygon.reflex_vertices().len();
    if diagonals.len() > 2 * reflex_count {
        return Err(PartitionError::TooManyDiagonals {
            diagonals: diagonals.len(),
            reflex: reflex_count,
        });
    }

    Ok(Decomposition {
        pieces,
        piece_vertices,
        diagonals,
        diagonal_vertices,
        piece_of_diagonal,
        reflex_count,
    })
}
