//! Per-piece point sets and their simple cycles.
//!
//! Points are routed to the convex piece that contains them, then the points
//! of each piece are joined into a simple polygon by the leftmost/rightmost
//! split: everything below the line through the two extremes is walked left
//! to right, everything above it right to left. Inside a convex piece any
//! such ring stays inside the piece.

use std::cmp::Ordering;

use thiserror::Error;

use crate::geometry::{orient, Location, Orientation, Point, Segment};
use crate::partition::Decomposition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("point {0} lies outside every piece")]
    PointOutsideAllPieces(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddingWarning {
    /// The point lies on a diagonal shared by these pieces; it went to the first.
    PointOnDiagonal { point: usize, pieces: Vec<usize> },
    /// Two points tie on the minimum or maximum x in this piece.
    AmbiguousExtremes { piece: usize },
}

/// Point ids of every piece. The sets partition the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceAssignment {
    pub sets: Vec<Vec<usize>>,
    pub warnings: Vec<EmbeddingWarning>,
}

impl PieceAssignment {
    pub fn counts(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    pub fn piece_of(&self, point: usize) -> Option<usize> {
        self.sets.iter().position(|s| s.contains(&point))
    }
}

pub fn assign_points(
    decomposition: &Decomposition,
    points: &[Point],
) -> Result<PieceAssignment, EmbeddingError> {
    let mut sets = vec![Vec::new(); decomposition.piece_count()];
    let mut warnings = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let mut inside = None;
        let mut touching = Vec::new();
        for (id, piece) in decomposition.pieces.iter().enumerate() {
            match piece.locate(p) {
                Location::Inside => {
                    inside = Some(id);
                    break;
                }
                Location::Boundary => touching.push(id),
                Location::Outside => {}
            }
        }
        let id = match inside {
            Some(id) => id,
            None => {
                let &first = touching.first().ok_or(EmbeddingError::PointOutsideAllPieces(i))?;
                if touching.len() > 1 {
                    warnings.push(EmbeddingWarning::PointOnDiagonal { point: i, pieces: touching });
                }
                first
            }
        };
        sets[id].push(i);
    }
    Ok(PieceAssignment { sets, warnings })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleKind {
    Empty,
    Single,
    Edge,
    Cycle,
}

/// Embedded structure on one piece's points: nothing, a point, a segment or
/// a simple ring. `points` holds global point ids in ring order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PieceCycle {
    pub piece: usize,
    pub points: Vec<usize>,
}

impl PieceCycle {
    pub fn kind(&self) -> CycleKind {
        match self.points.len() {
            0 => CycleKind::Empty,
            1 => CycleKind::Single,
            2 => CycleKind::Edge,
            _ => CycleKind::Cycle,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, point: usize) -> Option<usize> {
        self.points.iter().position(|&p| p == point)
    }

    /// Ring edges as point-id pairs: k for a cycle, one for an edge.
    pub fn ring_edges(&self) -> Vec<(usize, usize)> {
        let k = self.points.len();
        match self.kind() {
            CycleKind::Empty | CycleKind::Single => Vec::new(),
            CycleKind::Edge => vec![(self.points[0], self.points[1])],
            CycleKind::Cycle => (0..k).map(|i| (self.points[i], self.points[(i + 1) % k])).collect(),
        }
    }

    pub fn ring_segments(&self, coords: &[Point]) -> Vec<Segment> {
        self.ring_edges()
            .into_iter()
            .map(|(a, b)| Segment::between(coords[a], coords[b]))
            .collect()
    }

    /// Ring neighbours of `point`; a lone point stands in for itself.
    pub fn neighbours(&self, point: usize) -> Vec<usize> {
        let k = self.points.len();
        let Some(i) = self.position(point) else {
            return Vec::new();
        };
        match self.kind() {
            CycleKind::Empty => Vec::new(),
            CycleKind::Single => vec![point],
            CycleKind::Edge => vec![self.points[1 - i]],
            CycleKind::Cycle => vec![self.points[(i + k - 1) % k], self.points[(i + 1) % k]],
        }
    }

    pub fn are_ring_adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.kind() != CycleKind::Single && self.neighbours(a).contains(&b)
    }
}

/// Ring order over the given points, as indices into the slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygonization {
    pub order: Vec<usize>,
    /// Minimum or maximum x was shared by two points.
    pub ambiguous_extremes: bool,
}

/// Leftmost/rightmost split polygonization. Points collinear with the
/// extremes go below; x ties sort by y (ascending below, descending above).
pub fn simple_polygon_generation(points: &[Point]) -> Polygonization {
    let n = points.len();
    if n <= 2 {
        return Polygonization { order: (0..n).collect(), ambiguous_extremes: false };
    }

    let leftmost = (0..n)
        .min_by(|&a, &b| points[a].cmp_x(&points[b]).then(points[a].cmp_y(&points[b])))
        .unwrap();
    let mut rightmost = (0..n)
        .max_by(|&a, &b| points[a].cmp_x(&points[b]).then(points[b].cmp_y(&points[a])))
        .unwrap();
    if rightmost == leftmost {
        // Every point shares one x.
        rightmost = (0..n).max_by(|&a, &b| points[a].cmp_y(&points[b])).unwrap();
    }

    let shares_x = |e: usize| (0..n).any(|i| i != e && points[i].cmp_x(&points[e]) == Ordering::Equal);
    let ambiguous_extremes = shares_x(leftmost) || shares_x(rightmost);

    let (pl, pr) = (points[leftmost], points[rightmost]);
    let (mut below, mut above): (Vec<usize>, Vec<usize>) = (0..n)
        .filter(|&i| i != leftmost && i != rightmost)
        .partition(|&i| orient(&pl, &pr, &points[i]) != Orientation::LeftTurn);
    below.sort_by(|&a, &b| points[a].cmp_x(&points[b]).then(points[a].cmp_y(&points[b])));
    above.sort_by(|&a, &b| points[b].cmp_x(&points[a]).then(points[b].cmp_y(&points[a])));

    let mut order = Vec::with_capacity(n);
    order.push(leftmost);
    order.extend(below);
    order.push(rightmost);
    order.extend(above);
    Polygonization { order, ambiguous_extremes }
}

/// Embeds the points `ids` (global ids into `coords`) of one piece.
pub fn piece_cycle(piece: usize, ids: &[usize], coords: &[Point]) -> (PieceCycle, Option<EmbeddingWarning>) {
    let local: Vec<Point> = ids.iter().map(|&i| coords[i]).collect();
    let poly = simple_polygon_generation(&local);
    let cycle = PieceCycle { piece, points: poly.order.iter().map(|&i| ids[i]).collect() };
    let warning = poly
        .ambiguous_extremes
        .then_some(EmbeddingWarning::AmbiguousExtremes { piece });
    (cycle, warning)
}
