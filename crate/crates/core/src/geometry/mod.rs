//! Exact planar primitives: points, segments, orientation and intersection
//! predicates, and simple polygons.
//!
//! Every predicate is evaluated on exact rationals. There are no epsilons
//! anywhere in this module.

mod point;
mod polygon;
mod position;
mod predicates;

pub use point::{Point, Segment};
pub use polygon::{
    point_in_polygon, segment_conflicts_polygon, signed_area, validate_simple_polygon, Location,
    SimplePolygon,
};
pub(crate) use polygon::first_side_conflict;
pub use position::{check_general_position, GeneralPositionReport, PositionViolation};
pub use predicates::{on_segment, orient, segments_conflict, Orientation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("segment endpoints coincide at {0}")]
    DegenerateSegment(Point),
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("duplicate vertex: positions {first} and {second}")]
    DuplicateVertex { first: usize, second: usize },
    #[error("sides {first} and {second} intersect")]
    SelfIntersecting { first: usize, second: usize },
    #[error("vertex {vertex} is collinear with its neighbours")]
    DegenerateCollinear { vertex: usize },
    #[error("coordinate does not fit the exact representation")]
    CoordinateOverflow,
}
