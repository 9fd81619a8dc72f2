//! Convex partition of a simple polygon and its dual tree.
//!
//! The polygon is ear-clipped into triangles held in a [`Dcel`], then
//! Hertel-Mehlhorn removes every diagonal that is not needed for convexity.
//! The surviving diagonals join the pieces into a tree, whose Euler tour
//! drives the connection phase of the embedding.

mod dcel;
mod dual;
mod hertel_mehlhorn;
mod triangulate;

pub use dcel::{Dcel, DcelVertex, Face, FaceId, HalfEdge, HalfEdgeId, VertexId, OUTER_FACE};
pub use dual::{dual_tree, euler_tour, DualTree, EulerTour};
pub use hertel_mehlhorn::{hertel_mehlhorn, Decomposition};
pub use triangulate::triangulate;

use thiserror::Error;

use crate::geometry::SimplePolygon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("no ear found with {remaining} vertices left")]
    NoEar { remaining: usize },
    #[error("piece {piece} is not convex")]
    NonConvexPiece { piece: usize },
    #[error("{diagonals} essential diagonals exceed twice the {reflex} reflex vertices")]
    TooManyDiagonals { diagonals: usize, reflex: usize },
    #[error("root piece {0} is not in the dual tree")]
    RootNotFound(usize),
}

/// Triangulate then merge: the composite convex partition step.
pub fn convex_partition(polygon: &SimplePolygon) -> Result<Decomposition, PartitionError> {
    hertel_mehlhorn(&triangulate(polygon)?)
}
