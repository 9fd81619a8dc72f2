//! Straight-line Hamiltonian cycles on point sets inside simple polygons.

pub mod bench;
pub mod connection;
pub mod embedding;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod partition;
pub mod pipeline;
pub mod verify;
