//! Text formats and SVG output.

mod instance;
mod result;
mod svg;

pub use instance::{format_coordinate, format_point, parse_coordinate, parse_instance, serialize_instance};
pub use result::{format_result, parse_result, ResultFile};
pub use svg::{render_svg, SvgOptions};

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::pipeline::PipelineError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid polygon: {0}")]
    Geometry(#[from] GeometryError),
    #[error("invalid instance: {0}")]
    Instance(#[from] PipelineError),
}
