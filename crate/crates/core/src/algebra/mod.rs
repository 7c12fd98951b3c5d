//! Quivers, graded path algebras with homogeneous relations, and their modules.

pub mod build;
pub mod format;
pub mod graded;
pub mod module;
pub mod quiver;

pub use build::build_algebra;
pub use graded::{BasisElement, BasisLabel, GradedAlgebra, HilbertSeries, Truncation};
pub use module::{simple_module, AlgebraModule, ModuleBasis};
pub use quiver::{Arrow, Path, Quiver, Relation, RelationSet};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid quiver: {0}")]
    BadQuiver(String),
    #[error("invalid relation: {0}")]
    BadRelation(String),
    #[error("inhomogeneous relation: {0}")]
    Inhomogeneous(String),
    #[error("unknown arrow id {0}")]
    UnknownArrow(usize),
    #[error("vertex {0} out of range (algebra has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("degree {degree} lies beyond the truncation degree {bound}")]
    BeyondTruncation { degree: usize, bound: usize },
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
