use thiserror::Error;

use crate::field::FieldError;
use crate::geometry::RelationId;
use crate::groups::GroupId;
use crate::lattice::GeometryId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("relation {relation} takes {expected} points, got {got}")]
    ArityMismatch {
        relation: RelationId,
        expected: usize,
        got: usize,
    },
    #[error("linear part is singular")]
    SingularMatrix,
    #[error("matrix is not square or rows have unequal length")]
    MalformedMatrix,
    #[error("{relation} is already a concept of {geometry}")]
    InadmissiblePair { geometry: GeometryId, relation: RelationId },
    #[error("map is not a member of {0}")]
    NotAMember(GroupId),
    #[error("{0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
