//! Exact affine-automorphism deciders for the classical and relativistic
//! spacetime geometries over ordered fields, and the definability lattice
//! they induce.
//!
//! Everything is exact. Points live in `F^d` with `F = ℚ` or a real quadratic
//! extension `ℚ(√k)`. Coordinate 0 is time.

pub mod error;
pub mod field;
pub mod geometry;
pub mod groups;
pub mod lattice;
pub mod matrix;
pub mod rng;
pub mod transform;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldError, FieldMode};
pub use geometry::{PointVec, ProductForm, RelationId};
pub use groups::{classify, GroupId, SimilarityVerdict, WitnessName};
pub use lattice::GeometryId;
pub use matrix::Matrix;
pub use transform::{respects_exact, respects_sampled, AffineMap};
