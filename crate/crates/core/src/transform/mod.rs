//! Affine bijections of `F^d` and the exact and sampled respect deciders.

mod sampling;

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::geometry::{PointVec, ProductForm, RelationId};
use crate::groups;
use crate::matrix::Matrix;
use crate::rng;

pub use sampling::{
    probe_tuples, related_tuple, respects_sampled, respects_sampled_with, Counterexample, SampledVerdict,
};

/// `p ↦ L·p + t` with `det L ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AffineMapRepr", into = "AffineMapRepr")]
pub struct AffineMap {
    linear: Matrix,
    translation: PointVec,
}

impl AffineMap {
    pub fn new(linear: Matrix, translation: PointVec) -> Result<Self> {
        let d = linear.dim();
        if d < 2 {
            return Err(Error::DimensionTooSmall(d));
        }
        if translation.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: translation.dim(),
            });
        }
        if linear.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(AffineMap { linear, translation })
    }

    pub fn from_linear(linear: Matrix) -> Result<Self> {
        let d = linear.dim();
        Self::new(linear, PointVec::origin(d.max(2)))
    }

    pub fn identity(d: usize) -> Self {
        AffineMap {
            linear: Matrix::identity(d),
            translation: PointVec::origin(d),
        }
    }

    pub fn translation(v: PointVec) -> Self {
        AffineMap {
            linear: Matrix::identity(v.dim()),
            translation: v,
        }
    }

    /// Diagonal map; entries must be nonzero.
    pub fn scaling(diag: Vec<FieldElement>) -> Result<Self> {
        Self::from_linear(Matrix::diagonal(diag))
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn translation_part(&self) -> &PointVec {
        &self.translation
    }

    pub fn determinant(&self) -> FieldElement {
        self.linear.determinant()
    }

    pub fn apply(&self, p: &PointVec) -> Result<PointVec> {
        Ok(&self.linear.mul_vec(p)? + &self.translation)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(AffineMap {
            linear: self.linear.mul(&other.linear),
            translation: self.apply(&other.translation)?,
        })
    }

    pub fn inverse(&self) -> AffineMap {
        let inv = self
            .linear
            .inverse()
            .expect("affine map invariant: linear part is invertible");
        let translation = -&inv.mul_vec(&self.translation).expect("dimensions agree");
        AffineMap {
            linear: inv,
            translation,
        }
    }

    /// Splits `A = τ ∘ L` into its linear part and its translation.
    pub fn decompose(&self) -> (AffineMap, AffineMap) {
        (
            AffineMap {
                linear: self.linear.clone(),
                translation: PointVec::origin(self.dim()),
            },
            AffineMap::translation(self.translation.clone()),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.is_origin()
    }

    /// Parses the JSON form. Malformed JSON yields [`Error::Json`]; a
    /// well-formed but invalid map yields the specific error.
    pub fn from_json(text: &str) -> Result<Self> {
        let repr: AffineMapRepr = serde_json::from_str(text)?;
        repr.try_into()
    }

    /// Image of the unit vector `e_i` under the linear part.
    pub fn linear_image(&self, i: usize) -> PointVec {
        self.linear.column(i)
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p ↦ {}·p + {}", self.linear, self.translation)
    }
}

#[derive(Serialize, Deserialize)]
struct AffineMapRepr {
    d: usize,
    linear: Vec<Vec<FieldElement>>,
    translation: Vec<FieldElement>,
}

impl TryFrom<AffineMapRepr> for AffineMap {
    type Error = Error;

    fn try_from(r: AffineMapRepr) -> Result<Self> {
        if r.linear.len() != r.d {
            return Err(Error::DimensionMismatch {
                expected: r.d,
                got: r.linear.len(),
            });
        }
        AffineMap::new(Matrix::from_rows(r.linear)?, PointVec::new(r.translation)?)
    }
}

impl From<AffineMap> for AffineMapRepr {
    fn from(a: AffineMap) -> Self {
        AffineMapRepr {
            d: a.dim(),
            linear: a.linear.rows(),
            translation: a.translation.into_coords(),
        }
    }
}

/// Linear part maps the simultaneity hyperplane of the origin into itself.
pub(crate) fn preserves_simultaneity(l: &Matrix) -> bool {
    (1..l.dim()).all(|j| l.get(0, j).is_zero())
}

/// Linear part maps the time axis into itself.
pub(crate) fn preserves_time_axis(l: &Matrix) -> bool {
    (1..l.dim()).all(|i| l.get(i, 0).is_zero())
}

/// Exact decision of whether `a` respects `rel`, from finitely many
/// unit-vector conditions on the linear part.
pub fn respects_exact(a: &AffineMap, rel: RelationId) -> bool {
    let l = a.linear();
    match rel {
        RelationId::Bw => true,
        RelationId::S => preserves_simultaneity(l),
        RelationId::Rest => preserves_time_axis(l),
        RelationId::CongE => groups::form_factor(l, ProductForm::Euclid).is_some(),
        RelationId::Lambda | RelationId::CongMu => groups::form_factor(l, ProductForm::Minkowski).is_some(),
        RelationId::CongS => groups::galilean_factors(l).is_some(),
        RelationId::Delta => preserves_simultaneity(l) && groups::form_factor(l, ProductForm::Minkowski).is_some(),
    }
}

/// Uniformly structured random affine bijection with small rational entries.
pub fn random_affine<R: Rng + ?Sized>(d: usize, rng: &mut R) -> AffineMap {
    loop {
        let mut m = Matrix::zeros(d);
        // Sparse entries make structured maps (those respecting S or Rest) reachable.
        let density = rng.gen_range(0.3..1.0);
        for i in 0..d {
            for j in 0..d {
                if i == j || rng.gen_bool(density) {
                    m.set(i, j, rng::small_rational(rng));
                }
            }
        }
        if let Ok(a) = AffineMap::new(m, rng::point(d, rng)) {
            return a;
        }
    }
}
