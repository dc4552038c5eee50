//! Splitting a similarity into a transformation and scalings. Needs `√a`,
//! which exists over a Euclidean field but often not over `ℚ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldMode};
use crate::matrix::Matrix;
use crate::transform::AffineMap;

use super::{classify, GroupId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimilarityDecomposition {
    /// `A = T ∘ (p ↦ s·p)`, `T` a Euclidean (or Poincaré) transformation.
    Uniform {
        transformation: AffineMap,
        scale: FieldElement,
    },
    /// `A = G ∘ (spatial scaling by s) ∘ (temporal scaling by b)`, `G` a
    /// Galilean transformation.
    Galilean {
        transformation: AffineMap,
        spatial_scale: FieldElement,
        temporal_scale: FieldElement,
    },
}

impl SimilarityDecomposition {
    pub fn transformation(&self) -> &AffineMap {
        match self {
            SimilarityDecomposition::Uniform { transformation, .. }
            | SimilarityDecomposition::Galilean { transformation, .. } => transformation,
        }
    }

    /// Composes the parts back into a single map.
    pub fn recompose(&self) -> AffineMap {
        match self {
            SimilarityDecomposition::Uniform { transformation, scale } => {
                let d = transformation.dim();
                let s = AffineMap::scaling(vec![scale.clone(); d]).expect("nonzero scale");
                transformation.compose(&s).expect("same dimension")
            }
            SimilarityDecomposition::Galilean {
                transformation,
                spatial_scale,
                temporal_scale,
            } => {
                let d = transformation.dim();
                let mut spatial = vec![spatial_scale.clone(); d];
                spatial[0] = FieldElement::one();
                let mut temporal = vec![FieldElement::one(); d];
                temporal[0] = temporal_scale.clone();
                let s = AffineMap::scaling(spatial).expect("nonzero scale");
                let t = AffineMap::scaling(temporal).expect("nonzero scale");
                transformation
                    .compose(&s)
                    .and_then(|m| m.compose(&t))
                    .expect("same dimension")
            }
        }
    }
}

/// Decomposes a member of `g`. Galilean groups split off the spatial and
/// temporal scalings, the others a uniform scaling by `√a`.
pub fn decompose_similarity(a: &AffineMap, g: GroupId, mode: FieldMode) -> Result<SimilarityDecomposition> {
    let verdict = classify(a, g);
    if !verdict.member {
        return Err(Error::NotAMember(g));
    }
    let sq = verdict.square_factor.expect("members carry a square-factor");
    let s = sq.sqrt_exact(mode)?;
    let inv_s = s.checked_recip()?;
    let l = a.linear();
    let d = a.dim();
    if g.is_galilean() {
        let b = verdict.temporal_factor.expect("Galilean members carry b");
        let inv_b = b.checked_recip()?;
        let mut g_lin = Matrix::zeros(d);
        for i in 0..d {
            for j in 0..d {
                let f = if j == 0 { &inv_b } else { &inv_s };
                g_lin.set(i, j, l.get(i, j) * f);
            }
        }
        Ok(SimilarityDecomposition::Galilean {
            transformation: AffineMap::new(g_lin, a.translation_part().clone())?,
            spatial_scale: s,
            temporal_scale: b,
        })
    } else {
        Ok(SimilarityDecomposition::Uniform {
            transformation: AffineMap::new(l.scale(&inv_s), a.translation_part().clone())?,
            scale: s,
        })
    }
}
