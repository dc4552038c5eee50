//! The five similarity groups: exact membership, factor extraction, random
//! members, the witness catalog and Euclidean-field decompositions.

mod decompose;
mod generate;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::field::FieldElement;
use crate::geometry::{PointVec, ProductForm};
use crate::matrix::Matrix;
use crate::transform::{preserves_simultaneity, preserves_time_axis, AffineMap};

pub use decompose::{decompose_similarity, SimilarityDecomposition};
pub use generate::{generate, generate_with, mixed_pool, GeneratorParams};
pub use witness::{witness, WitnessName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupId {
    EuclSim,
    PoiSim,
    GalSim,
    TrivGalSim,
    TrivEuclSim,
}

impl GroupId {
    pub const ALL: [GroupId; 5] = [
        GroupId::EuclSim,
        GroupId::PoiSim,
        GroupId::GalSim,
        GroupId::TrivGalSim,
        GroupId::TrivEuclSim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupId::EuclSim => "eucl_sim",
            GroupId::PoiSim => "poi_sim",
            GroupId::GalSim => "gal_sim",
            GroupId::TrivGalSim => "triv_gal_sim",
            GroupId::TrivEuclSim => "triv_eucl_sim",
        }
    }

    pub(crate) fn index(self) -> u64 {
        self as u64
    }

    /// Groups whose members carry a temporal factor `b`.
    pub fn is_galilean(self) -> bool {
        matches!(self, GroupId::GalSim | GroupId::TrivGalSim)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GroupId::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown group `{s}`"))
    }
}

/// Membership verdict with the extracted factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimilarityVerdict {
    pub member: bool,
    /// `a`: the (spatial) square-factor.
    #[serde(rename = "a", skip_serializing_if = "Option::is_none")]
    pub square_factor: Option<FieldElement>,
    /// `b`: the temporal factor of a Galilean similarity.
    #[serde(rename = "b", skip_serializing_if = "Option::is_none")]
    pub temporal_factor: Option<FieldElement>,
}

impl SimilarityVerdict {
    fn rejected() -> Self {
        SimilarityVerdict {
            member: false,
            square_factor: None,
            temporal_factor: None,
        }
    }

    fn accepted(a: FieldElement, b: Option<FieldElement>) -> Self {
        SimilarityVerdict {
            member: true,
            square_factor: Some(a),
            temporal_factor: b,
        }
    }
}

/// The `a` with `L e_i ⊗ L e_j = a (e_i ⊗ e_j)` for all `i, j`, if one exists.
pub fn form_factor(l: &Matrix, form: ProductForm) -> Option<FieldElement> {
    let cols = l.columns();
    let eval = |p: &PointVec, q: &PointVec| form.eval(p, q).expect("columns share a dimension");
    let a = eval(&cols[0], &cols[0]);
    if a.is_zero() {
        return None;
    }
    for i in 0..cols.len() {
        for j in i..cols.len() {
            if eval(&cols[i], &cols[j]) != &a * &form.unit_product(i, j) {
                return None;
            }
        }
    }
    Some(a)
}

/// `(a, b)` when the time row is `(b, 0, …, 0)` and the spatial block `B`
/// satisfies `BᵀB = a·I`.
pub fn galilean_factors(l: &Matrix) -> Option<(FieldElement, FieldElement)> {
    if !preserves_simultaneity(l) {
        return None;
    }
    let d = l.dim();
    let block = Matrix::from_rows((1..d).map(|i| l.row(i)[1..].to_vec()).collect()).expect("square block");
    let a = form_factor(&block, ProductForm::Euclid)?;
    Some((a, l.get(0, 0).clone()))
}

/// Exact membership of `a` in `g`, decided on the linear part only.
pub fn classify(a: &AffineMap, g: GroupId) -> SimilarityVerdict {
    let l = a.linear();
    let verdict = match g {
        GroupId::EuclSim => form_factor(l, ProductForm::Euclid).map(|a| (a, None)),
        GroupId::PoiSim => form_factor(l, ProductForm::Minkowski).map(|a| (a, None)),
        GroupId::TrivEuclSim => form_factor(l, ProductForm::Euclid)
            .filter(|_| preserves_time_axis(l))
            .map(|a| (a, None)),
        GroupId::GalSim => galilean_factors(l).map(|(a, b)| (a, Some(b))),
        GroupId::TrivGalSim => galilean_factors(l)
            .filter(|_| preserves_time_axis(l))
            .map(|(a, b)| (a, Some(b))),
    };
    match verdict {
        Some((a, b)) => SimilarityVerdict::accepted(a, b),
        None => SimilarityVerdict::rejected(),
    }
}

/// Galilean similarity with spatial square-factor 1 that preserves time
/// differences.
pub fn is_galilean_transformation(a: &AffineMap) -> bool {
    match galilean_factors(a.linear()) {
        Some((sq, b)) => sq.is_one() && b.is_one(),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PointVec;

    fn map(rows: &[&[(i64, i64)]]) -> AffineMap {
        AffineMap::from_linear(Matrix::from_ratio_rows(rows).unwrap()).unwrap()
    }

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn classify_examples() {
        let e = witness(WitnessName::E, 2);
        assert_eq!(classify(&e, GroupId::EuclSim).square_factor, Some(fe(1)));
        assert!(!classify(&e, GroupId::PoiSim).member);

        let l = map(&[&[(1, 1), (1, 1)], &[(1, 1), (-1, 1)]]);
        let v = classify(&l, GroupId::EuclSim);
        assert!(v.member);
        assert_eq!(v.square_factor, Some(fe(2)));

        let swap = witness(WitnessName::Swap, 2);
        assert_eq!(classify(&swap, GroupId::PoiSim).square_factor, Some(fe(-1)));

        let n = witness(WitnessName::N, 3);
        let v = classify(&n, GroupId::TrivGalSim);
        assert!(v.member);
        assert_eq!(v.square_factor, Some(fe(1)));
        assert_eq!(v.temporal_factor, Some(fe(2)));
    }

    #[test]
    fn translations_are_in_every_group() {
        let t = AffineMap::translation(PointVec::from_ratios(&[(1, 2), (3, 1), (-1, 7)]));
        for g in GroupId::ALL {
            let v = classify(&t, g);
            assert!(v.member, "{g}");
            assert_eq!(v.square_factor, Some(fe(1)));
        }
    }

    #[test]
    fn galilean_transformations() {
        assert!(is_galilean_transformation(&witness(WitnessName::G, 2)));
        assert!(!is_galilean_transformation(&witness(WitnessName::N, 2)));
        assert!(is_galilean_transformation(&AffineMap::identity(4)));
        assert!(!is_galilean_transformation(&witness(WitnessName::E, 3)));
    }

    #[test]
    fn group_names_round_trip() {
        for g in GroupId::ALL {
            assert_eq!(g.name().parse::<GroupId>(), Ok(g));
            assert_eq!(serde_json::to_string(&g).unwrap(), format!("\"{}\"", g.name()));
        }
    }
}
