use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::field::FieldElement;
use crate::matrix::Matrix;
use crate::transform::AffineMap;

/// Named linear maps used to separate the geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WitnessName {
    /// Euclidean rotation-reflection of the `(e_1, e_2)` plane.
    E,
    /// Lorentz boost of the `(e_1, e_2)` plane.
    P,
    /// Time dilation `e_1 ↦ 2 e_1`.
    N,
    /// Galilean shear `e_1 ↦ e_1 + e_2`.
    G,
    /// Exchange of `e_1` and `e_2`.
    #[serde(rename = "swap")]
    Swap,
}

impl WitnessName {
    pub const ALL: [WitnessName; 5] = [
        WitnessName::E,
        WitnessName::P,
        WitnessName::N,
        WitnessName::G,
        WitnessName::Swap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WitnessName::E => "E",
            WitnessName::P => "P",
            WitnessName::N => "N",
            WitnessName::G => "G",
            WitnessName::Swap => "swap",
        }
    }
}

impl fmt::Display for WitnessName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        WitnessName::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown witness `{s}`"))
    }
}

/// The witness as a linear map of `F^d`, all other unit vectors fixed.
///
/// # Panics
/// If `d < 2`.
pub fn witness(name: WitnessName, d: usize) -> AffineMap {
    assert!(d >= 2, "witnesses need d >= 2");
    let r = FieldElement::ratio;
    // Images of e_1 and e_2, i.e. the first two columns.
    let (c0, c1) = match name {
        WitnessName::E => ([r(3, 5), r(4, 5)], [r(4, 5), r(-3, 5)]),
        WitnessName::P => ([r(5, 3), r(4, 3)], [r(4, 3), r(5, 3)]),
        WitnessName::N => ([r(2, 1), r(0, 1)], [r(0, 1), r(1, 1)]),
        WitnessName::G => ([r(1, 1), r(1, 1)], [r(0, 1), r(1, 1)]),
        WitnessName::Swap => ([r(0, 1), r(1, 1)], [r(1, 1), r(0, 1)]),
    };
    let mut m = Matrix::identity(d);
    for i in 0..2 {
        m.set(i, 0, c0[i].clone());
        m.set(i, 1, c1[i].clone());
    }
    AffineMap::from_linear(m).expect("witnesses are invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PointVec;

    #[test]
    fn catalog() {
        let e = witness(WitnessName::E, 2);
        assert_eq!(
            *e.linear(),
            Matrix::from_ratio_rows(&[&[(3, 5), (4, 5)], &[(4, 5), (-3, 5)]]).unwrap()
        );
        let n = witness(WitnessName::N, 3);
        assert_eq!(
            *n.linear(),
            Matrix::diagonal(vec![
                FieldElement::from_int(2),
                FieldElement::one(),
                FieldElement::one()
            ])
        );
        let g = witness(WitnessName::G, 2);
        assert_eq!(g.apply(&PointVec::unit(2, 1)).unwrap(), PointVec::unit(2, 1));
        assert_eq!(g.apply(&PointVec::unit(2, 0)).unwrap(), PointVec::from_ints(&[1, 1]));
        let p = witness(WitnessName::P, 4);
        assert_eq!(p.apply(&PointVec::unit(4, 3)).unwrap(), PointVec::unit(4, 3));
    }

    #[test]
    fn names() {
        for w in WitnessName::ALL {
            assert_eq!(w.name().parse::<WitnessName>(), Ok(w));
            assert_eq!(serde_json::to_string(&w).unwrap(), format!("\"{}\"", w.name()));
        }
        assert!("Q".parse::<WitnessName>().is_err());
    }
}
