//! Random members of the similarity groups.
//!
//! Orthogonal and Lorentz parts come from the Cayley transform
//! `Q = (I − K)(I + K)⁻¹`, which is exactly rational. `K` is skew for the
//! Euclidean form and `J·S` with `S` skew for the Minkowski form
//! `J = diag(1, −1, …, −1)`. The Cayley image misses the components with
//! reflections, so a random reflection is composed on top.

use rand::Rng;

use crate::field::FieldElement;
use crate::geometry::PointVec;
use crate::matrix::Matrix;
use crate::rng::{self, SampleRng};
use crate::transform::{random_affine, AffineMap};

use super::{witness, GroupId, WitnessName};

const CAYLEY_RETRIES: usize = 32;

/// Optional fixed factors for [`generate`]. Unset factors are random.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorParams {
    /// Uniform scale `c` of the (spatial) orthogonal block, so `a = c²`
    /// (`a = −c²` for a swapped planar Poincaré similarity).
    pub scale: Option<FieldElement>,
    /// Temporal factor `b` of Galilean similarities.
    pub temporal: Option<FieldElement>,
    /// Use `K = 0`, making the Cayley factor the identity.
    pub zero_skew: bool,
    /// Compose with a random reflection from the group.
    pub reflections: bool,
    /// Append a random translation.
    pub translate: bool,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            scale: None,
            temporal: None,
            zero_skew: false,
            reflections: true,
            translate: true,
        }
    }
}

pub fn generate(g: GroupId, d: usize, seed: u64, params: &GeneratorParams) -> AffineMap {
    let mut rng = rng::stream(seed, &[0x67656e, g.index(), d as u64]);
    generate_with(g, d, &mut rng, params)
}

pub fn generate_with(g: GroupId, d: usize, rng: &mut SampleRng, params: &GeneratorParams) -> AffineMap {
    assert!(d >= 2, "generators need d >= 2");
    let linear = match g {
        GroupId::EuclSim => euclidean(d, rng, params),
        GroupId::PoiSim => poincare(d, rng, params),
        GroupId::GalSim => galilean(d, rng, params, true),
        GroupId::TrivGalSim => galilean(d, rng, params, false),
        GroupId::TrivEuclSim => trivial_euclidean(d, rng, params),
    };
    let translation = if params.translate {
        rng::point(d, rng)
    } else {
        PointVec::origin(d)
    };
    AffineMap::new(linear, translation).expect("generated members are invertible")
}

fn skew(m: usize, rng: &mut SampleRng) -> Matrix {
    let mut s = Matrix::zeros(m);
    let density = rng.gen_range(0.4..=1.0);
    for i in 0..m {
        for j in i + 1..m {
            if rng.gen_bool(density) {
                // Small entries keep the Cayley denominators `det(I + K)` small.
                let x = FieldElement::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
                s.set(j, i, -&x);
                s.set(i, j, x);
            }
        }
    }
    s
}

/// Cayley transform of a random skew (`minkowski = false`) or J-skew matrix.
fn cayley(m: usize, minkowski: bool, rng: &mut SampleRng, zero_skew: bool) -> Matrix {
    let id = Matrix::identity(m);
    if zero_skew {
        return id;
    }
    let j = minkowski_gram(m);
    for _ in 0..CAYLEY_RETRIES {
        let s = skew(m, rng);
        let k = if minkowski { j.mul(&s) } else { s };
        if let Some(inv) = id.add(&k).inverse() {
            return id.sub(&k).mul(&inv);
        }
    }
    id
}

fn minkowski_gram(m: usize) -> Matrix {
    Matrix::diagonal(
        (0..m)
            .map(|i| {
                if i == 0 {
                    FieldElement::one()
                } else {
                    FieldElement::from_int(-1)
                }
            })
            .collect(),
    )
}

fn sign_diag(signs: &[bool]) -> Matrix {
    Matrix::diagonal(
        signs
            .iter()
            .map(|&neg| {
                if neg {
                    FieldElement::from_int(-1)
                } else {
                    FieldElement::one()
                }
            })
            .collect(),
    )
}

fn scale_of(params: &GeneratorParams, rng: &mut SampleRng) -> FieldElement {
    params.scale.clone().unwrap_or_else(|| rng::nonzero_rational(rng))
}

/// Block diagonal of `[[p, −q], [q, p]]` (or `[[p, q], [q, p]]` when
/// `hyperbolic`), covering square-factors that are not rational squares.
fn planar_blocks(m: usize, hyperbolic: bool, rng: &mut SampleRng) -> Matrix {
    let (p, q) = loop {
        let p = rng.gen_range(-4i64..=4);
        let q = rng.gen_range(-4i64..=4);
        if (hyperbolic && p * p != q * q) || (!hyperbolic && (p, q) != (0, 0)) {
            break (FieldElement::from_int(p), FieldElement::from_int(q));
        }
    };
    let mut b = Matrix::zeros(m);
    for k in (0..m).step_by(2) {
        b.set(k, k, p.clone());
        b.set(k + 1, k + 1, p.clone());
        b.set(k + 1, k, q.clone());
        b.set(k, k + 1, if hyperbolic { q.clone() } else { -&q });
    }
    b
}

fn euclidean(d: usize, rng: &mut SampleRng, params: &GeneratorParams) -> Matrix {
    let mut l = cayley(d, false, rng, params.zero_skew);
    if params.reflections && rng.gen() {
        l = l.mul(&sign_diag(&[true]).pad(d));
    }
    if params.scale.is_none() && d.is_multiple_of(2) && rng.gen_bool(0.3) {
        l = l.mul(&planar_blocks(d, false, rng));
    }
    l.scale(&scale_of(params, rng))
}

fn poincare(d: usize, rng: &mut SampleRng, params: &GeneratorParams) -> Matrix {
    let mut l = cayley(d, true, rng, params.zero_skew);
    if params.reflections {
        let (time, space) = (rng.gen(), rng.gen());
        l = l.mul(&sign_diag(&[time, space]).pad(d));
        if d == 2 && rng.gen_bool(0.25) {
            l = l.mul(witness(WitnessName::Swap, 2).linear());
        }
    }
    if params.scale.is_none() && d == 2 && rng.gen_bool(0.3) {
        l = l.mul(&planar_blocks(2, true, rng));
    }
    l.scale(&scale_of(params, rng))
}

/// Orthogonal `(d−1)`-block for the spatial coordinates.
fn spatial_block(d: usize, rng: &mut SampleRng, params: &GeneratorParams) -> Matrix {
    let m = d - 1;
    let mut q = cayley(m, false, rng, params.zero_skew);
    if params.reflections && rng.gen() {
        q = q.mul(&sign_diag(&[true]).pad(m));
    }
    if params.scale.is_none() && m.is_multiple_of(2) && rng.gen_bool(0.3) {
        q = q.mul(&planar_blocks(m, false, rng));
    }
    q.scale(&scale_of(params, rng))
}

fn embed(time: FieldElement, column: Vec<FieldElement>, block: &Matrix) -> Matrix {
    let d = block.dim() + 1;
    let mut l = Matrix::zeros(d);
    l.set(0, 0, time);
    for (i, x) in column.into_iter().enumerate() {
        l.set(i + 1, 0, x);
    }
    for i in 0..d - 1 {
        for j in 0..d - 1 {
            l.set(i + 1, j + 1, block.get(i, j).clone());
        }
    }
    l
}

fn galilean(d: usize, rng: &mut SampleRng, params: &GeneratorParams, boost: bool) -> Matrix {
    let b = params.temporal.clone().unwrap_or_else(|| rng::nonzero_rational(rng));
    let v = (1..d)
        .map(|_| {
            if boost {
                rng::small_rational(rng)
            } else {
                FieldElement::zero()
            }
        })
        .collect();
    let block = spatial_block(d, rng, params);
    embed(b, v, &block)
}

fn trivial_euclidean(d: usize, rng: &mut SampleRng, params: &GeneratorParams) -> Matrix {
    let mut q = cayley(d - 1, false, rng, params.zero_skew);
    if params.reflections && rng.gen() {
        q = q.mul(&sign_diag(&[true]).pad(d - 1));
    }
    let time = if params.reflections && rng.gen() {
        FieldElement::from_int(-1)
    } else {
        FieldElement::one()
    };
    embed(time, vec![FieldElement::zero(); d - 1], &q).scale(&scale_of(params, rng))
}

impl Matrix {
    /// Extends a leading block with the identity up to size `d`.
    fn pad(&self, d: usize) -> Matrix {
        let mut m = Matrix::identity(d);
        for i in 0..self.dim().min(d) {
            for j in 0..self.dim().min(d) {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }
}

/// Mixed population of affine bijections: unrestricted maps, maps with a
/// zero time row or column, members of each group, and products of group
/// members with witnesses and with members of other groups.
pub fn mixed_pool(d: usize, n: usize, seed: u64) -> Vec<AffineMap> {
    let mut rng = rng::stream(seed, &[0x706f6f6c, d as u64]);
    let params = GeneratorParams::default();
    (0..n)
        .map(|k| {
            let g = GroupId::ALL[rng.gen_range(0..GroupId::ALL.len())];
            match k % 6 {
                0 => random_affine(d, &mut rng),
                1 => {
                    let a = random_affine(d, &mut rng);
                    let mut l = a.linear().clone();
                    let keep_row = rng.gen();
                    for i in 1..d {
                        if keep_row {
                            l.set(0, i, FieldElement::zero());
                        } else {
                            l.set(i, 0, FieldElement::zero());
                        }
                    }
                    AffineMap::new(l, a.translation_part().clone()).unwrap_or(a)
                }
                2 | 3 => generate_with(g, d, &mut rng, &params),
                4 => {
                    let w = witness(WitnessName::ALL[rng.gen_range(0..WitnessName::ALL.len())], d);
                    let m = generate_with(g, d, &mut rng, &params);
                    if rng.gen() { m.compose(&w) } else { w.compose(&m) }.expect("same dimension")
                }
                _ => {
                    let h = GroupId::ALL[rng.gen_range(0..GroupId::ALL.len())];
                    let x = generate_with(g, d, &mut rng, &params);
                    let y = generate_with(h, d, &mut rng, &params);
                    x.compose(&y).expect("same dimension")
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::classify;

    #[test]
    fn generated_members_classify() {
        for d in 2..=4 {
            for g in GroupId::ALL {
                for s in 0..50 {
                    let a = generate(g, d, s, &GeneratorParams::default());
                    assert!(classify(&a, g).member, "{g} d={d} seed={s}: {a}");
                }
            }
        }
    }

    #[test]
    fn requested_factors() {
        let params = GeneratorParams {
            scale: Some(FieldElement::one()),
            ..GeneratorParams::default()
        };
        let rot = generate(GroupId::EuclSim, 3, 11, &params);
        assert_eq!(
            classify(&rot, GroupId::EuclSim).square_factor,
            Some(FieldElement::one())
        );
        let params = GeneratorParams {
            scale: Some(FieldElement::one()),
            reflections: false,
            ..GeneratorParams::default()
        };
        let boost = generate(GroupId::PoiSim, 2, 11, &params);
        assert_eq!(
            classify(&boost, GroupId::PoiSim).square_factor,
            Some(FieldElement::one())
        );
        let params = GeneratorParams {
            scale: Some(FieldElement::ratio(2, 3)),
            temporal: Some(FieldElement::from_int(-5)),
            ..GeneratorParams::default()
        };
        let v = classify(&generate(GroupId::GalSim, 4, 3, &params), GroupId::GalSim);
        assert_eq!(v.square_factor, Some(FieldElement::ratio(4, 9)));
        assert_eq!(v.temporal_factor, Some(FieldElement::from_int(-5)));
    }

    #[test]
    fn zero_skew_trivial_member_is_identity() {
        let params = GeneratorParams {
            scale: Some(FieldElement::one()),
            zero_skew: true,
            reflections: false,
            translate: false,
            ..GeneratorParams::default()
        };
        for d in 2..=4 {
            assert!(generate(GroupId::TrivEuclSim, d, 9, &params).is_identity());
        }
    }

    #[test]
    fn pools_are_deterministic() {
        assert_eq!(mixed_pool(3, 40, 8), mixed_pool(3, 40, 8));
        assert_ne!(mixed_pool(3, 40, 8), mixed_pool(3, 40, 9));
    }
}
