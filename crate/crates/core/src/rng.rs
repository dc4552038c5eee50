//! Seeded randomness. Every random choice in the crate flows from a `u64`
//! seed through [`stream`], so runs are reproducible and independent tasks
//! get disjoint streams.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::FieldElement;
use crate::geometry::PointVec;

pub type SampleRng = ChaCha8Rng;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Derives a sub-seed from a base seed and a path of stream labels.
pub fn derive_seed(seed: u64, path: &[u64]) -> u64 {
    path.iter().fold(splitmix(seed), |acc, &p| splitmix(acc ^ splitmix(p)))
}

pub fn stream(seed: u64, path: &[u64]) -> SampleRng {
    SampleRng::seed_from_u64(derive_seed(seed, path))
}

const MAX_NUM: i64 = 9;
const MAX_DEN: i64 = 6;

/// A rational with small numerator and denominator, possibly zero.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> FieldElement {
    let n = rng.gen_range(-MAX_NUM..=MAX_NUM);
    let d = rng.gen_range(1..=MAX_DEN);
    FieldElement::ratio(n, d)
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> FieldElement {
    let n = rng.gen_range(1..=MAX_NUM) * if rng.gen() { 1 } else { -1 };
    let d = rng.gen_range(1..=MAX_DEN);
    FieldElement::ratio(n, d)
}

/// A rational in the closed unit interval, hitting both endpoints now and then.
pub fn unit_interval<R: Rng + ?Sized>(rng: &mut R) -> FieldElement {
    let d = rng.gen_range(1..=MAX_DEN);
    let n = rng.gen_range(0..=d);
    FieldElement::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn point<R: Rng + ?Sized>(d: usize, rng: &mut R) -> PointVec {
    PointVec::from_coords((0..d).map(|_| small_rational(rng)).collect())
}

/// A point that is nonzero somewhere.
pub fn nonzero_point<R: Rng + ?Sized>(d: usize, rng: &mut R) -> PointVec {
    loop {
        let p = point(d, rng);
        if !p.is_origin() {
            return p;
        }
    }
}
