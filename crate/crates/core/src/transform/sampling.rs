//! Randomized respect oracle: checks `R(args) ⟺ R(A(args))` on a fixed
//! list of unit-vector probes followed by seeded random tuples.

use std::cell::OnceCell;
use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::field::FieldElement;
use crate::geometry::{dot_unchecked, eval_relation, mink_unchecked, PointVec, RelationId};
use crate::rng::{self, SampleRng};

use super::AffineMap;

/// A tuple on which `A` breaks the biconditional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub args: Vec<PointVec>,
    pub holds_before: bool,
    pub holds_after: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampledVerdict {
    pub respects: bool,
    /// Tuples checked, probes included.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

pub fn respects_sampled(a: &AffineMap, rel: RelationId, n: usize, seed: u64) -> SampledVerdict {
    let mut rng = rng::stream(seed, &[0x7265_7370, rel.index()]);
    respects_sampled_with(a, rel, n, &mut rng)
}

pub fn respects_sampled_with(a: &AffineMap, rel: RelationId, n: usize, rng: &mut SampleRng) -> SampledVerdict {
    let d = a.dim();
    let mut checked = 0;
    let inverse = OnceCell::new();
    let probes = probe_tuples(rel, d);
    let random = (0..n).map(|k| match k % 3 {
        0 => related_tuple(rel, d, rng),
        1 => related_tuple(rel, d, rng)
            .iter()
            .map(|p| inverse.get_or_init(|| a.inverse()).apply(p).expect("dimensions agree"))
            .collect(),
        _ => (0..rel.arity()).map(|_| rng::point(d, rng)).collect(),
    });
    // Probe tuples reuse a handful of points, so their images are cached.
    let mut cache: HashMap<PointVec, PointVec> = HashMap::new();
    let probe_count = probes.len();
    for (k, args) in probes.into_iter().chain(random).enumerate() {
        checked += 1;
        let image: Vec<PointVec> = if k < probe_count {
            args.iter()
                .map(|p| cache.entry(p.clone()).or_insert_with(|| apply(a, p)).clone())
                .collect()
        } else {
            args.iter().map(|p| apply(a, p)).collect()
        };
        if let Some(c) = check(rel, args, &image) {
            return SampledVerdict {
                respects: false,
                checked,
                counterexample: Some(c),
            };
        }
    }
    SampledVerdict {
        respects: true,
        checked,
        counterexample: None,
    }
}

fn apply(a: &AffineMap, p: &PointVec) -> PointVec {
    a.apply(p).expect("dimensions agree")
}

fn check(rel: RelationId, args: Vec<PointVec>, image: &[PointVec]) -> Option<Counterexample> {
    let before = eval_relation(rel, &args).expect("well-formed tuple");
    let after = eval_relation(rel, image).expect("well-formed tuple");
    (before != after).then_some(Counterexample {
        args,
        holds_before: before,
        holds_after: after,
    })
}

fn unit(d: usize, i: usize) -> PointVec {
    PointVec::unit(d, i)
}

fn ratio_combo(d: usize, i: usize, j: usize) -> PointVec {
    &unit(d, i).scale(&FieldElement::ratio(3, 5)) + &unit(d, j).scale(&FieldElement::ratio(4, 5))
}

fn lambda_probes(d: usize) -> Vec<(PointVec, PointVec)> {
    let o = PointVec::origin(d);
    let t = unit(d, 0);
    let mut out = Vec::new();
    for i in 1..d {
        out.push((o.clone(), &t + &unit(d, i)));
        out.push((t.clone(), unit(d, i)));
        out.push((t.clone(), -&unit(d, i)));
        for j in 1..d {
            if i != j {
                out.push((ratio_combo(d, i, j), t.clone()));
            }
        }
    }
    for i in 0..d {
        out.push((o.clone(), unit(d, i)));
    }
    out
}

/// Pairs of unit-vector segments `(e_i, e_j)` and `(e_i, −e_j)`, `i ≠ j`, from `from` on.
fn diagonal_pairs(d: usize, from: usize) -> Vec<Vec<PointVec>> {
    let mut out = Vec::new();
    for i in from..d {
        for j in from..d {
            if i != j {
                out.push(vec![unit(d, i), unit(d, j), unit(d, i), -&unit(d, j)]);
            }
        }
    }
    out
}

/// Segments `(o, e_i)` and `(o, e_k)`, `i < k`, from `from` on.
fn radius_pairs(d: usize, from: usize) -> Vec<Vec<PointVec>> {
    let o = PointVec::origin(d);
    let mut out = Vec::new();
    for i in from..d {
        for k in i + 1..d {
            out.push(vec![o.clone(), unit(d, i), o.clone(), unit(d, k)]);
        }
    }
    out
}

/// Deterministic unit-vector tuples that pin down the linear conditions
/// `respects_exact` decides. A map failing those conditions fails on one of
/// these.
pub fn probe_tuples(rel: RelationId, d: usize) -> Vec<Vec<PointVec>> {
    let o = PointVec::origin(d);
    match rel {
        RelationId::Bw => (0..d)
            .flat_map(|i| {
                let u = unit(d, i);
                let half = u.scale(&FieldElement::ratio(1, 2));
                [vec![o.clone(), half.clone(), u.clone()], vec![o.clone(), u, half]]
            })
            .collect(),
        RelationId::S => (1..d).chain([0]).map(|i| vec![o.clone(), unit(d, i)]).collect(),
        RelationId::Rest => (0..d).map(|i| vec![o.clone(), unit(d, i)]).collect(),
        RelationId::Lambda => lambda_probes(d).into_iter().map(|(p, q)| vec![p, q]).collect(),
        RelationId::CongE => {
            let mut out = radius_pairs(d, 0);
            out.extend(diagonal_pairs(d, 0));
            out
        }
        RelationId::CongMu => {
            let mut out = diagonal_pairs(d, 0);
            out.extend(
                lambda_probes(d)
                    .into_iter()
                    .map(|(p, q)| vec![p.clone(), q, p.clone(), p]),
            );
            out.extend(radius_pairs(d, 1));
            out
        }
        RelationId::CongS => {
            let mut out: Vec<Vec<PointVec>> = (0..d)
                .map(|i| vec![o.clone(), unit(d, i), o.clone(), unit(d, i)])
                .collect();
            out.extend(diagonal_pairs(d, 1));
            out.extend(radius_pairs(d, 1));
            out
        }
        RelationId::Delta => {
            let mut out: Vec<Vec<PointVec>> = (0..d).map(|i| vec![o.clone(), unit(d, i), o.clone()]).collect();
            out.extend(lambda_probes(d).into_iter().map(|(p, q)| vec![p.clone(), p, q]));
            out
        }
    }
}

/// Rational point on the unit sphere of `F^m`.
fn unit_vector(m: usize, rng: &mut SampleRng) -> Vec<FieldElement> {
    let sign = |rng: &mut SampleRng| {
        if rng.gen() {
            FieldElement::one()
        } else {
            FieldElement::from_int(-1)
        }
    };
    if m == 1 {
        return vec![sign(rng)];
    }
    // Inverse stereographic projection of a rational point w ∈ F^{m−1}.
    let w: Vec<FieldElement> = (0..m - 1).map(|_| rng::small_rational(rng)).collect();
    let n = w.iter().fold(FieldElement::zero(), |acc, x| acc + x * x);
    let den = &n + &FieldElement::one();
    let two = FieldElement::from_int(2);
    let mut v: Vec<FieldElement> = std::iter::once((&n - &FieldElement::one()) / &den)
        .chain(w.iter().map(|x| &two * x / &den))
        .collect();
    v.shuffle(rng);
    v.into_iter().map(|x| x * sign(rng)).collect()
}

fn with_time(t: FieldElement, spatial: Vec<FieldElement>) -> PointVec {
    PointVec::from_coords(std::iter::once(t).chain(spatial).collect())
}

fn spatial_vector(d: usize, rng: &mut SampleRng) -> PointVec {
    with_time(FieldElement::zero(), (1..d).map(|_| rng::small_rational(rng)).collect())
}

fn lightlike_vector(d: usize, rng: &mut SampleRng) -> PointVec {
    let t = rng::small_rational(rng);
    with_time(t.clone(), unit_vector(d - 1, rng).into_iter().map(|x| x * &t).collect())
}

/// Applies one or two random reflections `x ↦ x − 2 (h⊗x)/(h⊗h) h`, which are
/// isometries of the chosen product.
fn reflect(v: &PointVec, minkowski: bool, rng: &mut SampleRng) -> PointVec {
    let form = |p: &PointVec, q: &PointVec| {
        if minkowski {
            mink_unchecked(p, q)
        } else {
            dot_unchecked(p, q)
        }
    };
    let mut v = v.clone();
    for _ in 0..rng.gen_range(1..=2) {
        let h = loop {
            let h = rng::nonzero_point(v.dim(), rng);
            if !form(&h, &h).is_zero() {
                break h;
            }
        };
        let c = FieldElement::from_int(2) * form(&h, &v) / form(&h, &h);
        v = &v - &h.scale(&c);
    }
    v
}

/// Reflection acting on the spatial coordinates only.
fn reflect_spatial(v: &PointVec, rng: &mut SampleRng) -> PointVec {
    if v.dim() == 2 {
        return if rng.gen() { v.clone() } else { -v };
    }
    let s = PointVec::from_coords(v.spatial().to_vec());
    with_time(v.time().clone(), reflect(&s, false, rng).into_coords())
}

/// A random tuple that satisfies `rel` by construction.
pub fn related_tuple(rel: RelationId, d: usize, rng: &mut SampleRng) -> Vec<PointVec> {
    let p = rng::point(d, rng);
    match rel {
        RelationId::Bw => {
            let r = rng::point(d, rng);
            let q = &p + &(&r - &p).scale(&rng::unit_interval(rng));
            vec![p, q, r]
        }
        RelationId::S => {
            let q = &p + &spatial_vector(d, rng);
            vec![p, q]
        }
        RelationId::Rest => {
            let q = &p + &PointVec::unit(d, 0).scale(&rng::small_rational(rng));
            vec![p, q]
        }
        RelationId::Lambda => {
            let q = &p + &lightlike_vector(d, rng);
            vec![p, q]
        }
        RelationId::CongE | RelationId::CongMu => {
            let minkowski = rel == RelationId::CongMu;
            let v = if minkowski && rng.gen_bool(0.25) {
                lightlike_vector(d, rng)
            } else {
                rng::point(d, rng)
            };
            let r = rng::point(d, rng);
            let s = &r + &reflect(&v, minkowski, rng);
            vec![p.clone(), &p + &v, r, s]
        }
        RelationId::CongS => {
            let v = spatial_vector(d, rng);
            let r = rng::point(d, rng);
            let s = &r + &reflect_spatial(&v, rng);
            vec![p.clone(), &p + &v, r, s]
        }
        RelationId::Delta => {
            let q = &p + &spatial_vector(d, rng);
            let r = &p + &lightlike_vector(d, rng);
            vec![p, q, r]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{witness, WitnessName};

    #[test]
    fn related_tuples_are_related() {
        let mut rng = rng::stream(7, &[]);
        for d in 2..=4 {
            for rel in RelationId::ALL {
                for _ in 0..200 {
                    let t = related_tuple(rel, d, &mut rng);
                    assert!(eval_relation(rel, &t).unwrap(), "{rel} {t:?}");
                }
            }
        }
    }

    #[test]
    fn probes_are_well_formed() {
        for d in 2..=4 {
            for rel in RelationId::ALL {
                for t in probe_tuples(rel, d) {
                    assert!(eval_relation(rel, &t).is_ok());
                }
            }
        }
    }

    #[test]
    fn first_counterexamples() {
        let e = witness(WitnessName::E, 2);
        let v = respects_sampled(&e, RelationId::S, 1000, 1);
        assert!(!v.respects);
        let c = v.counterexample.unwrap();
        assert_eq!(c.args, vec![PointVec::origin(2), PointVec::unit(2, 1)]);
        assert!(c.holds_before && !c.holds_after);

        let n = witness(WitnessName::N, 2);
        let c = respects_sampled(&n, RelationId::CongE, 1000, 1).counterexample.unwrap();
        let o = PointVec::origin(2);
        assert_eq!(c.args, vec![o.clone(), PointVec::unit(2, 0), o, PointVec::unit(2, 1)]);
    }

    #[test]
    fn identity_respects_everything() {
        for rel in RelationId::ALL {
            let v = respects_sampled(&AffineMap::identity(3), rel, 1000, 5);
            assert!(v.respects && v.counterexample.is_none());
            assert!(v.checked >= 1000);
        }
    }
}
