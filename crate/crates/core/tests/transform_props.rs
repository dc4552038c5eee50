use spacetime_concepts::groups::mixed_pool;
use spacetime_concepts::rng::{self, point};
use spacetime_concepts::transform::random_affine;
use spacetime_concepts::{respects_exact, respects_sampled, AffineMap, RelationId};

const MAPS: usize = 1000;
const TUPLES: usize = 100;
const DEEP_MAPS: usize = 60;
const DEEP_TUPLES: usize = 1000;

/// Half unrestricted maps, half group members and their products.
fn maps(d: usize, n: usize, seed: u64) -> Vec<AffineMap> {
    let mut r = rng::stream(seed, &[d as u64]);
    (0..n / 2)
        .map(|_| random_affine(d, &mut r))
        .chain(mixed_pool(d, n / 2, seed + 1))
        .collect()
}

fn agreement(d: usize, maps: &[AffineMap], tuples: usize) -> usize {
    let mut disagreements = Vec::new();
    let mut respected = 0;
    for (k, a) in maps.iter().enumerate() {
        for rel in RelationId::ALL {
            let exact = respects_exact(a, rel);
            let sampled = respects_sampled(a, rel, tuples, k as u64);
            respected += usize::from(exact);
            if exact != sampled.respects {
                disagreements.push((d, k, rel, sampled.counterexample));
            }
        }
    }
    assert!(disagreements.is_empty(), "d={d}: {disagreements:?}");
    respected
}

#[test]
fn exact_and_sampled_respect_agree() {
    for d in 2..=4 {
        let respected = agreement(d, &maps(d, MAPS, 11), TUPLES);
        // Both outcomes must actually occur beyond Bw.
        assert!(respected > MAPS + 100, "d={d}: only {respected} respecting pairs");
    }
}

#[test]
fn exact_and_sampled_respect_agree_on_long_runs() {
    for d in 2..=4 {
        agreement(d, &maps(d, DEEP_MAPS, 21), DEEP_TUPLES);
    }
}

#[test]
fn affine_bijections_respect_betweenness() {
    for d in 2..=4 {
        let mut r = rng::stream(13, &[d as u64]);
        for k in 0..MAPS / 4 {
            let a = random_affine(d, &mut r);
            assert!(respects_sampled(&a, RelationId::Bw, TUPLES, k as u64).respects);
        }
    }
}

#[test]
fn translations_respect_every_relation() {
    let mut r = rng::stream(14, &[]);
    for d in 2..=4 {
        for _ in 0..20 {
            let t = AffineMap::translation(point(d, &mut r));
            for rel in RelationId::ALL {
                assert!(respects_exact(&t, rel));
                assert!(respects_sampled(&t, rel, 200, 3).respects);
            }
        }
    }
}

#[test]
fn composition_laws() {
    for d in 2..=4 {
        let mut r = rng::stream(15, &[d as u64]);
        for _ in 0..MAPS / 4 {
            let (a, b, c) = (
                random_affine(d, &mut r),
                random_affine(d, &mut r),
                random_affine(d, &mut r),
            );
            let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
            let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            assert_eq!(a.inverse().inverse(), a);
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
            assert_eq!(AffineMap::identity(d).compose(&a).unwrap(), a);
            let p = point(d, &mut r);
            assert_eq!(
                a.compose(&b).unwrap().apply(&p).unwrap(),
                a.apply(&b.apply(&p).unwrap()).unwrap()
            );
        }
    }
}

#[test]
fn decomposition_reconstructs() {
    for d in 2..=4 {
        let mut r = rng::stream(16, &[d as u64]);
        for _ in 0..MAPS / 4 {
            let a = random_affine(d, &mut r);
            let (l, tau) = a.decompose();
            assert!(l.translation_part().is_origin());
            assert!(tau.linear().is_identity());
            assert_eq!(
                tau.translation_part(),
                &a.apply(&spacetime_concepts::PointVec::origin(d)).unwrap()
            );
            assert_eq!(tau.compose(&l).unwrap(), a);
        }
    }
}
