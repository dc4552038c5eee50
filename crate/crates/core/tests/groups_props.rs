use spacetime_concepts::geometry::sq_dist;
use spacetime_concepts::groups::{generate, generate_with, mixed_pool, witness, GeneratorParams};
use spacetime_concepts::rng::{self, point};
use spacetime_concepts::transform::random_affine;
use spacetime_concepts::{
    classify, respects_exact, AffineMap, FieldElement, GroupId, ProductForm, RelationId, WitnessName,
};

const SAMPLES: usize = 1000;
const PAIRS: usize = 200;

fn member(a: &AffineMap, g: GroupId) -> bool {
    classify(a, g).member
}

/// `L[S] ⊆ S`, read off the images of the spatial unit vectors.
fn keeps_simultaneity(a: &AffineMap) -> bool {
    (1..a.dim()).all(|i| a.linear_image(i).time().is_zero())
}

/// `L[T] ⊆ T`, read off the image of the time unit vector.
fn keeps_time_axis(a: &AffineMap) -> bool {
    a.linear_image(0).spatial().iter().all(FieldElement::is_zero)
}

/// Members of every group, their products with the witnesses and with each
/// other, and unrestricted maps, so both sides of each identity are hit.
fn candidates(d: usize) -> Vec<AffineMap> {
    let mut r = rng::stream(31, &[d as u64]);
    let params = GeneratorParams::default();
    let mut out = Vec::new();
    for g in GroupId::ALL {
        out.extend((0..SAMPLES / 5).map(|_| generate_with(g, d, &mut r, &params)));
    }
    out.extend(mixed_pool(d, SAMPLES / 2, 32));
    out.extend((0..SAMPLES / 10).map(|_| random_affine(d, &mut r)));
    let triv: Vec<AffineMap> = (0..40)
        .map(|_| generate_with(GroupId::TrivEuclSim, d, &mut r, &params))
        .collect();
    for w in WitnessName::ALL {
        let w = witness(w, d);
        out.extend(triv.iter().map(|t| t.compose(&w).unwrap()));
    }
    out
}

#[test]
fn generated_members_classify_into_their_group() {
    for d in 2..=4 {
        for g in GroupId::ALL {
            for s in 0..SAMPLES as u64 {
                let a = generate(g, d, s, &GeneratorParams::default());
                let v = classify(&a, g);
                assert!(v.member, "{g} d={d} seed={s}: {a}");
                assert_eq!(v.temporal_factor.is_some(), g.is_galilean());
            }
        }
    }
}

#[test]
fn requested_scale_gives_its_square() {
    let c = FieldElement::ratio(-3, 2);
    let b = FieldElement::ratio(5, 7);
    let params = GeneratorParams {
        scale: Some(c.clone()),
        temporal: Some(b.clone()),
        ..GeneratorParams::default()
    };
    for d in 2..=4 {
        for g in GroupId::ALL {
            for s in 0..20 {
                let v = classify(&generate(g, d, s, &params), g);
                let a = v.square_factor.unwrap();
                // A swapped planar Poincaré member has a = −c².
                assert!(
                    a == &c * &c || (g == GroupId::PoiSim && d == 2 && a == -(&c * &c)),
                    "{g} d={d}: a={a}"
                );
                if g.is_galilean() {
                    assert_eq!(v.temporal_factor, Some(b.clone()));
                }
            }
        }
    }
}

#[test]
fn groups_are_closed_and_factors_multiply() {
    let params = GeneratorParams::default();
    for d in 2..=4 {
        let mut r = rng::stream(33, &[d as u64]);
        for g in GroupId::ALL {
            for _ in 0..PAIRS {
                let x = generate_with(g, d, &mut r, &params);
                let y = generate_with(g, d, &mut r, &params);
                let (vx, vy) = (classify(&x, g), classify(&y, g));
                let vxy = classify(&x.compose(&y).unwrap(), g);
                assert!(vxy.member, "{g} d={d}");
                let product = |p: &Option<FieldElement>, q: &Option<FieldElement>| {
                    Some(p.as_ref().unwrap() * q.as_ref().unwrap())
                };
                assert_eq!(vxy.square_factor, product(&vx.square_factor, &vy.square_factor));
                if g.is_galilean() {
                    assert_eq!(vxy.temporal_factor, product(&vx.temporal_factor, &vy.temporal_factor));
                }
                let vinv = classify(&x.inverse(), g);
                assert!(vinv.member, "{g} d={d}");
                assert!((vinv.square_factor.unwrap() * vx.square_factor.unwrap()).is_one());
            }
        }
    }
}

#[test]
fn squared_distances_scale_by_the_square_factor() {
    let params = GeneratorParams::default();
    for d in 2..=4 {
        let mut r = rng::stream(34, &[d as u64]);
        for (g, form) in [
            (GroupId::EuclSim, ProductForm::Euclid),
            (GroupId::PoiSim, ProductForm::Minkowski),
        ] {
            for _ in 0..SAMPLES / 4 {
                let a = generate_with(g, d, &mut r, &params);
                let f = classify(&a, g).square_factor.unwrap();
                let (p, q) = (point(d, &mut r), point(d, &mut r));
                let image = sq_dist(form, &a.apply(&p).unwrap(), &a.apply(&q).unwrap()).unwrap();
                assert_eq!(image, &f * &sq_dist(form, &p, &q).unwrap());
            }
        }
        // Galilean: time differences scale by b, spatial distances of
        // simultaneous points by a.
        for g in [GroupId::GalSim, GroupId::TrivGalSim] {
            for _ in 0..SAMPLES / 4 {
                let a = generate_with(g, d, &mut r, &params);
                let v = classify(&a, g);
                let (p, q) = (point(d, &mut r), point(d, &mut r));
                let (ap, aq) = (a.apply(&p).unwrap(), a.apply(&q).unwrap());
                assert_eq!(
                    ap.time() - aq.time(),
                    v.temporal_factor.as_ref().unwrap() * &(p.time() - q.time())
                );
                let mut coords = q.coords().to_vec();
                coords[0] = p.time().clone();
                let q = spacetime_concepts::PointVec::new(coords).unwrap();
                let aq = a.apply(&q).unwrap();
                let e = sq_dist(ProductForm::Euclid, &ap, &aq).unwrap();
                assert_eq!(
                    e,
                    v.square_factor.as_ref().unwrap() * &sq_dist(ProductForm::Euclid, &p, &q).unwrap()
                );
            }
        }
    }
}

#[test]
fn simultaneity_and_rest_agree_on_euclidean_and_poincare_similarities() {
    for d in 2..=4 {
        let mut hits = 0;
        for a in candidates(d) {
            if !(member(&a, GroupId::EuclSim) || member(&a, GroupId::PoiSim)) {
                continue;
            }
            let s = keeps_simultaneity(&a);
            assert_eq!(s, keeps_time_axis(&a), "d={d}: {a}");
            assert_eq!(s, respects_exact(&a, RelationId::S));
            assert_eq!(s, respects_exact(&a, RelationId::Rest));
            hits += usize::from(s);
        }
        assert!(hits >= 100, "d={d}: only {hits} maps keep S");
    }
}

/// Checks `left ⟺ right` on the candidates in both directions. The left
/// side must hold often enough for the check to mean something.
fn identity(d: usize, name: &str, left: impl Fn(&AffineMap) -> bool, right: impl Fn(&AffineMap) -> bool) {
    let mut hits = 0;
    for a in candidates(d) {
        let (l, r) = (left(&a), right(&a));
        assert!(!l || r, "{name} ⊆ fails at d={d}: {a}");
        assert!(!r || l, "{name} ⊇ fails at d={d}: {a}");
        hits += usize::from(l);
    }
    assert!(hits >= 100, "{name} d={d}: only {hits} members sampled");
}

fn triv(a: &AffineMap) -> bool {
    member(a, GroupId::TrivEuclSim)
}

#[test]
fn euclidean_similarities_keeping_s_or_rest_are_trivial() {
    for d in 2..=4 {
        identity(
            d,
            "EuclSim ∩ S",
            |a| member(a, GroupId::EuclSim) && keeps_simultaneity(a),
            triv,
        );
        identity(
            d,
            "EuclSim ∩ Rest",
            |a| member(a, GroupId::EuclSim) && keeps_time_axis(a),
            triv,
        );
    }
}

#[test]
fn poincare_similarities_keeping_s_or_rest_are_trivial() {
    for d in 2..=4 {
        identity(
            d,
            "PoiSim ∩ S",
            |a| member(a, GroupId::PoiSim) && keeps_simultaneity(a),
            triv,
        );
        identity(
            d,
            "PoiSim ∩ Rest",
            |a| member(a, GroupId::PoiSim) && keeps_time_axis(a),
            triv,
        );
    }
}

#[test]
fn euclidean_and_poincare_meet_in_trivial_similarities_above_two() {
    for d in 3..=4 {
        identity(
            d,
            "EuclSim ∩ PoiSim",
            |a| member(a, GroupId::EuclSim) && member(a, GroupId::PoiSim),
            triv,
        );
    }
}

#[test]
fn swap_separates_euclidean_and_poincare_in_the_plane() {
    let swap = witness(WitnessName::Swap, 2);
    assert_eq!(
        classify(&swap, GroupId::EuclSim).square_factor,
        Some(FieldElement::one())
    );
    assert_eq!(
        classify(&swap, GroupId::PoiSim).square_factor,
        Some(FieldElement::from_int(-1))
    );
    assert!(!triv(&swap));
    assert!(!keeps_simultaneity(&swap) && !keeps_time_axis(&swap));
}

#[test]
fn galilean_similarities_keep_simultaneity() {
    for d in 2..=4 {
        let mut r = rng::stream(35, &[d as u64]);
        for _ in 0..SAMPLES {
            let a = generate_with(GroupId::GalSim, d, &mut r, &GeneratorParams::default());
            assert!(keeps_simultaneity(&a));
            assert!(respects_exact(&a, RelationId::S));
        }
    }
}

#[test]
fn trivial_similarities_nest_and_keep_s_and_rest() {
    for d in 2..=4 {
        let mut r = rng::stream(36, &[d as u64]);
        for _ in 0..SAMPLES {
            let a = generate_with(GroupId::TrivEuclSim, d, &mut r, &GeneratorParams::default());
            assert!(member(&a, GroupId::TrivGalSim));
            let b = generate_with(GroupId::TrivGalSim, d, &mut r, &GeneratorParams::default());
            assert!(keeps_simultaneity(&b) && keeps_time_axis(&b));
            assert!(respects_exact(&b, RelationId::S) && respects_exact(&b, RelationId::Rest));
        }
    }
}

#[test]
fn galilean_meets_poincare_and_euclidean_in_trivial_similarities() {
    for d in 2..=4 {
        identity(
            d,
            "PoiSim ∩ GalSim",
            |a| member(a, GroupId::PoiSim) && member(a, GroupId::GalSim),
            triv,
        );
        identity(
            d,
            "EuclSim ∩ GalSim",
            |a| member(a, GroupId::EuclSim) && member(a, GroupId::GalSim),
            triv,
        );
    }
}
