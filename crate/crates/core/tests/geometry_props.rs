use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use spacetime_concepts::geometry::{
    betweenness, dot, eval_relation, in_sim_origin, in_time_axis, mink, product_from_sqdist, sq_dist,
};
use spacetime_concepts::{FieldElement, PointVec, ProductForm, RelationId};

/// Small rationals, zero a third of the time so that points often lie in
/// the time axis or the simultaneity hyperplane.
fn coord() -> impl Strategy<Value = FieldElement> {
    prop_oneof![
        1 => Just(FieldElement::zero()),
        2 => (-12i64..=12, 1i64..=7).prop_map(|(n, d)| FieldElement::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))),
    ]
}

fn points(count: usize) -> impl Strategy<Value = Vec<PointVec>> {
    (2usize..=4).prop_flat_map(move |d| {
        prop::collection::vec(prop::collection::vec(coord(), d), count)
            .prop_map(|v| v.into_iter().map(|c| PointVec::new(c).unwrap()).collect())
    })
}

fn form() -> impl Strategy<Value = ProductForm> {
    prop_oneof![Just(ProductForm::Euclid), Just(ProductForm::Minkowski)]
}

/// Squared Euclidean and Minkowski lengths written out coordinatewise.
fn literal_sq(form: ProductForm, v: &PointVec) -> FieldElement {
    v.coords().iter().enumerate().fold(FieldElement::zero(), |acc, (i, x)| {
        let t = x * x;
        if form == ProductForm::Minkowski && i > 0 {
            acc - t
        } else {
            acc + t
        }
    })
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(2_000)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn product_is_recovered_from_squared_distances(f in form(), pts in points(2)) {
        let (p, q) = (&pts[0], &pts[1]);
        prop_assert_eq!(product_from_sqdist(f, p, q).unwrap(), f.eval(p, q).unwrap());
        prop_assert_eq!(sq_dist(f, p, q).unwrap(), literal_sq(f, &(p - q)));
    }

    #[test]
    fn lightlike_iff_zero_minkowski_distance(pts in points(2)) {
        let (p, q) = (&pts[0], &pts[1]);
        let lambda = eval_relation(RelationId::Lambda, &pts).unwrap();
        prop_assert_eq!(lambda, sq_dist(ProductForm::Minkowski, p, q).unwrap().is_zero());
    }

    #[test]
    fn products_on_axis_and_hyperplane(f in form(), pts in points(2)) {
        let (p, q) = (&pts[0], &pts[1]);
        let prod = f.eval(p, q).unwrap();
        let o = PointVec::origin(p.dim());
        // (i)
        if in_time_axis(p) && *p != o && prod.is_zero() {
            prop_assert!(in_sim_origin(q));
        }
        // (iii)
        if in_time_axis(p) && in_sim_origin(q) {
            prop_assert!(prod.is_zero());
        }
        // (iv)
        if in_time_axis(p) && in_time_axis(q) {
            prop_assert_eq!(dot(p, q).unwrap(), mink(p, q).unwrap());
        }
        // (v)
        if in_sim_origin(p) && in_sim_origin(q) {
            prop_assert_eq!(dot(p, q).unwrap(), -mink(p, q).unwrap());
        }
        // (vi)
        if dot(p, q).unwrap().is_zero() && mink(p, q).unwrap().is_zero() {
            prop_assert!(in_sim_origin(p) || in_sim_origin(q));
        }
    }

    #[test]
    fn orthogonal_to_the_hyperplane_means_on_the_axis(f in form(), pts in points(1)) {
        // (ii): S is spanned by e_2, …, e_d, so testing those suffices.
        let p = &pts[0];
        let d = p.dim();
        let orthogonal = (1..d).all(|i| f.eval(p, &PointVec::unit(d, i)).unwrap().is_zero());
        prop_assert_eq!(orthogonal, in_time_axis(p));
    }

    #[test]
    fn binary_relations_are_subspace_tests(pts in points(2)) {
        let v = &pts[0] - &pts[1];
        prop_assert_eq!(eval_relation(RelationId::S, &pts).unwrap(), in_sim_origin(&v));
        prop_assert_eq!(eval_relation(RelationId::Rest, &pts).unwrap(), in_time_axis(&v));
    }

    #[test]
    fn compound_relations(pts in points(4)) {
        let s = |a: &PointVec, b: &PointVec| eval_relation(RelationId::S, &[a.clone(), b.clone()]).unwrap();
        let cong_e = eval_relation(RelationId::CongE, &pts).unwrap();
        let cong_s = eval_relation(RelationId::CongS, &pts).unwrap();
        prop_assert_eq!(cong_s, cong_e && s(&pts[0], &pts[1]) && s(&pts[2], &pts[3]));
        let cong_mu = eval_relation(RelationId::CongMu, &pts).unwrap();
        let mu = |a: &PointVec, b: &PointVec| literal_sq(ProductForm::Minkowski, &(a - b));
        prop_assert_eq!(cong_mu, mu(&pts[0], &pts[1]) == mu(&pts[2], &pts[3]));
        let triple = &pts[..3];
        let lambda = eval_relation(RelationId::Lambda, &[pts[0].clone(), pts[2].clone()]).unwrap();
        prop_assert_eq!(eval_relation(RelationId::Delta, triple).unwrap(), s(&pts[0], &pts[1]) && lambda);
    }

    #[test]
    fn betweenness_matches_segment_parametrisation(pts in points(2), n in 0i64..=8, extra in -3i64..=3) {
        let (p, r) = (&pts[0], &pts[1]);
        let lambda = FieldElement::ratio(n, 8);
        let q = p + &(r - p).scale(&lambda);
        prop_assert!(betweenness(p, &q, r).unwrap());
        // Outside the segment unless p = r.
        let outside = FieldElement::ratio(if extra >= 0 { 9 + extra } else { extra }, 8);
        let q = p + &(r - p).scale(&outside);
        prop_assert_eq!(betweenness(p, &q, r).unwrap(), p == r);
    }
}
