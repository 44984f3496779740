mod common;

use common::*;
use frobenius_core::{
    build_v, classify, odd_dimension_shortcut, project_to_v, verify_isomorphism, Element64, Label, Projection,
    Quaternion64, QuaternionFrame, Tensor64, WitnessKind,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_sound(t: &Tensor64, out: &frobenius_core::Outcome64) {
    let w = out.witness().expect("failure");
    match &w.kind {
        WitnessKind::ZeroDivisor { a, b } => {
            assert!((a.norm() - 1.0).abs() < 1e-9 && (b.norm() - 1.0).abs() < 1e-9);
            assert!(t.multiply(a, b).unwrap().norm() <= 1e-8, "{w}");
        }
        WitnessKind::NonAssociative { triple: (i, j, k) } => assert!(t.associator_residual(*i, *j, *k) >= 1e-6),
        other => panic!("unsound witness {other:?}"),
    }
}

#[test]
fn quaternion_tensor_matches_reference_products() {
    let h = division(Label::H);
    for a in 0..4 {
        for b in 0..4 {
            let q = Quaternion64::basis(a) * Quaternion64::basis(b);
            let p = h.multiply(&h.basis(a), &h.basis(b)).unwrap();
            assert_eq!(p.coords().as_slice(), &q.to_array());
        }
    }
    let (i, j, k) = (Quaternion64::i(), Quaternion64::j(), Quaternion64::k());
    assert_eq!(i * j + j * i, Quaternion64::zero());
    assert_eq!(j * k + k * j, Quaternion64::zero());
    assert_eq!(k * i + i * k, Quaternion64::zero());
}

#[test]
fn label_is_invariant_under_basis_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut fixtures: Vec<Tensor64> = [Label::R, Label::C, Label::H].into_iter().map(division).collect();
    fixtures.extend(non_examples().into_iter().map(|(_, t)| t));
    for t in &fixtures {
        let before = classify(t, &tol()).label();
        for _ in 0..3 {
            let p = random_basis(t.dim(), &mut rng);
            let moved = t.change_basis(&p, &tol()).unwrap();
            let out = classify(&moved, &tol());
            assert_eq!(out.label(), before);
            if before.is_none() {
                assert_sound(&moved, &out);
            }
        }
    }
}

#[test]
fn twisted_quaternions_have_orthonormal_frames() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let t = division(Label::H)
            .change_basis(&random_basis(4, &mut rng), &tol())
            .unwrap();
        let out = classify(&t, &tol());
        assert!(verify_isomorphism(&t, &out, &tol()).unwrap() <= 1e-6);
        let v = build_v(&t, &tol()).unwrap();
        assert_eq!(v.dim(), 3);
        let f = QuaternionFrame::of(&v, &tol()).unwrap();
        assert!(f.relation_residual <= 1e-8);
        assert!(f.gram_residual(&t, &tol()).unwrap() <= 1e-8);
    }
}

#[test]
fn shortcut_agrees_on_odd_fixtures() {
    for t in [division(Label::R), componentwise(3), componentwise(5), r_plus_c()] {
        let a = classify(&t, &tol());
        let b = odd_dimension_shortcut(&t, &tol()).unwrap();
        assert_eq!(a.is_success(), b.is_success());
        if !b.is_success() {
            assert_sound(&t, &b);
        }
    }
}

fn quaternion_coords() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0..3.0f64, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn non_scalar_quaternions_project_into_v(c in quaternion_coords()) {
        prop_assume!(c[1..].iter().map(|x| x * x).sum::<f64>() > 1e-6);
        let h = division(Label::H);
        let x = h.element(c).unwrap();
        let m = h.minimal_polynomial(&x, &tol()).unwrap();
        prop_assert_eq!(m.degree(), 2);
        match project_to_v(&h, &x, &tol()).unwrap() {
            Projection::InV { v, alpha } => {
                prop_assert!((alpha - m.coeffs()[1]).abs() <= 1e-12);
                let sq = h.multiply(&v, &v).unwrap();
                prop_assert!(sq.coords().as_slice()[1..].iter().map(|x| x * x).sum::<f64>().sqrt() <= 1e-8);
                prop_assert!(sq[0] < 0.0);
            }
            Projection::Witness(w) => prop_assert!(false, "{}", w),
        }
    }

    #[test]
    fn square_scalar_means_scalar_or_in_v(s in -3.0..3.0f64, v in prop::collection::vec(-3.0..3.0f64, 3), pure in any::<bool>()) {
        let h = division(Label::H);
        let c = if pure { vec![0.0, v[0], v[1], v[2]] } else { vec![s, 0.0, 0.0, 0.0] };
        let x: Element64 = h.element(c).unwrap();
        let sq = h.multiply(&x, &x).unwrap();
        prop_assert!(h.scalar_part_test(&sq, &tol()).unwrap().is_some());
        let scalar = h.scalar_part_test(&x, &tol()).unwrap().is_some();
        let in_v = sq[0] <= 0.0 && x[0].abs() <= 1e-12;
        prop_assert!(scalar || in_v);
    }

    #[test]
    fn norm_is_multiplicative(a in quaternion_coords(), b in quaternion_coords()) {
        let (a, b) = (Quaternion64::from_coords(&a), Quaternion64::from_coords(&b));
        let lhs = (a * b).norm_sq();
        let rhs = a.norm_sq() * b.norm_sq();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs));
    }

    #[test]
    fn conjugate_product_is_real(a in quaternion_coords()) {
        let a = Quaternion64::from_coords(&a);
        let p = a * a.conjugate();
        prop_assert!(p.x.abs() <= 1e-12 && p.y.abs() <= 1e-12 && p.z.abs() <= 1e-12);
        prop_assert!((p.w - a.norm_sq()).abs() <= 1e-12 * (1.0 + a.norm_sq()));
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn inverse_is_two_sided(a in quaternion_coords()) {
        let a = Quaternion64::from_coords(&a);
        prop_assume!(a.norm_sq() > 1e-3);
        let inv = a.inverse().unwrap();
        prop_assert!((a * inv).dist(Quaternion64::one()) <= 1e-12);
        prop_assert!((inv * a).dist(Quaternion64::one()) <= 1e-12);
    }

    #[test]
    fn polarisation_on_every_fixture(seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut fixtures: Vec<Tensor64> = [Label::R, Label::C, Label::H].into_iter().map(division).collect();
        fixtures.extend(non_examples().into_iter().map(|(_, t)| t));
        for t in &fixtures {
            let n = t.dim();
            let x = t.element((0..n).map(|_| rng.gen_range(-3.0..3.0)).collect()).unwrap();
            let y = t.element((0..n).map(|_| rng.gen_range(-3.0..3.0)).collect()).unwrap();
            let lhs = t.anticommutator(&x, &y).unwrap();
            let s = &x + &y;
            let sq = |z: &Element64| t.multiply(z, z).unwrap();
            let rhs = &(&sq(&s) - &sq(&x)) - &sq(&y);
            let scale = 1.0 + x.norm() + y.norm();
            prop_assert!((&lhs - &rhs).norm() <= 1e-9 * scale * scale);
        }
    }

    #[test]
    fn twisted_non_examples_give_sound_witnesses(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, t) = non_examples().swap_remove(which);
        let moved = t.change_basis(&random_basis(t.dim(), &mut rng), &tol()).unwrap();
        let out = classify(&moved, &tol());
        prop_assert!(!out.is_success());
        assert_sound(&moved, &out);
    }
}
