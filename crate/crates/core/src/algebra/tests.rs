use proptest::prelude::*;

use super::*;
use crate::quaternion::{structure_tensor_of, Label};

fn tol() -> Tolerance<f64> {
    Tolerance::default()
}

fn h() -> StructureTensor<f64> {
    structure_tensor_of(Label::H)
}

fn el(t: &StructureTensor<f64>, c: &[f64]) -> AlgebraElement<f64> {
    t.element(c.to_vec()).unwrap()
}

fn dual() -> StructureTensor<f64> {
    // 1 * x = x, eps * eps = 0
    StructureTensor::from_fn(2, vec![], None, |i, j, k| if i + j == k { 1.0 } else { 0.0 }).unwrap()
}

fn octonion() -> StructureTensor<f64> {
    const TRIPLES: [(usize, usize, usize); 7] = [
        (1, 2, 3),
        (1, 4, 5),
        (1, 7, 6),
        (2, 4, 6),
        (2, 5, 7),
        (3, 4, 7),
        (3, 6, 5),
    ];
    let mut table: [[(usize, f64); 8]; 8] = std::array::from_fn(|a| {
        std::array::from_fn(|b| match (a, b) {
            (0, _) => (b, 1.0),
            (_, 0) => (a, 1.0),
            _ if a == b => (0, -1.0),
            _ => (0, 0.0),
        })
    });
    for &(a, b, c) in &TRIPLES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            table[x][y] = (z, 1.0);
            table[y][x] = (z, -1.0);
        }
    }
    StructureTensor::from_fn(
        8,
        vec![],
        Some(0),
        |i, j, k| if table[i][j].0 == k { table[i][j].1 } else { 0.0 },
    )
    .unwrap()
}

/// `h` with basis `f_a = e_{sigma(a)}`, identity flag dropped.
fn permuted_h(sigma: [usize; 4]) -> StructureTensor<f64> {
    let h = h();
    StructureTensor::from_fn(4, vec![], None, |a, b, c| h.c(sigma[a], sigma[b], sigma[c])).unwrap()
}

#[test]
fn quaternion_products() {
    let h = h();
    assert_eq!(h.multiply(&h.basis(1), &h.basis(2)).unwrap(), h.basis(3));
    assert_eq!(h.multiply(&h.basis(2), &h.basis(1)).unwrap(), -&h.basis(3));
    let a = el(&h, &[1.0, 1.0, 0.0, 0.0]);
    let b = el(&h, &[1.0, 0.0, 1.0, 0.0]);
    assert_eq!(h.multiply(&a, &b).unwrap(), el(&h, &[1.0, 1.0, 1.0, 1.0]));
}

#[test]
fn multiply_rejects_wrong_length() {
    let h = h();
    let short = AlgebraElement::from(Vector::zeros(3));
    assert!(matches!(
        h.multiply(&short, &h.basis(0)),
        Err(AlgebraError::DimensionMismatch { expected: 4, got: 3 })
    ));
}

#[test]
fn multiplication_matrices() {
    let h = h();
    assert_eq!(h.left_mul_matrix(&h.basis(0)).unwrap(), Matrix::identity(4));
    assert_eq!(h.left_mul_matrix(&h.zero()).unwrap(), Matrix::zeros(4, 4));
    assert_eq!(h.right_mul_matrix(&h.basis(0)).unwrap(), Matrix::identity(4));
    assert_eq!(h.right_mul_matrix(&h.zero()).unwrap(), Matrix::zeros(4, 4));

    // columns: 1 -> i, i -> -1, j -> k, k -> -j
    let l = h.left_mul_matrix(&h.basis(1)).unwrap();
    let expected = Matrix::from_rows(&[
        vec![0.0, -1.0, 0.0, 0.0],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, -1.0],
        vec![0.0, 0.0, 1.0, 0.0],
    ])
    .unwrap();
    assert_eq!(l, expected);

    let r = h.right_mul_matrix(&h.basis(1)).unwrap();
    for col in 0..4 {
        let sign = if col >= 2 { -1.0 } else { 1.0 };
        assert_eq!(r.column(col), l.column(col).scale(sign));
    }
}

#[test]
fn unity_search() {
    let h = h();
    assert_eq!(h.find_unity(&tol()).unwrap(), h.basis(0));

    let zero = StructureTensor::<f64>::new(2, vec![0.0; 8], vec![], None).unwrap();
    assert_eq!(zero.find_unity(&tol()), Err(AlgebraError::NoUnity));

    // slot 2 holds the old identity
    let p = permuted_h([1, 2, 0, 3]);
    assert_eq!(p.unity_index(), None);
    let u = p.find_unity(&tol()).unwrap();
    assert!(u.coords().dist(&Vector::unit(4, 2)) < 1e-12);
}

#[test]
fn declared_unity_is_checked() {
    let c = h().constants().to_vec();
    assert!(StructureTensor::new(4, c.clone(), vec![], Some(0)).is_ok());
    assert_eq!(
        StructureTensor::new(4, c, vec![], Some(1)).unwrap_err(),
        AlgebraError::NotUnity(1)
    );
}

#[test]
fn constructor_validation() {
    assert_eq!(
        StructureTensor::<f64>::new(0, vec![], vec![], None).unwrap_err(),
        AlgebraError::Empty
    );
    assert!(matches!(
        StructureTensor::<f64>::new(2, vec![0.0; 7], vec![], None),
        Err(AlgebraError::Shape { expected: 8, got: 7 })
    ));
    let mut c = vec![0.0; 8];
    c[5] = f64::NAN;
    assert_eq!(
        StructureTensor::new(2, c, vec![], None).unwrap_err(),
        AlgebraError::NonFinite(1, 0, 1)
    );
    assert!(matches!(
        StructureTensor::<f64>::new(2, vec![0.0; 8], vec!["a".into()], None),
        Err(AlgebraError::BasisNames { .. })
    ));
    assert!(matches!(
        StructureTensor::<f64>::new(65, vec![], vec![], None),
        Err(AlgebraError::TooLarge { .. })
    ));
}

#[test]
fn axiom_reports() {
    let r = h().check_axioms(&tol());
    assert!(r.has_unity && r.associative);
    assert_eq!(r.worst_assoc_residual, 0.0);
    assert_eq!(r.witness_triple, None);

    let o = octonion();
    let r = o.check_axioms(&tol());
    assert!(r.has_unity);
    assert!(!r.associative);
    let (i, j, k) = r.witness_triple.unwrap();
    assert_eq!((i, j, k), (1, 2, 4));
    assert_eq!(o.associator_residual(i, j, k), r.worst_assoc_residual);
    // (e1 e2) e4 = e3 e4 = e7, e1 (e2 e4) = e1 e6 = -e7
    assert_eq!(r.worst_assoc_residual, 2.0);

    let r = dual().check_axioms(&tol());
    assert!(r.has_unity && r.associative);
}

#[test]
fn anticommutators() {
    let h = h();
    assert_eq!(h.anticommutator(&h.basis(1), &h.basis(2)).unwrap(), h.zero());
    let x = el(&h, &[0.5, 1.0, -2.0, 3.0]);
    assert_eq!(h.anticommutator(&x, &x).unwrap(), h.square(&x).scale(2.0));
    let u = el(&h, &[0.0, 1.0, 2.0, 0.0]);
    let v = el(&h, &[0.0, 3.0, 0.0, -1.0]);
    assert_eq!(h.anticommutator(&u, &v).unwrap(), el(&h, &[-6.0, 0.0, 0.0, 0.0]));
}

#[test]
fn minimal_polynomials() {
    let h = h();
    assert_eq!(
        h.minimal_polynomial(&h.basis(0), &tol()).unwrap().coeffs(),
        &[-1.0, 1.0]
    );
    assert_eq!(
        h.minimal_polynomial(&h.basis(1), &tol()).unwrap().coeffs(),
        &[1.0, 0.0, 1.0]
    );
    let m = h.minimal_polynomial(&el(&h, &[3.0, 4.0, 0.0, 0.0]), &tol()).unwrap();
    let want = [25.0, -6.0, 1.0];
    assert_eq!(m.degree(), 2);
    for (a, b) in m.coeffs().iter().zip(want) {
        assert!((a - b).abs() < 1e-9, "{m}");
    }

    // (X - 1)^2 for 1 + eps
    let d = dual();
    let m = d.minimal_polynomial(&el(&d, &[1.0, 1.0]), &tol()).unwrap();
    for (a, b) in m.coeffs().iter().zip([1.0, -2.0, 1.0]) {
        assert!((a - b).abs() < 1e-9, "{m}");
    }

    let zero = StructureTensor::<f64>::new(2, vec![0.0; 8], vec![], None).unwrap();
    assert_eq!(
        zero.minimal_polynomial(&zero.basis(0), &tol()),
        Err(AlgebraError::NoUnity)
    );
}

#[test]
fn scalar_parts() {
    let h = h();
    assert_eq!(h.scalar_part_test(&h.basis(0).scale(5.0), &tol()).unwrap(), Some(5.0));
    assert_eq!(h.scalar_part_test(&h.basis(1), &tol()).unwrap(), None);
    let i2 = h.square(&h.basis(1));
    assert_eq!(h.scalar_part_test(&i2, &tol()).unwrap(), Some(-1.0));

    // identity not on a basis slot: 1 = f0 + f1 with f0 = (1 + e)/2, f1 = (1 - e)/2
    let split = StructureTensor::from_fn(2, vec![], None, |i, j, k| if i == j && j == k { 1.0 } else { 0.0 }).unwrap();
    let x = el(&split, &[3.0, 3.0]);
    assert!((split.scalar_part_test(&x, &tol()).unwrap().unwrap() - 3.0).abs() < 1e-12);
}

#[test]
fn normalising_the_identity() {
    let p = permuted_h([1, 2, 0, 3]);
    let n = p.normalize_unity(&tol()).unwrap();
    assert_eq!(n.unity_index(), Some(2));
    assert!(n.unity_change().is_none());

    // R x R: identity (1, 1) is not a basis vector
    let split = StructureTensor::from_fn(2, vec!["a".into(), "b".into()], None, |i, j, k| {
        if i == j && j == k {
            1.0
        } else {
            0.0
        }
    })
    .unwrap();
    let n = split.normalize_unity(&tol()).unwrap();
    assert_eq!(n.unity_index(), Some(0));
    assert_eq!(n.basis_names(), &["1".to_string(), "b".to_string()]);
    let q = n.unity_change().unwrap();
    assert_eq!(q.column(0).as_slice(), &[1.0, 1.0]);
    assert!(n.check_axioms(&tol()).associative);
}

#[test]
fn change_of_basis_examples() {
    let h = h();
    let same = h.change_basis(&Matrix::identity(4), &tol()).unwrap();
    assert_eq!(same.constants(), h.constants());
    assert_eq!(same.unity_index(), Some(0));
    assert_eq!(same.basis_names(), h.basis_names());

    // f_a = e_{sigma(a)}
    let sigma = [1, 2, 0, 3];
    let mut p = Matrix::zeros(4, 4);
    for (a, &s) in sigma.iter().enumerate() {
        p[(s, a)] = 1.0;
    }
    let q = h.change_basis(&p, &tol()).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                assert_eq!(q.c(a, b, c), h.c(sigma[a], sigma[b], sigma[c]));
            }
        }
    }
    assert_eq!(q.unity_index(), Some(2));
    assert_eq!(q.basis_names()[2], "1");

    let singular = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
    assert_eq!(dual().change_basis(&singular, &tol()), Err(AlgebraError::SingularBasis));
}

#[test]
fn display_lists_products() {
    let s = structure_tensor_of::<f64>(Label::C).to_string();
    assert!(s.contains('i'), "{s}");
}

fn coords(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0..3.0f64, n)
}

fn well_conditioned(n: usize) -> impl Strategy<Value = Matrix<f64>> {
    prop::collection::vec(-0.4..0.4f64, n * n).prop_map(move |e| {
        let m = Matrix::new(n, n, e).unwrap();
        &Matrix::identity(n) + &m.scale(1.0 / n as f64)
    })
}

proptest! {
    #[test]
    fn anticommutator_polarisation(x in coords(4), y in coords(4)) {
        let h = h();
        let (x, y) = (el(&h, &x), el(&h, &y));
        let lhs = h.anticommutator(&x, &y).unwrap();
        let s = &x + &y;
        let rhs = &(&h.square(&s) - &h.square(&x)) - &h.square(&y);
        let scale = 1.0 + x.norm() + y.norm();
        prop_assert!((&lhs - &rhs).norm() <= 1e-9 * scale * scale);
    }

    #[test]
    fn anticommutator_is_symmetric(x in coords(4), y in coords(4)) {
        let h = h();
        let (x, y) = (el(&h, &x), el(&h, &y));
        let a = h.anticommutator(&x, &y).unwrap();
        let b = h.anticommutator(&y, &x).unwrap();
        prop_assert!(a.coords().dist(b.coords()) <= 1e-12);
    }

    #[test]
    fn left_multiplication_is_linear(a in coords(4), b in coords(4), s in -3.0..3.0f64) {
        let h = h();
        let (a, b) = (el(&h, &a), el(&h, &b));
        let sum = h.left_mul_matrix(&(&a + &b)).unwrap();
        let parts = &h.left_mul_matrix(&a).unwrap() + &h.left_mul_matrix(&b).unwrap();
        prop_assert!(sum.max_abs_diff(&parts).unwrap() <= 1e-12);
        let scaled = h.left_mul_matrix(&a.scale(s)).unwrap();
        prop_assert!(scaled.max_abs_diff(&h.left_mul_matrix(&a).unwrap().scale(s)).unwrap() <= 1e-12);
        let x = el(&h, &[0.3, -1.0, 2.0, 0.5]);
        prop_assert!(h.left_mul_matrix(&a).unwrap().mul_vec(x.coords()).dist(h.multiply(&a, &x).unwrap().coords()) <= 1e-12);
        prop_assert!(h.right_mul_matrix(&a).unwrap().mul_vec(x.coords()).dist(h.multiply(&x, &a).unwrap().coords()) <= 1e-12);
    }

    #[test]
    fn change_of_basis_round_trip(p in well_conditioned(4)) {
        let h = h();
        let q = h.change_basis(&p, &tol()).unwrap();
        let pinv = crate::linalg::inverse(&p, &tol()).unwrap();
        let back = q.change_basis(&pinv, &tol()).unwrap();
        for (a, b) in back.constants().iter().zip(h.constants()) {
            prop_assert!((a - b).abs() <= 1e-8);
        }
    }

    #[test]
    fn change_of_basis_transports_products(p in well_conditioned(4), a in coords(4), b in coords(4)) {
        let h = h();
        let q = h.change_basis(&p, &tol()).unwrap();
        let pinv = crate::linalg::inverse(&p, &tol()).unwrap();
        let (a, b) = (el(&h, &a), el(&h, &b));
        let lhs = StructureTensor::transport(&h.multiply(&a, &b).unwrap(), &pinv);
        let rhs = q.multiply(&StructureTensor::transport(&a, &pinv), &StructureTensor::transport(&b, &pinv)).unwrap();
        prop_assert!(lhs.coords().dist(rhs.coords()) <= 1e-8 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn minimal_polynomial_annihilates(x in coords(4)) {
        let h = h();
        let x = el(&h, &x);
        let m = h.minimal_polynomial(&x, &tol()).unwrap();
        prop_assert!(m.degree() <= 2);
        prop_assert!(h.evaluate_polynomial(&m, &x, &tol()).unwrap().norm() <= 1e-8);
    }
}

#[test]
fn normalising_a_large_identity() {
    // nearly singular twist of C; the identity has coordinates in the hundreds
    let p = Matrix::from_rows(&[
        vec![0.17632335945531508, 0.07697471413215018],
        vec![0.6190896154500121, 0.2762904234594432],
    ])
    .unwrap();
    let c = structure_tensor_of::<f64>(Label::C).change_basis(&p, &tol()).unwrap();
    assert!(c.find_unity(&tol()).unwrap().norm() > 500.0);
    let n = c.normalize_unity(&tol()).unwrap();
    assert_eq!(n.unity_index(), Some(0));
    // x^2 + a x + b with a^2 < 4b, so no real roots
    let m = n.minimal_polynomial(&n.basis(1), &tol()).unwrap();
    let (b, a) = (m.coeffs()[0], m.coeffs()[1]);
    assert_eq!(m.degree(), 2);
    assert!(a * a < 4.0 * b);
}
