mod common;

use common::tol;
use frobenius_core::linalg::{
    self, factor_linear_quadratic, kernel_basis, orthonormal_complement_unit, real_eigenpairs,
};
use frobenius_core::{Matrix64, Polynomial64, Vector64};
use proptest::prelude::*;

fn square(n: usize) -> impl Strategy<Value = Matrix64> {
    prop::collection::vec(-1.0..1.0f64, n * n).prop_map(move |e| Matrix64::new(n, n, e).unwrap())
}

fn odd_square() -> impl Strategy<Value = Matrix64> {
    prop_oneof![square(3), square(5), square(7)]
}

/// Linear factors `X - r` and quadratics `X^2 + bX + c` with `b^2 < 4c`.
fn factored() -> impl Strategy<Value = (Vec<f64>, Vec<(f64, f64)>)> {
    (0usize..=3)
        .prop_flat_map(|q| {
            let max_lin = 6 - 2 * q;
            (
                prop::collection::vec(-3.0..3.0f64, 0..=max_lin),
                prop::collection::vec((-2.0..2.0f64, 0.2..2.0f64), q),
            )
        })
        .prop_filter("nonconstant", |(l, q)| !l.is_empty() || !q.is_empty())
        .prop_map(|(lin, quad)| {
            let quad = quad.into_iter().map(|(b, gap)| (b, b * b / 4.0 + gap)).collect();
            (lin, quad)
        })
}

fn positive_definite(n: usize) -> impl Strategy<Value = Matrix64> {
    square(n).prop_map(move |a| &a.transpose().matmul(&a) + &Matrix64::identity(n).scale(0.1))
}

fn complement_case() -> impl Strategy<Value = (Matrix64, Vec<Vector64>)> {
    (2usize..=8).prop_flat_map(|n| {
        (
            positive_definite(n),
            prop::collection::vec(prop::collection::vec(-1.0..1.0f64, n), 1..n),
        )
            .prop_map(|(g, vs)| (g, vs.into_iter().map(|v| Vector64::new(v).unwrap()).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn odd_matrices_have_real_eigenpairs(m in odd_square()) {
        let pairs = real_eigenpairs(&m, &tol());
        prop_assert!(!pairs.is_empty());
        for (lambda, w) in &pairs {
            prop_assert!((w.norm() - 1.0).abs() < 1e-9);
            let r = m.mul_vec(w).axpy(-lambda, w).norm();
            prop_assert!(r <= 1e-8, "residual {r} for lambda {lambda}");
        }
    }

    #[test]
    fn factors_multiply_back((lin, quad) in factored()) {
        let mut p = Polynomial64::new(vec![1.0]).unwrap();
        for &r in &lin {
            p = p.mul(&Polynomial64::linear(r));
        }
        for &(b, c) in &quad {
            p = p.mul(&Polynomial64::new(vec![c, b, 1.0]).unwrap());
        }
        let factors = factor_linear_quadratic(&p, &tol()).unwrap();
        prop_assert!(factors.iter().all(|f| f.degree() <= 2 && f.is_monic()));
        let back = factors.iter().fold(Polynomial64::new(vec![1.0]).unwrap(), |acc, f| acc.mul(f));
        prop_assert_eq!(back.degree(), p.degree());
        for (a, b) in back.coeffs().iter().zip(p.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-6, "{} vs {}", back, p);
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(a in square(5), rank in 1usize..5) {
        // rank-deficient product of 5 x r and r x 5 blocks
        let cols: Vec<Vector64> = (0..rank).map(|j| a.column(j)).collect();
        let left = Matrix64::from_columns(&cols).unwrap();
        let right = Matrix64::from_rows(&a.to_rows()[..rank]).unwrap();
        let m = left.matmul(&right);
        let kernel = kernel_basis(&m, &tol());
        prop_assert!(kernel.len() >= 5 - rank);
        prop_assert_eq!(kernel.len() + linalg::rank(&m, &tol()), 5);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).norm() <= 1e-9 * (1.0 + m.max_abs()) * 5.0);
        }
    }

    #[test]
    fn complement_is_orthonormal((g, sub) in complement_case()) {
        let n = g.rows();
        let e = orthonormal_complement_unit(&sub, &g, n, &tol()).unwrap();
        let ip = |a: &Vector64, b: &Vector64| linalg::gram_inner(&g, a, b);
        prop_assert!((ip(&e, &e) - 1.0).abs() <= 1e-9);
        for u in &sub {
            prop_assert!(ip(&e, u).abs() <= 1e-9 * (1.0 + ip(u, u).sqrt()));
        }
    }

    #[test]
    fn inverse_round_trip(m in square(4)) {
        if let Ok(inv) = linalg::inverse(&m, &tol()) {
            let cond = m.frobenius_norm() * inv.frobenius_norm();
            prop_assume!(cond < 1e6);
            prop_assert!(m.matmul(&inv).max_abs_diff(&Matrix64::identity(4)).unwrap() <= 1e-12 * cond);
        }
    }
}
