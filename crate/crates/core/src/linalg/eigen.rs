use super::elim::{kernel_basis, orthonormalize};
use super::{real_roots, Matrix, RealPolynomial, Tolerance, Vector};
use crate::scalar::Scalar;

/// Householder reduction to upper Hessenberg form (similar to `m`).
///
/// Columns whose sub-subdiagonal part is already zero are left untouched, so
/// matrices that are already Hessenberg come back bit-identical.
pub fn hessenberg<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    assert!(m.is_square(), "hessenberg of a non-square matrix");
    let n = m.rows();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        let tail: Vec<S> = (k + 1..n).map(|i| h[(i, k)]).collect();
        if tail[1..].iter().all(|x| x.is_zero()) {
            continue;
        }
        let alpha = tail.iter().fold(S::zero(), |a, &x| a + x * x).sqrt();
        let alpha = if tail[0] > S::zero() { -alpha } else { alpha };
        let mut v = tail.clone();
        v[0] -= alpha;
        let vnorm2 = v.iter().fold(S::zero(), |a, &x| a + x * x);
        if vnorm2.is_zero() {
            continue;
        }
        let two = S::lit(2.0);
        // H <- (I - 2vv^T/|v|^2) H
        for j in 0..n {
            let dot = (0..v.len()).fold(S::zero(), |a, t| a + v[t] * h[(k + 1 + t, j)]);
            let f = two * dot / vnorm2;
            for t in 0..v.len() {
                h[(k + 1 + t, j)] -= f * v[t];
            }
        }
        // H <- H (I - 2vv^T/|v|^2)
        for i in 0..n {
            let dot = (0..v.len()).fold(S::zero(), |a, t| a + h[(i, k + 1 + t)] * v[t]);
            let f = two * dot / vnorm2;
            for t in 0..v.len() {
                h[(i, k + 1 + t)] -= f * v[t];
            }
        }
        h[(k + 1, k)] = alpha;
        for i in k + 2..n {
            h[(i, k)] = S::zero();
        }
    }
    h
}

/// `det(X I - m)`, computed on the Hessenberg form by the standard
/// leading-minor recurrence.
pub fn characteristic_polynomial<S: Scalar>(m: &Matrix<S>) -> RealPolynomial<S> {
    let h = hessenberg(m);
    let n = h.rows();
    // minors[k] = det(X I_k - H[..k, ..k]) as ascending coefficients.
    let mut minors: Vec<Vec<S>> = vec![vec![S::one()]];
    for k in 1..=n {
        let hk = k - 1;
        let prev = &minors[k - 1];
        let mut p = vec![S::zero(); k + 1];
        for (i, &c) in prev.iter().enumerate() {
            p[i + 1] += c;
            p[i] -= h[(hk, hk)] * c;
        }
        let mut sub = S::one();
        for i in (0..hk).rev() {
            sub *= h[(i + 1, i)];
            let coef = h[(i, hk)] * sub;
            if coef.is_zero() {
                continue;
            }
            for (d, &c) in minors[i].iter().enumerate() {
                p[d] -= coef * c;
            }
        }
        minors.push(p);
    }
    let mut coeffs = minors.pop().unwrap();
    *coeffs.last_mut().unwrap() = S::one();
    RealPolynomial::from_coeffs_unchecked(coeffs)
}

/// Real eigenpairs `(lambda, v)` with unit `v`, eigenvalues ascending.
///
/// Eigenvalues are the real roots of the characteristic polynomial;
/// eigenvectors span `kernel_basis(m - lambda I)`. When the rank threshold
/// misses an eigenvector because the root is slightly off, a few steps of
/// inverse iteration recover it. Pairs that still fail the residual bound are
/// dropped.
pub fn real_eigenpairs<S: Scalar>(m: &Matrix<S>, tol: &Tolerance<S>) -> Vec<(S, Vector<S>)> {
    assert!(m.is_square(), "eigenpairs of a non-square matrix");
    let bound = tol.bound(m.max_abs());
    let residual = |lambda: S, v: &Vector<S>| (&m.mul_vec(v) - &v.scale(lambda)).norm();
    let chi = characteristic_polynomial(m);
    let mut out = Vec::new();
    for lambda in real_roots(&chi, tol) {
        let shifted = m.shift_diagonal(lambda);
        let mut vs = kernel_basis(&shifted, tol);
        if vs.is_empty() {
            vs.extend(inverse_iteration(&shifted));
        }
        for v in vs {
            if residual(lambda, &v) <= bound {
                out.push((lambda, v));
            } else if let Some((l2, v2)) = refine(m, lambda, &v) {
                if residual(l2, &v2) <= bound {
                    out.push((l2, v2));
                }
            }
        }
    }
    out
}

/// Approximate null vector of a nearly singular matrix via inverse iteration
/// with a tiny regularising shift.
fn inverse_iteration<S: Scalar>(a: &Matrix<S>) -> Option<Vector<S>> {
    let n = a.rows();
    let delta = S::epsilon().sqrt() * (S::one() + a.max_abs()) * S::lit(1e-4);
    let shifted = a.shift_diagonal(-delta);
    let loose = Tolerance::uniform(S::epsilon() * S::lit(4.0)).ok()?;
    let inv = super::inverse(&shifted, &loose).ok()?;
    let start = Vector::from_vec_unchecked(
        (0..n)
            .map(|i| S::one() + S::lit(0.1) * S::from_usize_lossy(i))
            .collect(),
    );
    let mut v = start.normalized()?;
    for _ in 0..4 {
        v = inv.mul_vec(&v).normalized()?;
    }
    orthonormalize(vec![v]).pop()
}

/// One Rayleigh-style correction of an approximate pair.
fn refine<S: Scalar>(m: &Matrix<S>, lambda: S, v: &Vector<S>) -> Option<(S, Vector<S>)> {
    let w =
        inverse_iteration(&m.shift_diagonal(lambda))
            .map(|w| if w.dot(v) < S::zero() { w.scale(-S::one()) } else { w })?;
    let mw = m.mul_vec(&w);
    let l2 = mw.dot(&w) / w.dot(&w);
    Some((l2, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<f64>]) -> Matrix<f64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            characteristic_polynomial(&Matrix::diagonal(&[2.0, 3.0])).coeffs(),
            &[6.0, -5.0, 1.0]
        );
        assert_eq!(characteristic_polynomial(&mat(&[vec![7.0]])).coeffs(), &[-7.0, 1.0]);
        // det [[X, 1], [-1, X]] = X^2 + 1
        assert_eq!(
            characteristic_polynomial(&mat(&[vec![0.0, -1.0], vec![1.0, 0.0]])).coeffs(),
            &[1.0, 0.0, 1.0]
        );
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        // Oracle: 3x3 determinant of X I - M expanded by Sarrus, evaluated at sample points.
        let m = mat(&[vec![1.0, 2.0, -1.0], vec![0.5, -3.0, 4.0], vec![2.0, 1.0, 0.25]]);
        let chi = characteristic_polynomial(&m);
        for x in [-2.0, -0.5, 0.0, 1.0, 3.7] {
            let a = |i: usize, j: usize| if i == j { x - m[(i, j)] } else { -m[(i, j)] };
            let det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
                - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
            assert!((chi.eval(x) - det).abs() < 1e-12 * (1.0 + det.abs()), "x = {x}");
        }
    }

    #[test]
    fn eigenpair_examples() {
        let tol = Tolerance::default();
        let pairs = real_eigenpairs(&Matrix::<f64>::identity(3), &tol);
        assert!(pairs
            .iter()
            .any(|(l, v)| (l - 1.0).abs() < 1e-9 && (v.norm() - 1.0).abs() < 1e-12));

        assert!(real_eigenpairs(&mat(&[vec![0.0, -1.0], vec![1.0, 0.0]]), &tol).is_empty());

        let pairs = real_eigenpairs(&Matrix::diagonal(&[0.0, 1.0, 0.0]), &tol);
        let mut values: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        values.dedup();
        assert_eq!(values.len(), 2);
        let one = pairs.iter().find(|p| (p.0 - 1.0).abs() < 1e-9).unwrap();
        assert!((one.1[1].abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hessenberg_preserves_trace() {
        let m = mat(&[
            vec![4.0, 1.0, -2.0, 2.0],
            vec![1.0, 2.0, 0.0, 1.0],
            vec![-2.0, 0.0, 3.0, -2.0],
            vec![2.0, 1.0, -2.0, -1.0],
        ]);
        let h = hessenberg(&m);
        let tr = |a: &Matrix<f64>| (0..4).map(|i| a[(i, i)]).sum::<f64>();
        assert!((tr(&h) - tr(&m)).abs() < 1e-12);
        for i in 2..4 {
            for j in 0..i - 1 {
                assert_eq!(h[(i, j)], 0.0);
            }
        }
    }
}
