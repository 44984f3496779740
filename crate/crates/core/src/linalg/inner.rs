use super::{LinalgError, Matrix, Tolerance, Vector};
use crate::scalar::Scalar;

/// `u^T G v`.
pub fn gram_inner<S: Scalar>(gram: &Matrix<S>, u: &Vector<S>, v: &Vector<S>) -> S {
    u.dot(&gram.mul_vec(v))
}

/// Lower-triangular `L` with `G = L L^T`, or `NotPositiveDefinite` when a
/// pivot falls below the tolerance.
pub fn cholesky<S: Scalar>(gram: &Matrix<S>, tol: &Tolerance<S>) -> Result<Matrix<S>, LinalgError> {
    if !gram.is_symmetric(tol) {
        return Err(LinalgError::NotPositiveDefinite);
    }
    let n = gram.rows();
    let floor = tol.rank_threshold(gram);
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut d = gram[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if d <= floor {
            return Err(LinalgError::NotPositiveDefinite);
        }
        let d = d.sqrt();
        l[(j, j)] = d;
        for i in j + 1..n {
            let mut s = gram[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Ok(l)
}

/// A unit vector (in the inner product `gram`) orthogonal to every vector of
/// `subspace`.
///
/// The subspace is orthonormalised by Gram-Schmidt in the `gram` inner
/// product; each coordinate axis is then projected onto the complement and
/// the axis with the largest surviving norm is normalised (lowest index on
/// ties). Both projections are done twice.
pub fn orthonormal_complement_unit<S: Scalar>(
    subspace: &[Vector<S>],
    gram: &Matrix<S>,
    dim: usize,
    tol: &Tolerance<S>,
) -> Result<Vector<S>, LinalgError> {
    if gram.rows() != dim || gram.cols() != dim {
        return Err(LinalgError::DimensionMismatch {
            left: gram.rows(),
            right: dim,
        });
    }
    if let Some(u) = subspace.iter().find(|u| u.dim() != dim) {
        return Err(LinalgError::DimensionMismatch {
            left: u.dim(),
            right: dim,
        });
    }
    cholesky(gram, tol)?;

    let ip = |a: &Vector<S>, b: &Vector<S>| gram_inner(gram, a, b);
    let project_out = |mut v: Vector<S>, basis: &[Vector<S>]| {
        for _ in 0..2 {
            for q in basis {
                v = v.axpy(-ip(&v, q), q);
            }
        }
        v
    };

    let mut basis: Vec<Vector<S>> = Vec::new();
    for u in subspace {
        let scale = ip(u, u).sqrt();
        let v = project_out(u.clone(), &basis);
        let n = ip(&v, &v).max(S::zero()).sqrt();
        if n > tol.bound(scale) {
            basis.push(v.scale(n.recip()));
        }
    }
    if basis.len() >= dim {
        return Err(LinalgError::NoComplement);
    }

    let mut best: Option<(S, Vector<S>)> = None;
    for axis in 0..dim {
        let e = Vector::unit(dim, axis);
        let scale = ip(&e, &e).sqrt();
        let v = project_out(e, &basis);
        let n = ip(&v, &v).max(S::zero()).sqrt() / scale;
        if best.as_ref().is_none_or(|(bn, _)| n > *bn) {
            best = Some((n, v));
        }
    }
    let (rel_norm, v) = best.expect("dim > 0");
    if rel_norm <= tol.eps() {
        return Err(LinalgError::NoComplement);
    }
    let v = project_out(v, &basis);
    let n = ip(&v, &v).sqrt();
    Ok(v.scale(n.recip()))
}
