use super::{LinalgError, Matrix, Tolerance, Vector};
use crate::scalar::Scalar;

/// Reduced row-echelon form of a matrix, possibly with extra columns carried
/// along (right-hand sides) that never supply pivots.
struct Echelon<S> {
    reduced: Matrix<S>,
    /// `(row, column)` of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
}

/// Gauss-Jordan elimination with partial pivoting over the first
/// `pivot_cols` columns. A candidate pivot at or below `threshold` counts as
/// zero; among candidates the largest magnitude wins, ties go to the lower
/// row index.
fn reduce<S: Scalar>(m: &Matrix<S>, pivot_cols: usize, threshold: S) -> Echelon<S> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..pivot_cols {
        if row == rows {
            break;
        }
        let mut best = row;
        for i in row + 1..rows {
            if a[(i, col)].abs() > a[(best, col)].abs() {
                best = i;
            }
        }
        if a[(best, col)].abs() <= threshold {
            continue;
        }
        if best != row {
            for j in 0..cols {
                let t = a[(row, j)];
                a[(row, j)] = a[(best, j)];
                a[(best, j)] = t;
            }
        }
        let p = a[(row, col)];
        for j in 0..cols {
            a[(row, j)] /= p;
        }
        a[(row, col)] = S::one();
        for i in 0..rows {
            if i == row {
                continue;
            }
            let f = a[(i, col)];
            if f == S::zero() {
                continue;
            }
            for j in 0..cols {
                let delta = f * a[(row, j)];
                a[(i, j)] -= delta;
            }
            a[(i, col)] = S::zero();
        }
        pivots.push((row, col));
        row += 1;
    }
    Echelon { reduced: a, pivots }
}

/// Numerical rank under the shared pivot threshold.
pub fn rank<S: Scalar>(m: &Matrix<S>, tol: &Tolerance<S>) -> usize {
    reduce(m, m.cols(), tol.rank_threshold(m)).pivots.len()
}

/// Orthonormal basis of the numerical null space of `m`.
///
/// Free columns of the reduced echelon form give a basis of the kernel which
/// is then orthonormalised by two passes of modified Gram-Schmidt.
pub fn kernel_basis<S: Scalar>(m: &Matrix<S>, tol: &Tolerance<S>) -> Vec<Vector<S>> {
    let n = m.cols();
    let ech = reduce(m, n, tol.rank_threshold(m));
    let mut is_pivot = vec![None; n];
    for &(r, c) in &ech.pivots {
        is_pivot[c] = Some(r);
    }
    let raw: Vec<Vector<S>> = (0..n)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = Vector::zeros(n);
            v[free] = S::one();
            for &(r, pc) in &ech.pivots {
                v[pc] = -ech.reduced[(r, free)];
            }
            v
        })
        .collect();
    orthonormalize(raw)
}

pub(crate) fn orthonormalize<S: Scalar>(vectors: Vec<Vector<S>>) -> Vec<Vector<S>> {
    let mut out: Vec<Vector<S>> = Vec::with_capacity(vectors.len());
    for mut v in vectors {
        for _ in 0..2 {
            for q in &out {
                v = v.axpy(-v.dot(q), q);
            }
        }
        if let Some(u) = v.normalized() {
            out.push(u);
        }
    }
    out
}

/// Solves `m x = b`.
///
/// Rank-deficient systems get the basic solution (free variables zero).
/// Returns `None` when the residual exceeds `tol.bound(|b|)`, i.e. the system
/// is inconsistent at this tolerance.
pub fn solve_linear<S: Scalar>(m: &Matrix<S>, b: &Vector<S>, tol: &Tolerance<S>) -> Option<Vector<S>> {
    assert_eq!(m.rows(), b.dim(), "right-hand side length mismatch");
    let (rows, cols) = (m.rows(), m.cols());
    let mut aug = Matrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)];
        }
        aug[(i, cols)] = b[i];
    }
    let ech = reduce(&aug, cols, tol.rank_threshold(m));
    let mut x = Vector::zeros(cols);
    for &(r, c) in &ech.pivots {
        x[c] = ech.reduced[(r, cols)];
    }
    let residual = (&m.mul_vec(&x) - b).norm();
    if residual <= tol.bound(b.norm()) {
        Some(x)
    } else {
        None
    }
}

pub fn inverse<S: Scalar>(m: &Matrix<S>, tol: &Tolerance<S>) -> Result<Matrix<S>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)];
        }
        aug[(i, n + i)] = S::one();
    }
    let ech = reduce(&aug, n, tol.rank_threshold(m));
    if ech.pivots.len() < n {
        return Err(LinalgError::Singular);
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = ech.reduced[(i, n + j)];
        }
    }
    Ok(inv)
}
