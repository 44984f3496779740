//! Small dense real linear algebra.
//!
//! Everything here targets desk-scale dimensions (a few dozen at most). The
//! routines are written out directly rather than delegated to a BLAS so that
//! every rank decision goes through one pivot threshold, see
//! [`Tolerance::rank_threshold`].

mod eigen;
mod elim;
mod inner;
mod poly;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

pub use eigen::{characteristic_polynomial, hessenberg, real_eigenpairs};
pub use elim::{inverse, kernel_basis, rank, solve_linear};
pub use inner::{cholesky, gram_inner, orthonormal_complement_unit};
pub use poly::{factor_linear_quadratic, real_roots, RealPolynomial};

/// Soft cap on matrix and tensor dimensions.
pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("dimension must be positive")]
    Empty,
    #[error("non-finite entry at index {0}")]
    NonFinite(usize),
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("dimension {dim} exceeds the cap of {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("tolerance components must lie in (0, 1)")]
    BadTolerance,
    #[error("polynomial must be nonzero with degree at least 1")]
    DegeneratePolynomial,
    #[error("root isolation failed to split the polynomial within {0} iterations")]
    ConvergenceFailure(usize),
    #[error("Gram matrix is not symmetric positive definite")]
    NotPositiveDefinite,
    #[error("subspace already spans the whole space")]
    NoComplement,
    #[error("matrix is singular")]
    Singular,
}

/// Absolute and relative zero thresholds.
///
/// A residual `r` measured against an operand of magnitude `m` counts as
/// zero when `r <= eps + rel * m`. With the default `eps = rel = 1e-9` this is
/// `eps * (1 + m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<S> {
    eps: S,
    rel: S,
}

impl<S: Scalar> Tolerance<S> {
    pub fn new(eps: S, rel: S) -> Result<Self, LinalgError> {
        let ok = |t: S| t > S::zero() && t < S::one();
        if ok(eps) && ok(rel) {
            Ok(Self { eps, rel })
        } else {
            Err(LinalgError::BadTolerance)
        }
    }

    /// Uses the same value for both components.
    pub fn uniform(t: S) -> Result<Self, LinalgError> {
        Self::new(t, t)
    }

    pub fn eps(&self) -> S {
        self.eps
    }

    pub fn rel(&self) -> S {
        self.rel
    }

    /// Zero threshold for a quantity whose natural scale is `magnitude`.
    #[inline]
    pub fn bound(&self, magnitude: S) -> S {
        self.eps + self.rel * magnitude.abs()
    }

    #[inline]
    pub fn is_zero(&self, residual: S, magnitude: S) -> bool {
        residual.abs() <= self.bound(magnitude)
    }

    /// Pivot threshold for elimination on `m`.
    pub fn rank_threshold(&self, m: &Matrix<S>) -> S {
        self.bound(m.max_abs())
    }
}

impl<S: Scalar> Default for Tolerance<S> {
    fn default() -> Self {
        Self {
            eps: S::lit(1e-9),
            rel: S::lit(1e-9),
        }
    }
}

/// Dense column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(entries: Vec<S>) -> Result<Self, LinalgError> {
        if entries.is_empty() {
            return Err(LinalgError::Empty);
        }
        if let Some(i) = entries.iter().position(|x| !x.is_finite()) {
            return Err(LinalgError::NonFinite(i));
        }
        Ok(Self { entries })
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional vector");
        Self {
            entries: vec![S::zero(); dim],
        }
    }

    /// The `i`-th standard basis vector of length `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = S::one();
        v
    }

    /// Internal constructor for entries produced by finite arithmetic.
    pub(crate) fn from_vec_unchecked(entries: Vec<S>) -> Self {
        debug_assert!(!entries.is_empty());
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn as_slice(&self) -> &[S] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<S> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.entries.iter()
    }

    pub fn dot(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(S::zero(), |acc, (&a, &b)| acc + a * b)
    }

    pub fn norm(&self) -> S {
        self.dot(self).sqrt()
    }

    pub fn max_abs(&self) -> S {
        self.entries.iter().fold(S::zero(), |m, x| m.max(x.abs()))
    }

    pub fn scale(&self, s: S) -> Self {
        Self::from_vec_unchecked(self.entries.iter().map(|&x| x * s).collect())
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: S, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_vec_unchecked(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + s * b)
                .collect(),
        )
    }

    /// Returns `self / |self|`, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n > S::zero() {
            Some(self.scale(n.recip()))
        } else {
            None
        }
    }

    pub fn dist(&self, other: &Self) -> S {
        (self - other).norm()
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.entries[i]
    }
}

impl<S> IndexMut<usize> for Vector<S> {
    fn index_mut(&mut self, i: usize) -> &mut S {
        &mut self.entries[i]
    }
}

impl<S: Scalar> Add for &Vector<S> {
    type Output = Vector<S>;
    fn add(self, rhs: Self) -> Vector<S> {
        self.axpy(S::one(), rhs)
    }
}

impl<S: Scalar> Sub for &Vector<S> {
    type Output = Vector<S>;
    fn sub(self, rhs: Self) -> Vector<S> {
        self.axpy(-S::one(), rhs)
    }
}

impl<S: Scalar> Neg for &Vector<S> {
    type Output = Vector<S>;
    fn neg(self) -> Vector<S> {
        self.scale(-S::one())
    }
}

impl<S: Scalar> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::Empty);
        }
        let cap = DEFAULT_MAX_DIM * DEFAULT_MAX_DIM;
        if rows > cap || cols > cap {
            return Err(LinalgError::TooLarge {
                dim: rows.max(cols),
                cap,
            });
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if let Some(i) = entries.iter().position(|x| !x.is_finite()) {
            return Err(LinalgError::NonFinite(i));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::Shape {
                    expected: c,
                    got: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(r, c, entries)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<S>]) -> Result<Self, LinalgError> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vector::dim);
        if let Some(bad) = cols.iter().find(|v| v.dim() != r) {
            return Err(LinalgError::DimensionMismatch {
                left: r,
                right: bad.dim(),
            });
        }
        if r == 0 || c == 0 {
            return Err(LinalgError::Empty);
        }
        let mut m = Self::zeros(r, c);
        for (j, v) in cols.iter().enumerate() {
            for i in 0..r {
                m[(i, j)] = v[i];
            }
        }
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        Self {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn diagonal(d: &[S]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[S] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector::from_vec_unchecked((0..self.rows).map(|i| self[(i, j)]).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_abs(&self) -> S {
        self.entries.iter().fold(S::zero(), |m, x| m.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> S {
        self.entries.iter().fold(S::zero(), |a, &x| a + x * x).sqrt()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector<S>) -> Vector<S> {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        Vector::from_vec_unchecked(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.iter())
                        .fold(S::zero(), |acc, (&a, &b)| acc + a * b)
                })
                .collect(),
        )
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == S::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn scale(&self, s: S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| x * s).collect(),
        }
    }

    /// `self - lambda * I`.
    pub fn shift_diagonal(&self, lambda: S) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] -= lambda;
        }
        m
    }

    pub fn is_symmetric(&self, tol: &Tolerance<S>) -> bool {
        if !self.is_square() {
            return false;
        }
        let bound = tol.bound(self.max_abs());
        (0..self.rows).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= bound))
    }

    /// Largest entrywise difference; `None` if shapes differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<S> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.entries
                .iter()
                .zip(&other.entries)
                .fold(S::zero(), |m, (&a, &b)| m.max((a - b).abs())),
        )
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.entries[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.entries[i * self.cols + j]
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Self) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Self) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: Self) -> Matrix<S> {
        self.matmul(rhs)
    }
}

impl<'a, S: Scalar> Mul<&'a Vector<S>> for &'a Matrix<S> {
    type Output = Vector<S>;
    fn mul(self, rhs: &'a Vector<S>) -> Vector<S> {
        self.mul_vec(rhs)
    }
}
