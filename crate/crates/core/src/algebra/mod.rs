//! Finite-dimensional real algebras given by structure constants.
//!
//! A [`StructureTensor`] of dimension `n` stores `n^3` reals `c[i][j][k]`
//! with `e_i e_j = sum_k c[i][j][k] e_k`. The tensor is the only definition of
//! multiplication; fixtures and user input are handled identically.
//!
//! Only finite-dimensional algebras are representable. Every such algebra is
//! algebraic (each element has a minimal polynomial of degree at most `n`),
//! which is all the classifier needs.

mod element;
mod properties;

use std::fmt;

use thiserror::Error;

use crate::linalg::{self, LinalgError, Matrix, Tolerance, Vector, DEFAULT_MAX_DIM};
use crate::scalar::Scalar;

pub use element::AlgebraElement;
pub use properties::AxiomReport;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("element has {got} coordinates, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure tensor must have {expected} constants, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("structure constant c[{0}][{1}][{2}] is not finite")]
    NonFinite(usize, usize, usize),
    #[error("expected {expected} basis names, got {got}")]
    BasisNames { expected: usize, got: usize },
    #[error("algebra dimension must be positive")]
    Empty,
    #[error("algebra dimension {dim} exceeds the cap of {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("basis vector {0} is not a two-sided identity")]
    NotUnity(usize),
    #[error("algebra has no multiplicative identity")]
    NoUnity,
    #[error("basis-change matrix is singular")]
    SingularBasis,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Structure constants of an `n`-dimensional real algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTensor<S> {
    dim: usize,
    /// Flattened `c[i][j][k]` at `(i * n + j) * n + k`.
    constants: Vec<S>,
    basis_names: Vec<String>,
    unity_index: Option<usize>,
    /// When the identity had to be moved onto a basis slot: the matrix whose
    /// columns are the new basis in the coordinates of the tensor this one was
    /// derived from.
    unity_change: Option<Matrix<S>>,
}

impl<S: Scalar> StructureTensor<S> {
    /// Builds a tensor from flattened constants.
    ///
    /// Empty `basis_names` yields `e0, e1, ...`. A declared `unity_index` is
    /// checked against a default tolerance and then snapped to exact
    /// Kronecker deltas.
    pub fn new(
        dim: usize,
        constants: Vec<S>,
        basis_names: Vec<String>,
        unity_index: Option<usize>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::Empty);
        }
        if dim > DEFAULT_MAX_DIM {
            return Err(AlgebraError::TooLarge {
                dim,
                cap: DEFAULT_MAX_DIM,
            });
        }
        if constants.len() != dim * dim * dim {
            return Err(AlgebraError::Shape {
                expected: dim * dim * dim,
                got: constants.len(),
            });
        }
        if let Some(p) = constants.iter().position(|c| !c.is_finite()) {
            return Err(AlgebraError::NonFinite(p / (dim * dim), (p / dim) % dim, p % dim));
        }
        let basis_names = if basis_names.is_empty() {
            (0..dim).map(|i| format!("e{i}")).collect()
        } else if basis_names.len() == dim {
            basis_names
        } else {
            return Err(AlgebraError::BasisNames {
                expected: dim,
                got: basis_names.len(),
            });
        };
        let mut t = Self {
            dim,
            constants,
            basis_names,
            unity_index: None,
            unity_change: None,
        };
        if let Some(u) = unity_index {
            if u >= dim || !t.snap_unity(u, t.max_abs_constant(), &Tolerance::default()) {
                return Err(AlgebraError::NotUnity(u));
            }
        }
        Ok(t)
    }

    /// Builds a tensor from `f(i, j, k) = c[i][j][k]`.
    pub fn from_fn(
        dim: usize,
        basis_names: Vec<String>,
        unity_index: Option<usize>,
        f: impl Fn(usize, usize, usize) -> S,
    ) -> Result<Self, AlgebraError> {
        let mut constants = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    constants.push(f(i, j, k));
                }
            }
        }
        Self::new(dim, constants, basis_names, unity_index)
    }

    /// Checks that `e_u` is a two-sided identity to within `tol.bound(scale)`
    /// and, if so, overwrites its rows with exact deltas.
    pub(crate) fn snap_unity(&mut self, u: usize, scale: S, tol: &Tolerance<S>) -> bool {
        let n = self.dim;
        let bound = tol.bound(scale);
        for a in 0..n {
            for k in 0..n {
                let delta = if a == k { S::one() } else { S::zero() };
                if (self.c(u, a, k) - delta).abs() > bound || (self.c(a, u, k) - delta).abs() > bound {
                    return false;
                }
            }
        }
        for a in 0..n {
            for k in 0..n {
                let delta = if a == k { S::one() } else { S::zero() };
                self.constants[(u * n + a) * n + k] = delta;
                self.constants[(a * n + u) * n + k] = delta;
            }
        }
        self.unity_index = Some(u);
        true
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> S {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[S] {
        &self.constants
    }

    /// `table[i][j][k] = c[i][j][k]`.
    pub fn to_nested(&self) -> Vec<Vec<Vec<S>>> {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.c(i, j, k)).collect()).collect())
            .collect()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unity_index(&self) -> Option<usize> {
        self.unity_index
    }

    pub fn unity_change(&self) -> Option<&Matrix<S>> {
        self.unity_change.as_ref()
    }

    pub fn max_abs_constant(&self) -> S {
        self.constants.iter().fold(S::zero(), |m, c| m.max(c.abs()))
    }

    /// Natural magnitude of a product of operands with the given norms; used
    /// to scale zero tests on products.
    pub fn product_scale(&self, a_norm: S, b_norm: S) -> S {
        self.max_abs_constant() * S::from_usize_lossy(self.dim) * a_norm * b_norm
    }

    pub fn basis(&self, i: usize) -> AlgebraElement<S> {
        AlgebraElement::from(Vector::unit(self.dim, i))
    }

    pub fn zero(&self) -> AlgebraElement<S> {
        AlgebraElement::from(Vector::zeros(self.dim))
    }

    pub fn element(&self, coords: Vec<S>) -> Result<AlgebraElement<S>, AlgebraError> {
        let v = Vector::new(coords)?;
        self.check(&AlgebraElement::from(v.clone()))?;
        Ok(AlgebraElement::from(v))
    }

    fn check(&self, a: &AlgebraElement<S>) -> Result<(), AlgebraError> {
        if a.dim() == self.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: a.dim(),
            })
        }
    }

    /// `(a b)_k = sum_ij a_i b_j c[i][j][k]`.
    pub fn multiply(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<AlgebraElement<S>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> AlgebraElement<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            let ai = a[i];
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                let w = ai * b[j];
                if w.is_zero() {
                    continue;
                }
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    *o += w * self.constants[base + k];
                }
            }
        }
        AlgebraElement::from(Vector::from_vec_unchecked(out))
    }

    pub(crate) fn square(&self, a: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.mul(a, a)
    }

    /// Matrix of `x -> a x`.
    pub fn left_mul_matrix(&self, a: &AlgebraElement<S>) -> Result<Matrix<S>, AlgebraError> {
        self.check(a)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    m[(k, j)] += a[i] * self.c(i, j, k);
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `x -> x a`.
    pub fn right_mul_matrix(&self, a: &AlgebraElement<S>) -> Result<Matrix<S>, AlgebraError> {
        self.check(a)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            if a[j].is_zero() {
                continue;
            }
            for i in 0..n {
                for k in 0..n {
                    m[(k, i)] += a[j] * self.c(i, j, k);
                }
            }
        }
        Ok(m)
    }

    /// `x y + y x`.
    pub fn anticommutator(
        &self,
        x: &AlgebraElement<S>,
        y: &AlgebraElement<S>,
    ) -> Result<AlgebraElement<S>, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.anti(x, y))
    }

    pub(crate) fn anti(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
        &self.mul(x, y) + &self.mul(y, x)
    }

    /// The same algebra in the basis `f_i = sum_j P[j][i] e_j`.
    ///
    /// Coordinates transport as `x_f = P^{-1} x_e`. The identity slot is
    /// carried over when it lands exactly on a new basis vector, and basis
    /// names survive permutation matrices.
    pub fn change_basis(&self, p: &Matrix<S>, tol: &Tolerance<S>) -> Result<Self, AlgebraError> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                got: p.rows().max(p.cols()),
            });
        }
        if linalg::rank(p, tol) < n {
            return Err(AlgebraError::SingularBasis);
        }
        let pinv = linalg::inverse(p, tol).map_err(|_| AlgebraError::SingularBasis)?;

        // half[a][j][l] = sum_i P[i][a] c[i][j][l]
        let mut half = vec![S::zero(); n * n * n];
        for a in 0..n {
            for i in 0..n {
                let pia = p[(i, a)];
                if pia.is_zero() {
                    continue;
                }
                for j in 0..n {
                    for l in 0..n {
                        half[(a * n + j) * n + l] += pia * self.c(i, j, l);
                    }
                }
            }
        }
        let mut constants = vec![S::zero(); n * n * n];
        let mut prod = vec![S::zero(); n];
        for a in 0..n {
            for b in 0..n {
                prod.iter_mut().for_each(|x| *x = S::zero());
                for j in 0..n {
                    let pjb = p[(j, b)];
                    if pjb.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        prod[l] += pjb * half[(a * n + j) * n + l];
                    }
                }
                for k in 0..n {
                    let mut s = S::zero();
                    for l in 0..n {
                        s += pinv[(k, l)] * prod[l];
                    }
                    constants[(a * n + b) * n + k] = s;
                }
            }
        }

        let names = match permutation_of(p) {
            Some(sigma) => sigma.iter().map(|&s| self.basis_names[s].clone()).collect(),
            None => (0..n).map(|i| format!("f{i}")).collect(),
        };
        let mut out = Self::new(n, constants, names, None)?;
        if let Some(u) = self.unity_index {
            let moved = pinv.column(u);
            let one_hot = (0..n).find(|&m| moved[m] == S::one() && (0..n).all(|q| q == m || moved[q].is_zero()));
            if let Some(m) = one_hot {
                out.snap_unity(m, out.max_abs_constant(), tol);
            }
        }
        Ok(out)
    }

    /// Coordinates of `x` (given in this basis) after the change to the basis
    /// given by the columns of `p`.
    pub fn transport(x: &AlgebraElement<S>, p_inverse: &Matrix<S>) -> AlgebraElement<S> {
        AlgebraElement::from(p_inverse.mul_vec(x.coords()))
    }
}

/// For a permutation matrix, `sigma[a]` is the old index of new basis vector `a`.
fn permutation_of<S: Scalar>(p: &Matrix<S>) -> Option<Vec<usize>> {
    let n = p.rows();
    let mut sigma = Vec::with_capacity(n);
    for a in 0..n {
        let col = p.column(a);
        let ones: Vec<usize> = (0..n).filter(|&i| col[i] == S::one()).collect();
        if ones.len() != 1 || (0..n).any(|i| i != ones[0] && !col[i].is_zero()) {
            return None;
        }
        sigma.push(ones[0]);
    }
    Some(sigma)
}

impl<S: Scalar> fmt::Display for StructureTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}-dimensional algebra, basis [{}]",
            self.dim,
            self.basis_names.join(", ")
        )?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.mul(&self.basis(i), &self.basis(j));
                writeln!(
                    f,
                    "  {} * {} = {}",
                    self.basis_names[i],
                    self.basis_names[j],
                    prod.coords()
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
