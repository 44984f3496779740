use super::{Frame, FrobeniusError, Stage, Witness, WitnessKind};
use crate::algebra::{AlgebraElement, StructureTensor};
use crate::linalg::{self, LinalgError, Matrix, Tolerance};
use crate::scalar::Scalar;

/// Outcome of pushing a non-scalar element into `V`.
#[derive(Debug, Clone, PartialEq)]
pub enum Projection<S> {
    /// `x^2 + alpha x` is scalar and `v = x + alpha/2` squares to a negative
    /// scalar.
    InV {
        v: AlgebraElement<S>,
        alpha: S,
    },
    Witness(Witness<S>),
}

/// Reduces a non-scalar `x` into `V` through its minimal polynomial.
///
/// A quadratic minimal polynomial `X^2 + aX + b` gives `v = x + a/2` with
/// `v^2` scalar. If that scalar is positive, `(v - g)(v + g) = 0` for
/// `g = sqrt(v^2)`; if it is zero, `v v = 0`. A minimal polynomial of higher
/// degree is split as `g h` with `g` linear or irreducible quadratic, and
/// `g(x) h(x) = 0` with both factors nonzero by minimality.
pub fn project_to_v<S: Scalar>(
    t: &StructureTensor<S>,
    x: &AlgebraElement<S>,
    tol: &Tolerance<S>,
) -> Result<Projection<S>, FrobeniusError> {
    if x.dim() != t.dim() {
        return Err(crate::algebra::AlgebraError::DimensionMismatch {
            expected: t.dim(),
            got: x.dim(),
        }
        .into());
    }
    let frame = Frame::new(t, tol)?;
    let xw = frame.lower(x, tol)?;
    Ok(match project_in(&frame, &xw, tol)? {
        Projection::InV { v, alpha } => Projection::InV {
            v: frame.lift(&v),
            alpha,
        },
        w => w,
    })
}

pub(crate) fn project_in<S: Scalar>(
    frame: &Frame<S>,
    x: &AlgebraElement<S>,
    tol: &Tolerance<S>,
) -> Result<Projection<S>, FrobeniusError> {
    let t = &frame.work;
    if t.scalar_part_test(x, tol)?.is_some() {
        return Err(FrobeniusError::RealElement);
    }
    let m = t.minimal_polynomial(x, tol)?;
    match m.degree() {
        0 | 1 => Err(FrobeniusError::RealElement),
        2 => {
            let alpha = m.coeffs()[1];
            let y = x.axpy(alpha * S::lit(0.5), &frame.unity());
            Ok(square_dichotomy(frame, &y, alpha, Stage::Projection, tol))
        }
        _ => {
            let factors = match linalg::factor_linear_quadratic(&m, tol) {
                Ok(f) => f,
                Err(LinalgError::ConvergenceFailure(n)) => {
                    return Ok(Projection::Witness(frame.not_algebraic(
                        format!("minimal polynomial {m} did not split within {n} iterations"),
                        None,
                        S::zero(),
                        Stage::Projection,
                    )))
                }
                Err(e) => return Err(crate::algebra::AlgebraError::from(e).into()),
            };
            let g = &factors[0];
            let (h, _) = m.div_rem(g);
            let h = h.expect("factor degree below minimal polynomial degree");
            let gx = t.evaluate_polynomial(g, x, tol)?;
            let hx = t.evaluate_polynomial(&h, x, tol)?;
            Ok(Projection::Witness(frame.zero_divisor(&gx, &hx, Stage::Projection)))
        }
    }
}

/// Norm of the part of `x` off the identity axis of a normalised tensor.
pub(crate) fn off_scalar<S: Scalar>(t: &StructureTensor<S>, x: &AlgebraElement<S>) -> S {
    let u = t.unity_index().expect("normalised tensor");
    (0..t.dim())
        .filter(|&m| m != u)
        .fold(S::zero(), |s, m| s + x[m] * x[m])
        .sqrt()
}

/// Classifies `y` by its square, which should be a multiple of 1: negative
/// means `y` is in `V`, positive or zero yields zero divisors.
pub(crate) fn square_dichotomy<S: Scalar>(
    frame: &Frame<S>,
    y: &AlgebraElement<S>,
    alpha: S,
    stage: Stage,
    tol: &Tolerance<S>,
) -> Projection<S> {
    let t = &frame.work;
    let sq = t.square(y);
    let n = y.norm();
    let bound = frame.product_bound(tol, n, n);
    let lambda = match t.scalar_part_within(&sq, bound, tol) {
        Ok(Some(l)) => l,
        _ => {
            return Projection::Witness(frame.not_algebraic(
                "square of a projected element is not a multiple of 1",
                Some((y, y)),
                off_scalar(t, &sq),
                stage,
            ))
        }
    };
    if lambda < -bound {
        Projection::InV { v: y.clone(), alpha }
    } else if lambda > bound {
        let gamma = lambda.sqrt();
        let one = frame.unity();
        let a = y.axpy(-gamma, &one);
        let b = y.axpy(gamma, &one);
        Projection::Witness(frame.zero_divisor(&a, &b, stage))
    } else {
        Projection::Witness(frame.zero_divisor(y, y, stage))
    }
}

/// The subspace `V` with its inner product.
///
/// Built by [`build_v`] from the projected basis vectors, or assembled by
/// hand with [`VSpace::from_parts`] around any element playing the role of
/// 1 (for example an idempotent of a larger algebra).
#[derive(Debug, Clone)]
pub struct VSpace<S> {
    pub(crate) frame: Frame<S>,
    pub(crate) unit: AlgebraElement<S>,
    pub(crate) basis: Vec<AlgebraElement<S>>,
    pub(crate) gram: Option<Matrix<S>>,
}

impl<S: Scalar> VSpace<S> {
    /// A hand-built subspace of `t`: `basis` and `unit` in `t`'s coordinates
    /// and `gram` the inner products of the basis. The Gram matrix must be
    /// symmetric positive definite.
    pub fn from_parts(
        t: &StructureTensor<S>,
        unit: AlgebraElement<S>,
        basis: Vec<AlgebraElement<S>>,
        gram: Matrix<S>,
        tol: &Tolerance<S>,
    ) -> Result<Self, FrobeniusError> {
        let n = t.dim();
        if unit.dim() != n || basis.iter().any(|b| b.dim() != n) {
            return Err(FrobeniusError::InvalidSubspace(
                "element length differs from tensor dimension".into(),
            ));
        }
        if gram.rows() != basis.len() || gram.cols() != basis.len() {
            return Err(FrobeniusError::InvalidSubspace(format!(
                "Gram matrix is {}x{} for {} basis vectors",
                gram.rows(),
                gram.cols(),
                basis.len()
            )));
        }
        linalg::cholesky(&gram, tol)
            .map_err(|_| FrobeniusError::InvalidSubspace("Gram matrix is not positive definite".into()))?;
        Ok(Self {
            frame: Frame {
                input: t.clone(),
                work: t.clone(),
            },
            unit,
            basis,
            gram: Some(gram),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis of `V` in the coordinates of the tensor it was built from.
    pub fn basis(&self) -> Vec<AlgebraElement<S>> {
        self.basis.iter().map(|b| self.frame.lift(b)).collect()
    }

    /// `None` when `V = {0}`.
    pub fn gram(&self) -> Option<&Matrix<S>> {
        self.gram.as_ref()
    }

    pub fn input(&self) -> &StructureTensor<S> {
        &self.frame.input
    }

    /// The identity-normalised tensor the construction ran on.
    pub fn ambient(&self) -> &StructureTensor<S> {
        &self.frame.work
    }

    /// Element of `V` with coordinates `c` in the basis of `V` (work
    /// coordinates of the ambient tensor).
    pub(crate) fn combine(&self, c: &crate::linalg::Vector<S>) -> AlgebraElement<S> {
        self.basis
            .iter()
            .enumerate()
            .fold(self.frame.work.zero(), |acc, (m, b)| acc.axpy(c[m], b))
    }
}

/// Builds `V` with its Gram matrix, or the witness of the first failing
/// step.
pub fn build_v<S: Scalar>(t: &StructureTensor<S>, tol: &Tolerance<S>) -> Result<VSpace<S>, Witness<S>> {
    let frame = Frame::new(t, tol).map_err(|_| Witness {
        kind: WitnessKind::NoUnity,
        stage: Stage::Axioms,
        residual: S::zero(),
    })?;
    build_in(frame, tol)
}

pub(crate) fn build_in<S: Scalar>(frame: Frame<S>, tol: &Tolerance<S>) -> Result<VSpace<S>, Witness<S>> {
    let t = &frame.work;
    let n = t.dim();
    let u = t.unity_index().expect("normalised");
    let unit = t.basis(u);

    let mut basis = Vec::with_capacity(n - 1);
    for m in (0..n).filter(|&m| m != u) {
        match project_in(&frame, &t.basis(m), tol) {
            Ok(Projection::InV { v, .. }) => basis.push(v),
            Ok(Projection::Witness(w)) => return Err(w),
            Err(e) => {
                return Err(frame.not_algebraic(
                    format!("projection of basis vector {m} failed: {e}"),
                    None,
                    S::zero(),
                    Stage::Projection,
                ))
            }
        }
    }
    if basis.is_empty() {
        return Ok(VSpace {
            frame,
            unit,
            basis,
            gram: None,
        });
    }

    let mut cols: Vec<_> = basis.iter().map(|b| b.coords().clone()).collect();
    cols.push(unit.coords().clone());
    let r = linalg::rank(&Matrix::from_columns(&cols).expect("nonempty"), tol);
    if r != n {
        return Err(frame.not_algebraic(
            format!("R + V has dimension {r}, expected {n}"),
            None,
            S::zero(),
            Stage::Projection,
        ));
    }

    let dim_v = basis.len();
    let mut gram = Matrix::zeros(dim_v, dim_v);
    for a in 0..dim_v {
        for b in a..dim_v {
            let s = t.anti(&basis[a], &basis[b]);
            let bound = frame.product_bound(tol, basis[a].norm(), basis[b].norm());
            match t.scalar_part_within(&s, bound, tol) {
                Ok(Some(l)) => {
                    let ip = -l * S::lit(0.5);
                    gram[(a, b)] = ip;
                    gram[(b, a)] = ip;
                }
                _ => {
                    return Err(frame.not_algebraic(
                        format!("anticommutator of V basis elements {a} and {b} is not a multiple of 1"),
                        Some((&basis[a], &basis[b])),
                        off_scalar(t, &s),
                        Stage::InnerProduct,
                    ))
                }
            }
        }
    }

    let mut space = VSpace {
        frame,
        unit,
        basis,
        gram: None,
    };
    if linalg::cholesky(&gram, tol).is_err() {
        return Err(indefinite_witness(&space, &gram, tol));
    }
    space.gram = Some(gram);
    Ok(space)
}

/// A vector of `V` with nonnegative square, taken along the eigenvector of
/// the smallest Gram eigenvalue, reduced to zero divisors.
fn indefinite_witness<S: Scalar>(space: &VSpace<S>, gram: &Matrix<S>, tol: &Tolerance<S>) -> Witness<S> {
    let frame = &space.frame;
    let pairs = linalg::real_eigenpairs(gram, tol);
    let Some((_, c)) = pairs.iter().min_by(|a, b| a.0.partial_cmp(&b.0).unwrap()) else {
        return frame.not_algebraic(
            "Gram matrix is not positive definite",
            None,
            S::zero(),
            Stage::InnerProduct,
        );
    };
    let v = space.combine(c);
    match square_dichotomy(frame, &v, S::zero(), Stage::InnerProduct, tol) {
        Projection::Witness(w) => w,
        // Negative within the threshold but Cholesky failed: treat as null.
        Projection::InV { v, .. } => frame.zero_divisor(&v, &v, Stage::InnerProduct),
    }
}
