//! The constructive classifier.
//!
//! For a unital associative tensor the classifier builds
//! `V = { v : v^2 is a nonpositive multiple of 1 }` from the basis, equips it
//! with `<u|v> = -1/2 (u v + v u)`, picks an orthonormal `i`, `j` and sets
//! `k = i j`. Depending on `dim V` this yields an explicit isomorphism onto
//! `R`, `C` or `H`, or a [`Witness`] that the input is not a division algebra.
//!
//! Witness vectors are always expressed in the coordinates of the tensor the
//! caller passed in, even when the classifier internally moved the identity
//! onto a basis slot.

mod classify;
mod project;
mod shortcut;
mod verify;

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, StructureTensor};
use crate::linalg::{Matrix, Tolerance};
use crate::quaternion::Label;
use crate::scalar::Scalar;

pub use classify::{classify, classify_from_v, QuaternionFrame};
pub use project::{build_v, project_to_v, Projection, VSpace};
pub use shortcut::odd_dimension_shortcut;
pub use verify::verify_isomorphism;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrobeniusError {
    #[error("element is a real multiple of the identity")]
    RealElement,
    #[error("algebra has no multiplicative identity")]
    NoUnity,
    #[error("dimension {0} is even")]
    EvenDimension(usize),
    #[error("outcome is not a success")]
    NotASuccess,
    #[error("invalid subspace: {0}")]
    InvalidSubspace(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which step of the construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    /// Unity or associativity check.
    Axioms,
    /// Reducing a basis element into `V` via its minimal polynomial.
    Projection,
    /// Scalarity of anticommutators or definiteness of the Gram matrix.
    InnerProduct,
    /// The quaternion relations for `i`, `j`, `k = ij`.
    QuaternionRelations,
    /// A unit vector of `V` orthogonal to `i`, `j`, `k`.
    BeyondQuaternions,
    /// Real eigenvector of a left multiplication in odd dimension.
    OddDimension,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Axioms => "axioms",
            Stage::Projection => "projection",
            Stage::InnerProduct => "inner-product",
            Stage::QuaternionRelations => "quaternion-relations",
            Stage::BeyondQuaternions => "beyond-quaternions",
            Stage::OddDimension => "odd-dimension",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WitnessKind<S> {
    /// Unit-norm `a`, `b` with `a b` numerically zero.
    ZeroDivisor {
        a: AlgebraElement<S>,
        b: AlgebraElement<S>,
    },
    /// Basis triple with the largest associator.
    NonAssociative {
        triple: (usize, usize, usize),
    },
    NoUnity,
    /// A step whose mathematical guarantee failed without yielding a cleaner
    /// certificate; `pair` carries the offending elements when there are any.
    NotAlgebraicStep {
        detail: String,
        pair: Option<(AlgebraElement<S>, AlgebraElement<S>)>,
    },
}

/// Certificate that a tensor is not a division algebra.
///
/// `residual` is `|a b|` for zero divisors, the associator norm for
/// non-associative triples, the defect that tripped the check for
/// `NotAlgebraicStep`, and zero for `NoUnity`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<S> {
    pub kind: WitnessKind<S>,
    pub stage: Stage,
    pub residual: S,
}

impl<S: Scalar> Witness<S> {
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            WitnessKind::ZeroDivisor { .. } => "ZeroDivisor",
            WitnessKind::NonAssociative { .. } => "NonAssociative",
            WitnessKind::NoUnity => "NoUnity",
            WitnessKind::NotAlgebraicStep { .. } => "NotAlgebraicStep",
        }
    }

    /// Recomputes the certificate on `t`.
    ///
    /// Zero divisors need unit-norm factors and `|a b| <= tol.bound(1)`;
    /// non-associative triples must reproduce an associator above the same
    /// bound; `NoUnity` re-runs the identity search. `NotAlgebraicStep` is
    /// diagnostic only and never verifies.
    pub fn verify(&self, t: &StructureTensor<S>, tol: &Tolerance<S>) -> bool {
        match &self.kind {
            WitnessKind::ZeroDivisor { a, b } => {
                let unit = |x: &AlgebraElement<S>| (x.norm() - S::one()).abs() <= tol.bound(S::one());
                match t.multiply(a, b) {
                    Ok(ab) => unit(a) && unit(b) && ab.norm() <= tol.bound(S::one()),
                    Err(_) => false,
                }
            }
            WitnessKind::NonAssociative { triple: (i, j, k) } => {
                let n = t.dim();
                *i < n && *j < n && *k < n && t.associator_residual(*i, *j, *k) > tol.bound(S::one())
            }
            WitnessKind::NoUnity => t.find_unity(tol).is_err(),
            WitnessKind::NotAlgebraicStep { .. } => false,
        }
    }
}

impl<S: Scalar> fmt::Display for Witness<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            WitnessKind::ZeroDivisor { a, b } => {
                write!(f, "zero divisors a = {a}, b = {b} with |ab| = {:e}", self.residual)
            }
            WitnessKind::NonAssociative { triple: (i, j, k) } => write!(
                f,
                "(e{i} e{j}) e{k} != e{i} (e{j} e{k}), associator norm {:e}",
                self.residual
            ),
            WitnessKind::NoUnity => write!(f, "no multiplicative identity"),
            WitnessKind::NotAlgebraicStep { detail, .. } => write!(f, "{detail} (defect {:e})", self.residual),
        }?;
        write!(f, " [{}]", self.stage)
    }
}

/// Result of [`classify`].
#[derive(Debug, Clone, PartialEq)]
pub enum ClassificationOutcome<S> {
    /// `iso` maps input coordinates to coordinates in the canonical basis
    /// `1, i, j, k` of the target; `residual` is the largest homomorphism
    /// defect over basis pairs.
    Success {
        label: Label,
        iso: Matrix<S>,
        residual: S,
    },
    Failure(Witness<S>),
}

impl<S: Scalar> ClassificationOutcome<S> {
    pub fn label(&self) -> Option<Label> {
        match self {
            Self::Success { label, .. } => Some(*label),
            Self::Failure(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness<S>> {
        match self {
            Self::Success { .. } => None,
            Self::Failure(w) => Some(w),
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, Self::Success { .. })
    }
}

/// The tensor handed in by the caller together with the unity-normalised
/// copy the construction runs on.
#[derive(Debug, Clone)]
pub(crate) struct Frame<S> {
    pub input: StructureTensor<S>,
    pub work: StructureTensor<S>,
}

impl<S: Scalar> Frame<S> {
    pub fn new(input: &StructureTensor<S>, tol: &Tolerance<S>) -> Result<Self, FrobeniusError> {
        let work = input.normalize_unity(tol).map_err(|e| match e {
            AlgebraError::NoUnity => FrobeniusError::NoUnity,
            other => FrobeniusError::Algebra(other),
        })?;
        Ok(Self {
            input: input.clone(),
            work,
        })
    }

    pub fn unity(&self) -> AlgebraElement<S> {
        self.work.basis(self.work.unity_index().expect("normalised"))
    }

    /// Work coordinates to input coordinates.
    pub fn lift(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        match self.work.unity_change() {
            Some(q) => AlgebraElement::from(q.mul_vec(x.coords())),
            None => x.clone(),
        }
    }

    /// Input coordinates to work coordinates.
    pub fn lower(&self, x: &AlgebraElement<S>, tol: &Tolerance<S>) -> Result<AlgebraElement<S>, FrobeniusError> {
        match self.work.unity_change() {
            Some(q) => {
                let qinv = crate::linalg::inverse(q, tol).map_err(|_| AlgebraError::SingularBasis)?;
                Ok(AlgebraElement::from(qinv.mul_vec(x.coords())))
            }
            None => Ok(x.clone()),
        }
    }

    /// Zero-divisor witness from work-coordinate factors: lifted, scaled to
    /// unit norm and re-multiplied in the input tensor.
    pub fn zero_divisor(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>, stage: Stage) -> Witness<S> {
        let (a, b) = (self.lift(a), self.lift(b));
        match (a.normalized(), b.normalized()) {
            (Some(a), Some(b)) => {
                let residual = self.input.mul(&a, &b).norm();
                Witness {
                    kind: WitnessKind::ZeroDivisor { a, b },
                    stage,
                    residual,
                }
            }
            _ => self.not_algebraic("zero-divisor candidate vanished", None, S::zero(), stage),
        }
    }

    pub fn not_algebraic(
        &self,
        detail: impl Into<String>,
        pair: Option<(&AlgebraElement<S>, &AlgebraElement<S>)>,
        residual: S,
        stage: Stage,
    ) -> Witness<S> {
        Witness {
            kind: WitnessKind::NotAlgebraicStep {
                detail: detail.into(),
                pair: pair.map(|(a, b)| (self.lift(a), self.lift(b))),
            },
            stage,
            residual,
        }
    }

    /// Zero threshold for a product of operands with these norms.
    pub fn product_bound(&self, tol: &Tolerance<S>, a_norm: S, b_norm: S) -> S {
        tol.bound(a_norm * b_norm)
    }
}
