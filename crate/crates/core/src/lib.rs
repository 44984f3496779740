//! Constructive classification of finite-dimensional real associative
//! division algebras.
//!
//! Given structure constants, [`frobenius::classify`] either produces an
//! explicit isomorphism onto `R`, `C` or `H`, or a witness that the input is
//! not a division algebra (a zero-divisor pair checkable with one
//! multiplication, a non-associative basis triple, or a missing identity).
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix `f64`, which is what the default tolerances are tuned for.

pub mod algebra;
pub mod frobenius;
pub mod linalg;
pub mod quaternion;
mod scalar;

pub use algebra::{AlgebraElement, AlgebraError, AxiomReport, StructureTensor};
pub use frobenius::{
    build_v, classify, classify_from_v, odd_dimension_shortcut, project_to_v, verify_isomorphism,
    ClassificationOutcome, FrobeniusError, Projection, QuaternionFrame, Stage, VSpace, Witness, WitnessKind,
};
pub use linalg::{LinalgError, Matrix, RealPolynomial, Tolerance, Vector};
pub use quaternion::{structure_tensor_of, Label, NotInvertible, Quaternion};
pub use scalar::Scalar;

pub type Matrix64 = Matrix<f64>;
pub type Vector64 = Vector<f64>;
pub type Polynomial64 = RealPolynomial<f64>;
pub type Tolerance64 = Tolerance<f64>;
pub type Tensor64 = StructureTensor<f64>;
pub type Element64 = AlgebraElement<f64>;
pub type Quaternion64 = Quaternion<f64>;
pub type Outcome64 = ClassificationOutcome<f64>;
pub type Witness64 = Witness<f64>;

pub type Matrix32 = Matrix<f32>;
pub type Tolerance32 = Tolerance<f32>;
pub type Tensor32 = StructureTensor<f32>;
pub type Quaternion32 = Quaternion<f32>;
