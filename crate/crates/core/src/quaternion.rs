//! Reference arithmetic for the quaternions, with the reals and complex
//! numbers as the subalgebras spanned by `{1}` and `{1, i}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::StructureTensor;
use crate::scalar::Scalar;

/// `w + x i + y j + z k` with `i^2 = j^2 = k^2 = -1` and
/// `ij = -ji = k`, `jk = -kj = i`, `ki = -ik = j`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the zero quaternion has no inverse")]
pub struct NotInvertible;

impl<S: Scalar> Quaternion<S> {
    pub const fn new(w: S, x: S, y: S, z: S) -> Self {
        Self { w, x, y, z }
    }

    pub fn real(w: S) -> Self {
        Self::new(w, S::zero(), S::zero(), S::zero())
    }

    pub fn zero() -> Self {
        Self::real(S::zero())
    }

    pub fn one() -> Self {
        Self::real(S::one())
    }

    pub fn i() -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    /// Basis element `0 -> 1, 1 -> i, 2 -> j, 3 -> k`.
    pub fn basis(index: usize) -> Self {
        match index {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::j(),
            3 => Self::k(),
            _ => panic!("quaternion basis index {index} out of range"),
        }
    }

    /// Reads up to four leading coordinates; missing ones are zero.
    pub fn from_coords(c: &[S]) -> Self {
        let at = |i: usize| c.get(i).copied().unwrap_or_else(S::zero);
        Self::new(at(0), at(1), at(2), at(3))
    }

    pub fn to_array(self) -> [S; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn qmul(self, b: Self) -> Self {
        let a = self;
        Self {
            w: a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            x: a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            y: a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            z: a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        }
    }

    pub fn conjugate(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// `w^2 + x^2 + y^2 + z^2`, the scalar part of `a * conj(a)`.
    pub fn norm_sq(self) -> S {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn scale(self, s: S) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn inverse(self) -> Result<Self, NotInvertible> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(NotInvertible);
        }
        Ok(self.conjugate().scale(n.recip()))
    }

    /// Euclidean distance in coordinates.
    pub fn dist(self, other: Self) -> S {
        (self - other).norm_sq().sqrt()
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.qmul(rhs)
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self::new(self.w + b.w, self.x + b.x, self.y + b.y, self.z + b.z)
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Self::new(self.w - b.w, self.x - b.x, self.y - b.y, self.z - b.z)
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<S: Scalar> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

/// The three finite-dimensional real associative division algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    R,
    C,
    H,
}

impl Label {
    pub fn dim(self) -> usize {
        match self {
            Label::R => 1,
            Label::C => 2,
            Label::H => 4,
        }
    }

    pub fn from_dim(dim: usize) -> Option<Self> {
        match dim {
            1 => Some(Label::R),
            2 => Some(Label::C),
            4 => Some(Label::H),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::R => "R",
            Label::C => "C",
            Label::H => "H",
        }
    }

    fn basis_names(self) -> Vec<String> {
        ["1", "i", "j", "k"][..self.dim()]
            .iter()
            .map(|s| s.to_string())
            .collect()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown algebra label `{0}` (expected R, C or H)")]
pub struct UnknownLabel(pub String);

impl FromStr for Label {
    type Err = UnknownLabel;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" | "r" => Ok(Label::R),
            "C" | "c" => Ok(Label::C),
            "H" | "h" => Ok(Label::H),
            other => Err(UnknownLabel(other.to_string())),
        }
    }
}

/// Canonical structure tensor of `R`, `C` or `H` in the basis `1, i, j, k`
/// (truncated to the label's dimension), with integer constants and the
/// identity in slot 0.
pub fn structure_tensor_of<S: Scalar>(label: Label) -> StructureTensor<S> {
    let n = label.dim();
    StructureTensor::from_fn(n, label.basis_names(), Some(0), |a, b, c| {
        Quaternion::<S>::basis(a).qmul(Quaternion::basis(b)).to_array()[c]
    })
    .expect("canonical tensors are well-formed")
}
