use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::linalg::Vector;
use crate::scalar::Scalar;

/// Coordinates of an element against some tensor's basis.
///
/// The element does not carry its tensor; operations on a
/// [`StructureTensor`](super::StructureTensor) check the length.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<S> {
    coords: Vector<S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn coords(&self) -> &Vector<S> {
        &self.coords
    }

    pub fn into_coords(self) -> Vector<S> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    /// Euclidean norm of the coordinate vector.
    pub fn norm(&self) -> S {
        self.coords.norm()
    }

    pub fn scale(&self, s: S) -> Self {
        Self::from(self.coords.scale(s))
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: S, other: &Self) -> Self {
        Self::from(self.coords.axpy(s, &other.coords))
    }

    pub fn normalized(&self) -> Option<Self> {
        self.coords.normalized().map(Self::from)
    }
}

impl<S> From<Vector<S>> for AlgebraElement<S> {
    fn from(coords: Vector<S>) -> Self {
        Self { coords }
    }
}

impl<S> Index<usize> for AlgebraElement<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.coords[i]
    }
}

impl<S: Scalar> Add for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn add(self, rhs: Self) -> AlgebraElement<S> {
        AlgebraElement::from(&self.coords + &rhs.coords)
    }
}

impl<S: Scalar> Sub for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn sub(self, rhs: Self) -> AlgebraElement<S> {
        AlgebraElement::from(&self.coords - &rhs.coords)
    }
}

impl<S: Scalar> Neg for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn neg(self) -> AlgebraElement<S> {
        AlgebraElement::from(-&self.coords)
    }
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}
