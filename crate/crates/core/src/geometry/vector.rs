use std::fmt;
use std::ops::{Add, Deref, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::tolerance::EPS_NORM;

/// A point or displacement in `ℝ^d` with finite coordinates.
#[derive(Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    /// Wraps `coords`, rejecting empty or non-finite input.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Vector(coords))
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    /// The `axis`-th standard basis vector scaled by `scale`.
    pub fn axis(dim: usize, axis: usize, scale: f64) -> Self {
        let mut coords = vec![0.0; dim];
        coords[axis] = scale;
        Vector(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn norm_l1(&self) -> f64 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn scaled(&self, factor: f64) -> Vector {
        Vector(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: f64, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    /// The point `(1 − t)·self + t·other`.
    pub fn lerp(&self, other: &Vector, t: f64) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            })
        }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        self.add_scaled(1.0, rhs)
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        self.add_scaled(-1.0, rhs)
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        self.scaled(-1.0)
    }
}

/// Euclidean norm of `v`.
pub fn norm2(v: &Vector) -> f64 {
    v.norm()
}

/// Euclidean norm of a raw coordinate slice; errors on non-finite entries.
pub fn norm2_checked(coords: &[f64]) -> Result<f64> {
    if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
        return Err(Error::NonFinite { index });
    }
    Ok(coords.iter().map(|c| c * c).sum::<f64>().sqrt())
}

/// A point on the unit sphere `S^{d−1}`.
#[derive(Clone, PartialEq)]
pub struct UnitDirection(Vector);

impl UnitDirection {
    /// Accepts `v` only if `|‖v‖₂ − 1| ≤ EPS_NORM`.
    pub fn new(v: Vector) -> Result<Self> {
        let norm = v.norm();
        if (norm - 1.0).abs() > EPS_NORM {
            return Err(Error::NotUnit { norm });
        }
        Ok(UnitDirection(v))
    }

    /// Rescales `v` onto the sphere.
    pub fn normalize(v: &Vector) -> Result<Self> {
        let norm = v.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(UnitDirection(v.scaled(1.0 / norm)))
    }

    pub fn from_coords(coords: Vec<f64>) -> Result<Self> {
        Self::new(Vector::new(coords)?)
    }

    /// `±e_axis`.
    pub fn axis(dim: usize, axis: usize, positive: bool) -> Self {
        UnitDirection(Vector::axis(dim, axis, if positive { 1.0 } else { -1.0 }))
    }

    /// The diagonal direction `(1, …, 1)/√d`.
    pub fn diagonal(dim: usize) -> Self {
        UnitDirection(Vector(vec![1.0 / (dim as f64).sqrt(); dim]))
    }

    pub fn as_vector(&self) -> &Vector {
        &self.0
    }

    pub fn into_vector(self) -> Vector {
        self.0
    }

    pub fn negated(&self) -> UnitDirection {
        UnitDirection(-&self.0)
    }
}

impl Deref for UnitDirection {
    type Target = Vector;

    fn deref(&self) -> &Vector {
        &self.0
    }
}

impl fmt::Debug for UnitDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
