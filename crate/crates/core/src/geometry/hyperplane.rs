use crate::error::{Error, Result};
use crate::geometry::{UnitDirection, Vector};
use crate::tolerance::EPS_GEO;

/// The affine hyperplane `{x : ⟨normal, x⟩ = offset}` with `offset ≥ 0`.
///
/// The representation is canonical: a negative offset flips the normal, and
/// for hyperplanes through the origin the first nonzero normal coordinate is
/// positive. `offset` is the Euclidean distance from the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: UnitDirection,
    offset: f64,
}

impl Hyperplane {
    pub fn new(normal: UnitDirection, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "hyperplane offset {offset} is not finite"
            )));
        }
        let (normal, offset) = if offset < 0.0 {
            (normal.negated(), -offset)
        } else {
            (normal, offset)
        };
        let normal = if offset == 0.0 {
            match normal.coords().iter().find(|c| **c != 0.0) {
                Some(c) if *c < 0.0 => normal.negated(),
                _ => normal,
            }
        } else {
            normal
        };
        Ok(Hyperplane { normal, offset })
    }

    /// The tangent hyperplane of the sphere of radius `radius` at `radius·point`.
    pub fn tangent(point: &UnitDirection, radius: f64) -> Result<Self> {
        Self::new(point.clone(), radius)
    }

    pub fn normal(&self) -> &UnitDirection {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// Signed distance `⟨normal, x⟩ − offset`.
    pub fn signed_distance(&self, x: &Vector) -> f64 {
        self.normal.dot(x) - self.offset
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.signed_distance(x).abs() <= EPS_GEO
    }

    /// The image of this hyperplane under `x ↦ factor·x` for `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if factor <= 0.0 || !factor.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "scale factor {factor} must be positive"
            )));
        }
        Self::new(self.normal.clone(), self.offset * factor)
    }
}
