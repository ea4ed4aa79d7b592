//! Vectors, hyperplanes, polylines and the visibility predicate.

mod curve;
mod hyperplane;
mod vector;
mod visibility;

pub use curve::{first_hit, CurveHit, PolylineCurve, Segment};
pub use hyperplane::Hyperplane;
pub use vector::{norm2, norm2_checked, UnitDirection, Vector};
pub use visibility::{curve_sees, sees, support};

pub(crate) use visibility::sees_unchecked;
