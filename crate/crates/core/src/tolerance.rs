//! Numerical tolerances shared by every module.

/// Allowed deviation of `‖v‖₂` from 1 for a vector to count as a unit direction.
pub const EPS_NORM: f64 = 1e-12;

/// On-surface and on-hyperplane tolerance. Also the tangency slack of [`sees`].
///
/// [`sees`]: crate::geometry::sees
pub const EPS_GEO: f64 = 1e-9;

/// Largest admissible `max_i ⟨pole_i, x⟩` for a refutation witness.
pub const REFUTE_TOL: f64 = 1e-7;
