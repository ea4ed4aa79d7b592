//! The visibility predicate: a point `p` sees a sphere point `q` when the
//! closed segment `pq` meets the closed unit ball only at `q`.

use crate::error::{Error, Result};
use crate::geometry::{PolylineCurve, UnitDirection, Vector};
use crate::tolerance::{EPS_GEO, EPS_NORM};

/// Whether `p` sees the sphere point `q`.
///
/// Along `x(t) = (1 − t)p + t q` the function `‖x(t)‖² − 1 = a t² + b t + c`
/// vanishes at `t = 1`, so it factors as `(t − 1)(a t − c)` with second root
/// `c / a` and discriminant `(a − c)² = 4(1 − ⟨p, q⟩)²`. The open ball is the
/// interval between the roots; the segment avoids it iff `c / a ≥ 1`. The
/// root gap is evaluated as `1 − ⟨p, q⟩` instead of through `b² − 4ac`,
/// which cancels catastrophically for far away `p`. A discriminant within
/// `EPS_GEO` of zero is tangency and still sees.
pub fn sees(p: &Vector, q: &UnitDirection) -> Result<bool> {
    q.check_dim(p.dim())?;
    let norm = q.norm();
    if (norm - 1.0).abs() > EPS_NORM {
        return Err(Error::NotUnit { norm });
    }
    if let Some(index) = p.coords().iter().position(|c| !c.is_finite()) {
        return Err(Error::NonFinite { index });
    }
    Ok(sees_unchecked(p, q))
}

pub(crate) fn sees_unchecked(p: &Vector, q: &Vector) -> bool {
    let a = p.distance(q).powi(2);
    if a <= EPS_GEO * EPS_GEO {
        // p coincides with q.
        return true;
    }
    // (a − c) / 2, the signed half distance between the roots scaled by a.
    let half_gap = 1.0 - p.dot(q);
    if half_gap.abs() <= EPS_GEO {
        return true;
    }
    // c / a > 1  ⟺  a − c < 0.
    half_gap < 0.0
}

/// Whether some point of `curve` sees `q`.
///
/// `⟨x, q⟩` is affine along each segment, and `p` sees `q` exactly when
/// `⟨p, q⟩ ≥ 1`, so a segment sees `q` iff one of its endpoints does.
pub fn curve_sees(curve: &PolylineCurve, q: &UnitDirection) -> Result<bool> {
    for v in curve.vertices() {
        if sees(v, q)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Support function `h_V(u) = max_{v ∈ V} ⟨u, v⟩`; `−∞` for an empty set.
pub fn support(points: &[Vector], u: &Vector) -> f64 {
    points
        .iter()
        .map(|v| v.dot(u))
        .fold(f64::NEG_INFINITY, f64::max)
}
