//! Sampling-based certificates for sphere inspection and hemisphere covers.
//!
//! Two independent routes decide whether a point set `V` inspects the sphere:
//! pointwise visibility ([`vertex_set_sees_all`], through [`sees`]) and
//! containment of the sphere in `conv(V)` ([`hull_contains_sphere`], through
//! the support function `h_V(u) = max_v ⟨u, v⟩ ≥ 1`). The two must agree on
//! every probe set.
//!
//! [`sees`]: crate::geometry::sees

mod cover;
mod witness;

pub use cover::{refute_cover, refute_cover_with, simplex_cover, Hemisphere, RefuteConfig};
pub use witness::{find_uncovered_witness, find_uncovered_witness_with, WitnessConfig};

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{sees_unchecked, support, UnitDirection, Vector};
use crate::sampling::probe_directions;
use crate::tolerance::EPS_GEO;

/// Outcome of a sampled covering check.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverReport {
    pub covered: bool,
    /// The first probe that failed; present iff `covered` is false.
    pub witness: Option<UnitDirection>,
    pub samples_used: usize,
}

impl CoverReport {
    fn from_failure(failure: Option<&UnitDirection>, samples_used: usize) -> Self {
        CoverReport {
            covered: failure.is_none(),
            witness: failure.cloned(),
            samples_used,
        }
    }
}

pub(crate) fn check_point_set(points: &[Vector]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptySet)?;
    let dim = first.dim();
    for p in &points[1..] {
        p.check_dim(dim)?;
    }
    Ok(dim)
}

fn check_probes(dim: usize, probes: &[UnitDirection]) -> Result<()> {
    if probes.is_empty() {
        return Err(Error::InvalidParameter("no probe directions".into()));
    }
    probes.iter().try_for_each(|u| u.check_dim(dim))
}

fn check_samples(samples: usize) -> Result<()> {
    if samples == 0 {
        Err(Error::InvalidParameter("samples must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Whether every probe direction is seen by some point of `points`.
pub fn vertex_set_sees_all_on(points: &[Vector], probes: &[UnitDirection]) -> Result<CoverReport> {
    let dim = check_point_set(points)?;
    check_probes(dim, probes)?;
    let failure = probes
        .par_iter()
        .position_first(|u| !points.iter().any(|v| sees_unchecked(v, u)));
    Ok(CoverReport::from_failure(
        failure.map(|i| &probes[i]),
        probes.len(),
    ))
}

/// Whether `h_V(u) ≥ 1 − EPS_GEO` on every probe direction.
pub fn hull_contains_sphere_on(points: &[Vector], probes: &[UnitDirection]) -> Result<CoverReport> {
    let dim = check_point_set(points)?;
    check_probes(dim, probes)?;
    let failure = probes
        .par_iter()
        .position_first(|u| support(points, u) < 1.0 - EPS_GEO);
    Ok(CoverReport::from_failure(
        failure.map(|i| &probes[i]),
        probes.len(),
    ))
}

/// Samples `samples` uniform directions (plus the structured probes) and
/// checks that each is seen by some point of `points`.
pub fn vertex_set_sees_all<R: Rng + ?Sized>(
    points: &[Vector],
    samples: usize,
    rng: &mut R,
) -> Result<CoverReport> {
    let dim = check_point_set(points)?;
    check_samples(samples)?;
    vertex_set_sees_all_on(points, &probe_directions(rng, dim, samples, points))
}

/// Samples probe directions as [`vertex_set_sees_all`] does and checks the
/// support-function criterion for `S^{d−1} ⊂ conv(points)`.
pub fn hull_contains_sphere<R: Rng + ?Sized>(
    points: &[Vector],
    samples: usize,
    rng: &mut R,
) -> Result<CoverReport> {
    let dim = check_point_set(points)?;
    check_samples(samples)?;
    hull_contains_sphere_on(points, &probe_directions(rng, dim, samples, points))
}

/// Both verdicts on one shared probe set.
#[derive(Debug, Clone, PartialEq)]
pub struct Agreement {
    pub sees_all: CoverReport,
    pub hull_contains: CoverReport,
}

impl Agreement {
    pub fn agree(&self) -> bool {
        self.sees_all.covered == self.hull_contains.covered
    }
}

pub fn compare_on(points: &[Vector], probes: &[UnitDirection]) -> Result<Agreement> {
    Ok(Agreement {
        sees_all: vertex_set_sees_all_on(points, probes)?,
        hull_contains: hull_contains_sphere_on(points, probes)?,
    })
}

/// Runs the visibility and containment checks on the same sampled probe
/// set and reports whether their verdicts agree.
pub fn visibility_matches_containment<R: Rng + ?Sized>(
    points: &[Vector],
    samples: usize,
    rng: &mut R,
) -> Result<bool> {
    let dim = check_point_set(points)?;
    check_samples(samples)?;
    let probes = probe_directions(rng, dim, samples, points);
    Ok(compare_on(points, &probes)?.agree())
}
