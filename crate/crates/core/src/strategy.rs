//! Competitive hyperplane search from an inspecting closed curve, and the
//! reverse extraction of an inspecting curve from a search path.
//!
//! Phase `i` of the doubling strategy walks from the origin to `2^i·γ₀`,
//! traverses the scaled base curve `2^i·γ`, and returns to the origin. The
//! scaled curve sees both `±2^i·n` for any unit `n`, so it crosses every
//! hyperplane at distance at most `2^i`. Since `‖γ₀‖ ≤ ℓ`, phase `i` costs at
//! most `3·2^i·ℓ`, which yields the envelope `12ℓ·ρ + 3ℓ`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{first_hit, Hyperplane, PolylineCurve, UnitDirection, Vector};
use crate::tolerance::EPS_GEO;

pub const DEFAULT_MAX_PHASES: u32 = 64;

/// The doubling search strategy built on a closed base curve.
#[derive(Debug, Clone, PartialEq)]
pub struct DoublingStrategy {
    base_curve: PolylineCurve,
    anchor: Vector,
    max_phases: u32,
}

/// One simulated search for a target hyperplane.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchTranscript {
    pub target: Hyperplane,
    /// Total path length walked until the first contact with `target`.
    pub traversed_length: f64,
    pub hit_point: Vector,
    pub phase: u32,
    /// `traversed_length / ρ`, or 0 for a hyperplane through the origin.
    pub ratio: f64,
}

/// Wraps `base` into a doubling strategy anchored at its first vertex.
pub fn build_doubling_strategy(base: PolylineCurve) -> Result<DoublingStrategy> {
    if !base.is_closed() {
        return Err(Error::InvalidCurve(
            "doubling strategy needs a closed base curve".into(),
        ));
    }
    let anchor = base.start().clone();
    let length = base.length();
    // Any inspecting closed curve crosses the hyperplane ⟨γ₀, x⟩ = 0.
    if anchor.norm() > length + EPS_GEO {
        return Err(Error::InvalidCurve(format!(
            "anchor norm {} exceeds curve length {length}; the curve cannot inspect the sphere",
            anchor.norm()
        )));
    }
    Ok(DoublingStrategy {
        base_curve: base,
        anchor,
        max_phases: DEFAULT_MAX_PHASES,
    })
}

impl DoublingStrategy {
    pub fn with_max_phases(mut self, max_phases: u32) -> Self {
        self.max_phases = max_phases;
        self
    }

    pub fn base_curve(&self) -> &PolylineCurve {
        &self.base_curve
    }

    pub fn anchor(&self) -> &Vector {
        &self.anchor
    }

    pub fn max_phases(&self) -> u32 {
        self.max_phases
    }

    pub fn base_length(&self) -> f64 {
        self.base_curve.length()
    }

    pub fn dim(&self) -> usize {
        self.base_curve.dim()
    }

    /// The open path of phase `phase`: origin, `2^i·γ`, back to the origin.
    pub fn phase_path(&self, phase: u32) -> PolylineCurve {
        let scale = 2f64.powi(phase as i32);
        let origin = Vector::zeros(self.dim());
        let mut vertices = Vec::with_capacity(self.base_curve.vertices().len() + 3);
        vertices.push(origin.clone());
        vertices.extend(self.base_curve.vertices().iter().map(|v| v.scaled(scale)));
        vertices.push(self.anchor.scaled(scale));
        vertices.push(origin);
        PolylineCurve::open(vertices).expect("phase path has at least four vertices")
    }

    pub fn phase_length(&self, phase: u32) -> f64 {
        self.phase_path(phase).length()
    }

    /// All phases `0..=last` joined into one open path from the origin.
    pub fn path_through_phase(&self, last: u32) -> PolylineCurve {
        let mut vertices = vec![Vector::zeros(self.dim())];
        for phase in 0..=last {
            vertices.extend(self.phase_path(phase).vertices()[1..].iter().cloned());
        }
        PolylineCurve::open(vertices).expect("non-empty path")
    }

    /// Walks the phases in order until the path first meets `target`.
    pub fn simulate_search(&self, target: &Hyperplane) -> Result<SearchTranscript> {
        target.normal().check_dim(self.dim())?;
        let rho = target.offset();
        let origin = Vector::zeros(self.dim());
        if target.contains(&origin) {
            return Ok(SearchTranscript {
                target: target.clone(),
                traversed_length: 0.0,
                hit_point: origin,
                phase: 0,
                ratio: 0.0,
            });
        }
        let mut walked = 0.0;
        for phase in 0..self.max_phases {
            let path = self.phase_path(phase);
            if let Some(hit) = first_hit(&path, target) {
                let traversed_length = walked + hit.arc_length;
                return Ok(SearchTranscript {
                    target: target.clone(),
                    traversed_length,
                    hit_point: hit.point,
                    phase,
                    ratio: traversed_length / rho,
                });
            }
            walked += path.length();
        }
        Err(Error::NoHit {
            phases: self.max_phases,
        })
    }

    /// [`simulate_search`](Self::simulate_search) over many targets in
    /// parallel; results keep the input order.
    pub fn simulate_many(&self, targets: &[Hyperplane]) -> Result<Vec<SearchTranscript>> {
        targets
            .par_iter()
            .map(|h| self.simulate_search(h))
            .collect()
    }
}

/// Free-function form of [`DoublingStrategy::simulate_search`].
pub fn simulate_search(
    strategy: &DoublingStrategy,
    target: &Hyperplane,
) -> Result<SearchTranscript> {
    strategy.simulate_search(target)
}

/// `12ℓ·ρ + 3ℓ`, the cost bound of the doubling strategy.
pub fn envelope_bound(rho: f64, base_length: f64) -> f64 {
    12.0 * base_length * rho + 3.0 * base_length
}

pub fn within_envelope(transcript: &SearchTranscript, base_length: f64) -> bool {
    transcript.traversed_length <= envelope_bound(transcript.target.offset(), base_length)
}

/// Whether every transcript satisfies `traversed ≤ 12ℓ·ρ + 3ℓ`.
pub fn check_envelope(transcripts: &[SearchTranscript], base_length: f64) -> bool {
    transcripts.iter().all(|t| within_envelope(t, base_length))
}

/// Arc length after which `path` has met every hyperplane `⟨u, x⟩ = radius`
/// for the given directions: the largest of the first-hit arc lengths.
pub fn inspection_prefix_length(
    path: &PolylineCurve,
    radius: f64,
    directions: &[UnitDirection],
) -> Result<f64> {
    if directions.is_empty() {
        return Err(Error::InvalidParameter("no directions supplied".into()));
    }
    let hits: Vec<Option<f64>> = directions
        .par_iter()
        .map(|u| {
            let plane = Hyperplane::tangent(u, radius).ok()?;
            first_hit(path, &plane).map(|h| h.arc_length)
        })
        .collect();
    hits.into_iter()
        .enumerate()
        .try_fold(0.0f64, |acc, (index, hit)| match hit {
            Some(s) => Ok(acc.max(s)),
            None => Err(Error::PathNotCompetitive { index }),
        })
}

/// Turns a search path from the origin into an open curve that sees every
/// supplied direction on the unit sphere.
///
/// The path prefix that meets all tangent hyperplanes of the sphere of
/// radius `α/ε` (one per direction) is scaled by `ε/α`; each hit scales onto
/// the tangent hyperplane of the unit sphere at that direction and so sees
/// it. If the path is `c`-competitive with additive constant `α`, the result
/// has length at most `c + ε`.
pub fn extract_inspection_curve(
    path: &PolylineCurve,
    competitive_ratio: f64,
    additive: f64,
    epsilon: f64,
    directions: &[UnitDirection],
) -> Result<PolylineCurve> {
    for (name, value) in [
        ("competitive ratio", competitive_ratio),
        ("additive constant", additive),
        ("epsilon", epsilon),
    ] {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "{name} must be positive, got {value}"
            )));
        }
    }
    if path.start().norm() > EPS_GEO {
        return Err(Error::InvalidCurve(
            "search path must start at the origin".into(),
        ));
    }
    let radius = additive / epsilon;
    let prefix = inspection_prefix_length(path, radius, directions)?;
    Ok(path.prefix(prefix)?.scaled(epsilon / additive))
}
