use rand::Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::geometry::{sees_unchecked, support, PolylineCurve, UnitDirection, Vector};
use crate::sampling::probe_directions;
use crate::tolerance::EPS_GEO;

/// Tuning for [`find_uncovered_witness_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessConfig {
    /// Midpoint subdivision depth per edge (`2^depth` pieces).
    pub subdivision_depth: u32,
    /// Number of most promising probes refined by gradient ascent.
    pub restarts: usize,
    pub iterations: usize,
    /// Initial step; iteration `k` uses `step / √k`.
    pub step: f64,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig {
            subdivision_depth: 6,
            restarts: 32,
            iterations: 200,
            step: 0.1,
        }
    }
}

/// Searches for a sphere point that `curve` does not see.
pub fn find_uncovered_witness<R: Rng + ?Sized>(
    curve: &PolylineCurve,
    samples: usize,
    rng: &mut R,
) -> Result<Option<UnitDirection>> {
    find_uncovered_witness_with(curve, samples, rng, &WitnessConfig::default())
}

/// Probes sampled and structured directions against the subdivided curve,
/// then refines the probes with the largest gap `g(u) = 1 − h(u)` by
/// projected gradient ascent on the sphere. A candidate is returned only if
/// no subdivided curve point sees it.
pub fn find_uncovered_witness_with<R: Rng + ?Sized>(
    curve: &PolylineCurve,
    samples: usize,
    rng: &mut R,
    config: &WitnessConfig,
) -> Result<Option<UnitDirection>> {
    let dim = curve.dim();
    let points = curve.subdivided_vertices(config.subdivision_depth);
    let probes = probe_directions(rng, dim, samples, curve.vertices());

    let gaps: Vec<f64> = probes
        .par_iter()
        .map(|u| 1.0 - support(&points, u))
        .collect();
    let mut ranked: Vec<usize> = (0..probes.len()).collect();
    ranked.sort_by(|&a, &b| gaps[b].total_cmp(&gaps[a]).then(a.cmp(&b)));
    ranked.truncate(config.restarts.max(1));

    let refined: Vec<(f64, Vector)> = ranked
        .par_iter()
        .map(|&i| ascend(&points, probes[i].as_vector().clone(), config))
        .collect();

    let best = refined
        .into_iter()
        .chain(
            ranked
                .first()
                .map(|&i| (gaps[i], probes[i].as_vector().clone())),
        )
        .fold(None::<(f64, Vector)>, |best, cur| match best {
            Some(b) if b.0 >= cur.0 => Some(b),
            _ => Some(cur),
        });

    let Some((gap, u)) = best else {
        return Ok(None);
    };
    if gap <= EPS_GEO {
        return Ok(None);
    }
    let u = UnitDirection::normalize(&u)?;
    if points.iter().any(|p| sees_unchecked(p, &u)) {
        return Ok(None);
    }
    Ok(Some(u))
}

fn ascend(points: &[Vector], mut u: Vector, config: &WitnessConfig) -> (f64, Vector) {
    let argmax = |u: &Vector| {
        points
            .iter()
            .map(|p| p.dot(u))
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |b, c| if c.1 > b.1 { c } else { b })
    };
    let (mut active, h) = argmax(&u);
    let mut best = (1.0 - h, u.clone());
    for k in 1..=config.iterations {
        // ∇g = −p_active; step against it, then back onto the sphere.
        let step = config.step / (k as f64).sqrt();
        let next = u.add_scaled(-step, &points[active]);
        let Ok(next) = UnitDirection::normalize(&next) else {
            break;
        };
        u = next.into_vector();
        let (a, h) = argmax(&u);
        active = a;
        if 1.0 - h > best.0 {
            best = (1.0 - h, u.clone());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::sees;
    use crate::sampling::seeded_rng;
    use crate::tour::build_inspection_tour;

    #[test]
    fn tour_has_no_witness() {
        for d in 2..=4 {
            let tour = build_inspection_tour(d).unwrap();
            assert_eq!(
                find_uncovered_witness(&tour, 5000, &mut seeded_rng(1)).unwrap(),
                None
            );
        }
    }

    #[test]
    fn shrunk_tour_witness_near_diagonal() {
        let d = 3;
        let tour = build_inspection_tour(d).unwrap().scaled(0.99);
        let w = find_uncovered_witness(&tour, 5000, &mut seeded_rng(2))
            .unwrap()
            .expect("shrunk tour misses the diagonals");
        for v in tour.vertices() {
            assert!(!sees(v, &w).unwrap());
        }
        let s = 1.0 / (d as f64).sqrt();
        assert!(
            w.coords().iter().all(|c| (c.abs() - s).abs() < 0.05),
            "{w:?}"
        );
    }

    #[test]
    fn flat_segment_has_witness() {
        let seg = PolylineCurve::open(vec![
            Vector::new(vec![-2.0, 0.0]).unwrap(),
            Vector::new(vec![2.0, 0.0]).unwrap(),
        ])
        .unwrap();
        let w = find_uncovered_witness(&seg, 1000, &mut seeded_rng(3))
            .unwrap()
            .unwrap();
        assert!(!sees(&Vector::new(vec![-2.0, 0.0]).unwrap(), &w).unwrap());
        assert!(!sees(&Vector::new(vec![2.0, 0.0]).unwrap(), &w).unwrap());
    }
}
