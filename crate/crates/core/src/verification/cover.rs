use crate::error::{Error, Result};
use crate::geometry::{UnitDirection, Vector};
use crate::sampling::{sample_unit_direction, seeded_rng};
use crate::tolerance::REFUTE_TOL;

/// The open hemisphere `{x ∈ S^{d−1} : ⟨pole, x⟩ > 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hemisphere {
    pub pole: UnitDirection,
}

impl Hemisphere {
    pub fn new(pole: UnitDirection) -> Self {
        Hemisphere { pole }
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.pole.dot(x) > 0.0
    }
}

/// `d + 1` hemispheres covering `S^{d−1}`, with poles at the vertex
/// directions of a regular simplex (pairwise inner product `−1/d`).
///
/// The poles are the standard basis of `ℝ^{d+1}` projected onto the
/// hyperplane orthogonal to `(1, …, 1)`, written in the Helmert basis
/// `h_k = (1, …, 1, −k, 0, …, 0)/√(k(k+1))` of that hyperplane.
pub fn simplex_cover(dim: usize) -> Result<Vec<Hemisphere>> {
    if dim < 1 {
        return Err(Error::DimensionTooSmall { dim, min: 1 });
    }
    (0..=dim)
        .map(|i| {
            let coords: Vec<f64> = (1..=dim)
                .map(|k| {
                    let kf = k as f64;
                    let norm = (kf * (kf + 1.0)).sqrt();
                    match i.cmp(&k) {
                        std::cmp::Ordering::Less => 1.0 / norm,
                        std::cmp::Ordering::Equal => -kf / norm,
                        std::cmp::Ordering::Greater => 0.0,
                    }
                })
                .collect();
            let pole = UnitDirection::normalize(&Vector::new(coords)?)?;
            Ok(Hemisphere::new(pole))
        })
        .collect()
}

/// Tuning for [`refute_cover_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefuteConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    /// Improvements of `max_i ⟨pole_i, x⟩` below this count as stalls, and
    /// a restart ends once its step level gap shrinks below it.
    pub min_improvement: f64,
    /// Stalled iterations before the step level gap is halved.
    pub patience: usize,
    /// A restart stops early once it reaches `−target_margin`.
    pub target_margin: f64,
    pub seed: u64,
}

impl Default for RefuteConfig {
    fn default() -> Self {
        RefuteConfig {
            restarts: 32,
            max_iterations: 4000,
            min_improvement: 1e-12,
            patience: 20,
            target_margin: 1e-2,
            seed: 0x5eed_c0fe,
        }
    }
}

fn max_dot(poles: &[UnitDirection], x: &Vector) -> (usize, f64) {
    poles.iter().enumerate().map(|(i, p)| (i, p.dot(x))).fold(
        (0, f64::NEG_INFINITY),
        |best, cur| if cur.1 > best.1 { cur } else { best },
    )
}

/// Searches for a point covered by none of the open hemispheres with the
/// given poles, i.e. a unit `x` with `max_i ⟨pole_i, x⟩ ≤ REFUTE_TOL`.
///
/// At most `d` poles never cover the sphere, so a witness exists for them.
/// With more poles the result may be `None`.
pub fn refute_cover(poles: &[UnitDirection]) -> Result<Option<UnitDirection>> {
    refute_cover_with(poles, &RefuteConfig::default())
}

/// [`refute_cover`] with explicit tuning.
///
/// Minimizes `F(x) = max_i ⟨pole_i, x⟩` over the sphere by projected
/// subgradient descent. The subgradient at `x` is the active pole; the
/// step length follows the Polyak rule towards an adaptive level below the
/// best value so far, and the iterate is projected back onto the sphere by
/// normalization.
/// Restarts begin at the least-norm solution of `⟨pole_i, x⟩ = −1` when the
/// poles are linearly independent (already a witness once normalized), then
/// at the negated pole mean, then at random directions.
pub fn refute_cover_with(
    poles: &[UnitDirection],
    config: &RefuteConfig,
) -> Result<Option<UnitDirection>> {
    let first = poles.first().ok_or(Error::EmptySet)?;
    let dim = first.dim();
    for p in &poles[1..] {
        p.check_dim(dim)?;
    }

    let mut rng = seeded_rng(config.seed);
    let mut starts = Vec::with_capacity(config.restarts + 2);
    if let Some(x) = equal_descent(poles) {
        starts.push(x);
    }
    let mean = poles
        .iter()
        .fold(Vector::zeros(dim), |acc, p| acc.add_scaled(1.0, p));
    if let Ok(u) = UnitDirection::normalize(&-&mean) {
        starts.push(u.into_vector());
    }
    while starts.len() < config.restarts.max(1) {
        starts.push(sample_unit_direction(&mut rng, dim).into_vector());
    }

    let target = -config.target_margin;
    let mut best: Option<(f64, Vector)> = None;
    for start in starts {
        let (value, x) = descend(poles, start, config);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, x));
        }
        if value <= target {
            break;
        }
    }

    let (value, x) = best.expect("at least one restart");
    if value <= REFUTE_TOL {
        Ok(Some(UnitDirection::normalize(&x)?))
    } else {
        Ok(None)
    }
}

/// `x = Pᵀy` with `(PPᵀ)y = −1`, normalized; `None` if the Gram matrix is
/// numerically singular.
fn equal_descent(poles: &[UnitDirection]) -> Option<Vector> {
    let k = poles.len();
    if k > poles[0].dim() {
        return None;
    }
    let mut gram: Vec<Vec<f64>> = poles
        .iter()
        .map(|a| poles.iter().map(|b| a.dot(b)).collect())
        .collect();
    let mut y = vec![-1.0; k];
    // Gaussian elimination with partial pivoting.
    for col in 0..k {
        let pivot = (col..k).max_by(|&a, &b| gram[a][col].abs().total_cmp(&gram[b][col].abs()))?;
        if gram[pivot][col].abs() < 1e-12 {
            return None;
        }
        gram.swap(col, pivot);
        y.swap(col, pivot);
        for row in col + 1..k {
            let f = gram[row][col] / gram[col][col];
            let (upper, lower) = gram.split_at_mut(row);
            for (r, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *r -= f * p;
            }
            y[row] -= f * y[col];
        }
    }
    for row in (0..k).rev() {
        let tail: f64 = (row + 1..k).map(|c| gram[row][c] * y[c]).sum();
        y[row] = (y[row] - tail) / gram[row][row];
    }
    let x = poles
        .iter()
        .zip(&y)
        .fold(Vector::zeros(poles[0].dim()), |acc, (p, c)| {
            acc.add_scaled(*c, p)
        });
    UnitDirection::normalize(&x)
        .ok()
        .map(UnitDirection::into_vector)
}

fn descend(poles: &[UnitDirection], mut x: Vector, config: &RefuteConfig) -> (f64, Vector) {
    let goal = -config.target_margin;
    let (_, mut value) = max_dot(poles, &x);
    let mut best = (value, x.clone());
    // Polyak steps aim at `best − gap`; the gap halves whenever progress
    // stalls, so the level tracks the unknown optimum from above and below.
    let mut gap = config.target_margin;
    let mut stalled = 0;
    for _ in 0..config.max_iterations {
        if best.0 <= goal || gap < config.min_improvement {
            break;
        }
        let (active, current) = max_dot(poles, &x);
        value = current;
        let g = &poles[active];
        // Tangential part of the subgradient.
        let tangent = g.add_scaled(-g.dot(&x), &x);
        let tn = tangent.norm_squared();
        if tn < 1e-30 {
            // x = −g is a minimum of F; x = +g is a maximum, leave it.
            if value < 0.0 {
                break;
            }
            let nudge = Vector::axis(x.dim(), (active + 1) % x.dim(), 1e-3);
            x = UnitDirection::normalize(&(&x + &nudge)).map_or(x, UnitDirection::into_vector);
            continue;
        }
        let level = best.0.min(value) - gap;
        let step = (value - level) / tn;
        let Ok(next) = UnitDirection::normalize(&x.add_scaled(-step, &tangent)) else {
            break;
        };
        x = next.into_vector();
        let (_, next_value) = max_dot(poles, &x);
        if next_value < best.0 - config.min_improvement {
            best = (next_value, x.clone());
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= config.patience {
                gap *= 0.5;
                stalled = 0;
                x = best.1.clone();
            }
        }
    }
    best
}
