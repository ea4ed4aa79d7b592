//! Seeded sampling of sphere directions and the structured probe sets used
//! by the sampling-based checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::geometry::{UnitDirection, Vector};

/// The deterministic generator used throughout the crate.
pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Largest dimension for which all `2^d` sign diagonals are probed.
pub const MAX_DIAGONAL_DIM: usize = 12;

/// A direction uniform on `S^{dim−1}`: a normalized vector of independent
/// standard normals. An all-zero draw is redrawn.
pub fn sample_unit_direction<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> UnitDirection {
    loop {
        let coords: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let v = Vector::new(coords).expect("normal samples are finite");
        if let Ok(u) = UnitDirection::normalize(&v) {
            return u;
        }
    }
}

pub fn sample_unit_directions<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    count: usize,
) -> Vec<UnitDirection> {
    (0..count)
        .map(|_| sample_unit_direction(rng, dim))
        .collect()
}

/// Directions where support-function minima of structured point sets sit:
/// all `±e_i`, all `(±1, …, ±1)/√d` for `d ≤ MAX_DIAGONAL_DIM`, and the
/// normalized nonzero `extra` points.
pub fn structured_directions(dim: usize, extra: &[Vector]) -> Vec<UnitDirection> {
    let mut out = Vec::new();
    for i in 0..dim {
        out.push(UnitDirection::axis(dim, i, true));
        out.push(UnitDirection::axis(dim, i, false));
    }
    if dim <= MAX_DIAGONAL_DIM {
        let s = 1.0 / (dim as f64).sqrt();
        for mask in 0u32..(1 << dim) {
            let coords = (0..dim)
                .map(|i| if mask & (1 << i) == 0 { s } else { -s })
                .collect();
            out.push(UnitDirection::normalize(&Vector::new(coords).unwrap()).unwrap());
        }
    }
    out.extend(
        extra
            .iter()
            .filter_map(|v| UnitDirection::normalize(v).ok()),
    );
    out
}

/// `samples` uniform directions followed by the structured directions.
pub fn probe_directions<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    samples: usize,
    extra: &[Vector],
) -> Vec<UnitDirection> {
    let mut out = sample_unit_directions(rng, dim, samples);
    out.extend(structured_directions(dim, extra));
    out
}

/// A random orthogonal map of `ℝ^d` (Gram–Schmidt on Gaussian columns).
#[derive(Debug, Clone)]
pub struct OrthogonalMap {
    rows: Vec<Vector>,
}

impl OrthogonalMap {
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Self {
        loop {
            let mut basis: Vec<Vector> = Vec::with_capacity(dim);
            for _ in 0..dim {
                let mut v = sample_unit_direction(rng, dim).into_vector();
                for b in &basis {
                    v = v.add_scaled(-v.dot(b), b);
                }
                match UnitDirection::normalize(&v) {
                    Ok(u) if v.norm() > 1e-6 => basis.push(u.into_vector()),
                    _ => break,
                }
            }
            if basis.len() == dim {
                return OrthogonalMap { rows: basis };
            }
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector::new(self.rows.iter().map(|r| r.dot(v)).collect()).expect("finite")
    }

    pub fn apply_direction(&self, u: &UnitDirection) -> UnitDirection {
        UnitDirection::normalize(&self.apply(u)).expect("orthogonal maps preserve norm")
    }
}
