//! Seeded inputs shared by the benchmarks in `benches/`.

use sphere_search::sampling::sample_unit_directions;
use sphere_search::{sample_unit_direction, seeded_rng, Hyperplane, UnitDirection};

/// `count` hyperplanes with uniform normals and offsets log-spaced in `[0.1, 100]`.
pub fn targets(dim: usize, count: usize, seed: u64) -> Vec<Hyperplane> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|i| {
            let t = i as f64 / count.max(2).saturating_sub(1) as f64;
            let rho = 0.1 * 1000f64.powf(t);
            Hyperplane::new(sample_unit_direction(&mut rng, dim), rho).expect("finite offset")
        })
        .collect()
}

pub fn directions(dim: usize, count: usize, seed: u64) -> Vec<UnitDirection> {
    sample_unit_directions(&mut seeded_rng(seed), dim, count)
}
