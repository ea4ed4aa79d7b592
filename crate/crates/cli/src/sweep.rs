//! Ratio sweeps of the doubling strategy over random hyperplanes.

use std::io::Write;

use rand::Rng;
use sha2::{Digest, Sha256};
use sphere_search::strategy::within_envelope;
use sphere_search::{
    build_doubling_strategy, build_inspection_tour, sample_unit_direction, seeded_rng, Hyperplane,
    SearchTranscript, UnitDirection,
};

use crate::error::CliError;

pub const SWEEP_HEADER: [&str; 8] = [
    "dim",
    "seed",
    "rho",
    "direction_hash",
    "traversed_length",
    "phase",
    "ratio",
    "envelope_ok",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub dim: usize,
    pub trials: usize,
    pub rho_min: f64,
    pub rho_max: f64,
    pub seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.dim < 2 {
            return Err(CliError::usage(format!(
                "--dim must be at least 2, got {}",
                self.dim
            )));
        }
        if self.trials == 0 {
            return Err(CliError::usage("--trials must be at least 1"));
        }
        let (a, b) = (self.rho_min, self.rho_max);
        if !(a.is_finite() && b.is_finite() && 0.0 < a && a <= b) {
            return Err(CliError::usage(format!(
                "need 0 < --rho-min <= --rho-max, got [{a}, {b}]"
            )));
        }
        Ok(())
    }
}

/// One simulated hyperplane.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub dim: usize,
    pub seed: u64,
    pub rho: f64,
    pub direction_hash: String,
    pub traversed_length: f64,
    pub phase: u32,
    pub ratio: f64,
    pub envelope_ok: bool,
}

impl SweepRow {
    fn record(&self) -> [String; 8] {
        [
            self.dim.to_string(),
            self.seed.to_string(),
            float(self.rho),
            self.direction_hash.clone(),
            float(self.traversed_length),
            self.phase.to_string(),
            float(self.ratio),
            self.envelope_ok.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    /// Length `ℓ` of the base tour.
    pub base_length: f64,
}

impl SweepResult {
    pub fn max_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(0.0, f64::max)
    }

    pub fn envelope_ok(&self) -> bool {
        self.rows.iter().all(|r| r.envelope_ok)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(SWEEP_HEADER)?;
        for row in &self.rows {
            w.write_record(row.record())?;
        }
        w.flush()?;
        Ok(())
    }
}

/// 17 significant digits, enough to recover the exact double.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

/// First 16 hex digits of SHA-256 over the little-endian coordinate bits.
pub fn direction_hash(u: &UnitDirection) -> String {
    let mut hasher = Sha256::new();
    for c in u.coords() {
        hasher.update(c.to_bits().to_le_bytes());
    }
    hasher.finalize()[..8]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Targets are drawn sequentially from one seeded stream and simulated in
/// parallel, so rows come out in trial order whatever the thread count.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult, CliError> {
    config.validate()?;
    let strategy = build_doubling_strategy(build_inspection_tour(config.dim)?)?;
    let mut rng = seeded_rng(config.seed);
    let (lo, hi) = (config.rho_min.ln(), config.rho_max.ln());
    let targets = (0..config.trials)
        .map(|_| {
            let normal = sample_unit_direction(&mut rng, config.dim);
            let rho = if lo < hi {
                rng.random_range(lo..hi).exp()
            } else {
                config.rho_min
            };
            Hyperplane::new(normal, rho)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let transcripts = strategy.simulate_many(&targets)?;
    let base_length = strategy.base_length();
    let rows = transcripts
        .iter()
        .map(|t| row(config, t, base_length))
        .collect();
    Ok(SweepResult { rows, base_length })
}

fn row(config: &SweepConfig, t: &SearchTranscript, base_length: f64) -> SweepRow {
    SweepRow {
        dim: config.dim,
        seed: config.seed,
        rho: t.target.offset(),
        direction_hash: direction_hash(t.target.normal()),
        traversed_length: t.traversed_length,
        phase: t.phase,
        ratio: t.ratio,
        envelope_ok: within_envelope(t, base_length),
    }
}
