//! The subcommands. Each writes a plain-text report to `out` and returns
//! whether the checked property held.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::Args;
use sphere_search::sampling::probe_directions;
use sphere_search::strategy::within_envelope;
use sphere_search::tour::build_tour;
use sphere_search::verification::compare_on;
use sphere_search::{
    build_doubling_strategy, build_inspection_tour, envelope_bound, hamiltonian_cycle,
    inspection_tour_length, refute_cover, sample_unit_direction, seeded_rng, simplex_cover,
    support, CrossPolytopeSpec, Hyperplane, UnitDirection, Vector,
};

use crate::error::CliError;
use crate::files::{CurveFile, PoleFile};
use crate::sweep::{float, run_sweep, SweepConfig};

/// Pass maps to exit code 0, Fail to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn coords(v: &Vector) -> String {
    v.coords()
        .iter()
        .map(|&c| float(c))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, Args)]
pub struct TourArgs {
    #[arg(long)]
    pub dim: usize,
    /// Vertex distance from the origin [default: sqrt(dim)]
    #[arg(long)]
    pub scale: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
}

/// Writes the cross-polytope tour and compares its length with `2d·s·√2`,
/// which is `(2d)^{3/2}` at the default scale.
pub fn cmd_tour(args: &TourArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let d = args.dim;
    if d < 2 {
        return Err(CliError::usage(format!(
            "--dim must be at least 2, got {d}"
        )));
    }
    let spec = match args.scale {
        Some(s) => CrossPolytopeSpec::with_scale(d, s),
        None => CrossPolytopeSpec::inspecting(d),
    };
    let tour = build_tour(&spec, &hamiltonian_cycle(d)?)?;
    CurveFile::from_curve(&tour).write(&args.out)?;
    let length = tour.length();
    let analytic = match args.scale {
        Some(s) => 2.0 * d as f64 * s * std::f64::consts::SQRT_2,
        None => inspection_tour_length(d),
    };
    writeln!(out, "vertices: {}", tour.vertices().len())?;
    writeln!(out, "length: {}", float(length))?;
    writeln!(out, "analytic: {}", float(analytic))?;
    writeln!(out, "difference: {}", float(length - analytic))?;
    Ok(Outcome::Pass)
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub curve: PathBuf,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge halvings applied to the curve before checking
    #[arg(long, default_value_t = 2)]
    pub subdivide: u32,
}

/// Checks on one probe set that the curve's points see every direction and
/// that their hull contains the sphere, and that both checks agree.
pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    if args.samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    let curve = CurveFile::read(&args.curve)?;
    let points = curve.subdivided_vertices(args.subdivide);
    let mut rng = seeded_rng(args.seed);
    let probes = probe_directions(&mut rng, curve.dim(), args.samples, curve.vertices());
    let a = compare_on(&points, &probes)?;
    writeln!(out, "dim: {}", curve.dim())?;
    writeln!(out, "points: {}", points.len())?;
    writeln!(out, "probes: {}", probes.len())?;
    writeln!(out, "sees all: {}", a.sees_all.covered)?;
    writeln!(out, "hull contains sphere: {}", a.hull_contains.covered)?;
    writeln!(out, "agree: {}", a.agree())?;
    if let Some(w) = a
        .sees_all
        .witness
        .as_ref()
        .or(a.hull_contains.witness.as_ref())
    {
        writeln!(out, "witness: {}", coords(w))?;
        writeln!(out, "witness support: {}", float(support(&points, w)))?;
    }
    Ok(Outcome::from_bool(a.agree() && a.sees_all.covered))
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub trials: usize,
    #[arg(long, default_value_t = 0.1)]
    pub rho_min: f64,
    #[arg(long, default_value_t = 100.0)]
    pub rho_max: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

impl SweepArgs {
    pub fn config(&self) -> SweepConfig {
        SweepConfig {
            dim: self.dim,
            trials: self.trials,
            rho_min: self.rho_min,
            rho_max: self.rho_max,
            seed: self.seed,
        }
    }
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let result = run_sweep(&args.config())?;
    let file = File::create(&args.out).map_err(|source| CliError::Io {
        path: args.out.clone(),
        source,
    })?;
    result.write_csv(BufWriter::new(file))?;
    let l = result.base_length;
    let ok = result.envelope_ok();
    writeln!(out, "rows: {}", result.rows.len())?;
    writeln!(out, "tour length: {}", float(l))?;
    writeln!(out, "max ratio: {}", float(result.max_ratio()))?;
    writeln!(
        out,
        "ratio bound: {}",
        float(12.0 * l + 3.0 * l / args.rho_min)
    )?;
    writeln!(out, "envelope: {}", verdict(ok))?;
    Ok(Outcome::from_bool(ok))
}

#[derive(Debug, Clone, Args)]
pub struct CoverArgs {
    #[arg(long)]
    pub dim: usize,
    /// Pole file to search for an uncovered point
    #[arg(long)]
    pub refute: Option<PathBuf>,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn cmd_cover(args: &CoverArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let d = args.dim;
    if d < 1 {
        return Err(CliError::usage("--dim must be at least 1"));
    }
    match &args.refute {
        Some(path) => refute(d, path, out),
        None => simplex(d, args.samples, args.seed, out),
    }
}

fn simplex(d: usize, samples: usize, seed: u64, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let cover = simplex_cover(d)?;
    for (i, h) in cover.iter().enumerate() {
        writeln!(out, "pole {i}: {}", coords(&h.pole))?;
    }
    let target = -1.0 / d as f64;
    let mut deviation: f64 = 0.0;
    for (i, a) in cover.iter().enumerate() {
        for b in &cover[i + 1..] {
            deviation = deviation.max((a.pole.dot(&b.pole) - target).abs());
        }
    }
    writeln!(out, "pairwise dot deviation: {}", float(deviation))?;
    let mut rng = seeded_rng(seed);
    let uncovered = (0..samples)
        .map(|_| sample_unit_direction(&mut rng, d))
        .filter(|x| !cover.iter().any(|h| h.contains(x)))
        .count();
    writeln!(out, "uncovered samples: {uncovered} of {samples}")?;
    let ok = uncovered == 0 && deviation <= 1e-12;
    writeln!(out, "coverage: {}", verdict(ok))?;
    Ok(Outcome::from_bool(ok))
}

fn refute(d: usize, path: &std::path::Path, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let poles = PoleFile::read(path)?;
    if poles[0].dim() != d {
        return Err(CliError::usage(format!(
            "pole file has dimension {}, --dim is {d}",
            poles[0].dim()
        )));
    }
    writeln!(out, "poles: {}", poles.len())?;
    match refute_cover(&poles)? {
        Some(w) => {
            let max_dot = poles
                .iter()
                .map(|p| p.dot(&w))
                .fold(f64::NEG_INFINITY, f64::max);
            writeln!(out, "witness: {}", coords(&w))?;
            writeln!(out, "max dot: {}", float(max_dot))?;
            Ok(Outcome::Pass)
        }
        None if poles.len() > d => {
            writeln!(out, "no witness found (expected for a covering set)")?;
            Ok(Outcome::Pass)
        }
        None => {
            // At most d open hemispheres never cover the sphere.
            writeln!(out, "no witness found")?;
            Ok(Outcome::Fail)
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub dim: usize,
    /// Comma-separated normal; normalized before use
    #[arg(long, allow_hyphen_values = true)]
    pub normal: String,
    #[arg(long, allow_hyphen_values = true)]
    pub rho: f64,
}

pub fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let d = args.dim;
    if d < 2 {
        return Err(CliError::usage(format!(
            "--dim must be at least 2, got {d}"
        )));
    }
    let normal = args
        .normal
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::usage(format!("--normal: {e}")))?;
    if normal.len() != d {
        return Err(CliError::usage(format!(
            "--normal has {} coordinates, --dim is {d}",
            normal.len()
        )));
    }
    if !(args.rho >= 0.0 && args.rho.is_finite()) {
        return Err(CliError::usage(format!(
            "--rho must be finite and nonnegative, got {}",
            args.rho
        )));
    }
    let normal = UnitDirection::normalize(&Vector::new(normal)?)?;
    let strategy = build_doubling_strategy(build_inspection_tour(d)?)?;
    let t = strategy.simulate_search(&Hyperplane::new(normal, args.rho)?)?;
    let l = strategy.base_length();
    let ok = within_envelope(&t, l);
    writeln!(out, "phase: {}", t.phase)?;
    writeln!(out, "traversed length: {}", float(t.traversed_length))?;
    writeln!(out, "hit point: {}", coords(&t.hit_point))?;
    writeln!(out, "ratio: {}", float(t.ratio))?;
    writeln!(
        out,
        "envelope bound: {}",
        float(envelope_bound(t.target.offset(), l))
    )?;
    writeln!(out, "envelope: {}", verdict(ok))?;
    Ok(Outcome::from_bool(ok))
}
