//! Seeded Monte Carlo harness: sample, decode, aggregate, emit CSV.
//!
//! Each trial draws from its own RNG substream keyed by `(seed, trial)`, so
//! results are independent of evaluation order and identical runs produce
//! byte-identical CSV. Trials always consume the same number of noise draws
//! regardless of `sigma_m`, which keeps errors aligned across a measurement
//! noise sweep.

use crate::channel::{sample_error, standard_normals, ErrorModel, MeasurementNoise, ShiftError};
use crate::code::{LogicalBasis, StabilizerCode};
use crate::decode::{
    evaluate_correction, DecodeResult, MinNormDecoder, SingleModeDecoder, Syndrome,
};
use crate::error::{Error, Result};
use crate::numfmt::sig12;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::{self, Write};
use std::time::{Duration, Instant};

/// Which decoder the harness should run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoderKind {
    MinNorm,
    SingleMode,
}

impl std::str::FromStr for DecoderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min-norm" => Ok(DecoderKind::MinNorm),
            "single-mode" => Ok(DecoderKind::SingleMode),
            other => Err(Error::InvalidParameter(format!(
                "unknown decoder `{other}` (expected min-norm or single-mode)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SimConfig {
    pub decoder: DecoderKind,
    pub noise: MeasurementNoise,
    pub trials: u64,
    pub seed: u64,
    /// Success tolerance on the largest absolute logical displacement.
    pub tolerance: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            decoder: DecoderKind::SingleMode,
            noise: MeasurementNoise::noiseless(),
            trials: 10_000,
            seed: 0,
            tolerance: 1e-9,
        }
    }
}

/// Everything observed in one trial.
#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub trial: u64,
    pub error: ShiftError,
    /// Syndrome after measurement noise.
    pub syndrome: Vec<f64>,
    pub result: DecodeResult,
}

/// Aggregate statistics over a run.
#[derive(Clone, Debug)]
pub struct SimSummary {
    pub trials: u64,
    pub successes: u64,
    pub failure_rate: f64,
    /// Largest absolute logical displacement component over all trials.
    pub max_logical_disp: f64,
    /// Root mean square of the per-trial logical displacement norm.
    pub rms_logical_disp: f64,
    pub wall_time: Duration,
}

impl SimSummary {
    pub fn failures(&self) -> u64 {
        self.trials - self.successes
    }
}

/// Run the Monte Carlo loop. When `log` is given, per-trial records are
/// appended to it.
pub fn run_trials(
    code: &StabilizerCode,
    basis: &LogicalBasis,
    model: &ErrorModel,
    cfg: &SimConfig,
    mut log: Option<&mut Vec<TrialRecord>>,
) -> Result<SimSummary> {
    if cfg.trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if !(cfg.tolerance.is_finite() && cfg.tolerance >= 0.0) {
        return Err(Error::InvalidParameter(
            "tolerance must be finite and nonnegative".into(),
        ));
    }
    model.validate_for(code.n())?;
    if basis.logical_modes() != code.logical_modes() {
        return Err(Error::InvalidLogicalBasis(format!(
            "basis has {} pairs for a code with {} logical modes",
            basis.logical_modes(),
            code.logical_modes()
        )));
    }

    let min_norm = MinNormDecoder::new(code);
    let single_mode = SingleModeDecoder::new(code);
    let started = Instant::now();

    let mut successes = 0u64;
    let mut max_disp = 0.0f64;
    let mut sum_sq_norm = 0.0f64;
    for trial in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(trial);
        let error = sample_error(model, code.n(), &mut rng);
        let clean = crate::decode::syndrome(code, &error)?;
        // Noise draws happen even at sigma_m = 0 so the stream layout does
        // not depend on the noise level.
        let noise = standard_normals(code.k(), &mut rng);
        let noisy: Vec<f64> = clean
            .values()
            .iter()
            .zip(&noise)
            .map(|(v, z)| v + cfg.noise.sigma_m * z)
            .collect();
        let syndrome = Syndrome::new(code, noisy.clone())?;

        let correction = match cfg.decoder {
            DecoderKind::MinNorm => min_norm.decode(&syndrome)?,
            DecoderKind::SingleMode => single_mode.decode(&syndrome, cfg.tolerance)?.correction,
        };
        let result = evaluate_correction(code, basis, &error, correction, cfg.tolerance)?;

        if result.success {
            successes += 1;
        }
        let mut norm_sq = 0.0;
        for &x in &result.logical_displacement {
            max_disp = max_disp.max(x.abs());
            norm_sq += x * x;
        }
        sum_sq_norm += norm_sq;
        if let Some(log) = log.as_deref_mut() {
            log.push(TrialRecord {
                trial,
                error,
                syndrome: noisy,
                result,
            });
        }
    }

    Ok(SimSummary {
        trials: cfg.trials,
        successes,
        failure_rate: (cfg.trials - successes) as f64 / cfg.trials as f64,
        max_logical_disp: max_disp,
        rms_logical_disp: (sum_sq_norm / cfg.trials as f64).sqrt(),
        wall_time: started.elapsed(),
    })
}

/// What a sweep varies.
#[derive(Clone, Debug)]
pub enum SweepGrid {
    /// Vary the error model scale, keeping `sigma_m` fixed.
    ModelSigma(Vec<f64>),
    /// Vary the measurement noise, keeping the model fixed.
    MeasurementSigma(Vec<f64>),
}

impl SweepGrid {
    pub fn is_empty(&self) -> bool {
        match self {
            SweepGrid::ModelSigma(g) | SweepGrid::MeasurementSigma(g) => g.is_empty(),
        }
    }
}

/// One summary per grid point, all with the same seed.
pub fn sweep(
    code: &StabilizerCode,
    basis: &LogicalBasis,
    model: &ErrorModel,
    grid: &SweepGrid,
    cfg: &SimConfig,
) -> Result<Vec<(f64, SimSummary)>> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("sweep grid is empty".into()));
    }
    let mut rows = Vec::new();
    match grid {
        SweepGrid::ModelSigma(points) => {
            for &sigma in points {
                let m = model.with_sigma(sigma)?;
                m.validate_for(code.n())?;
                rows.push((sigma, run_trials(code, basis, &m, cfg, None)?));
            }
        }
        SweepGrid::MeasurementSigma(points) => {
            for &sigma_m in points {
                let mut point_cfg = *cfg;
                point_cfg.noise = MeasurementNoise::new(sigma_m)?;
                rows.push((sigma_m, run_trials(code, basis, model, &point_cfg, None)?));
            }
        }
    }
    Ok(rows)
}

pub const SUMMARY_CSV_HEADER: &str =
    "param,trials,failures,failure_rate,max_logical_disp,rms_logical_disp,seed";

/// Write summary rows in the fixed schema. Floats are 12-significant-digit
/// decimals with a `.` decimal point.
pub fn write_summary_csv<W: Write>(
    out: &mut W,
    rows: &[(f64, &SimSummary)],
    seed: u64,
) -> io::Result<()> {
    writeln!(out, "{SUMMARY_CSV_HEADER}")?;
    for (param, s) in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            sig12(*param),
            s.trials,
            s.failures(),
            sig12(s.failure_rate),
            sig12(s.max_logical_disp),
            sig12(s.rms_logical_disp),
            seed
        )?;
    }
    Ok(())
}

/// Per-trial CSV; vector fields are space-joined inside one column.
pub fn write_trials_csv<W: Write>(out: &mut W, records: &[TrialRecord]) -> io::Result<()> {
    writeln!(
        out,
        "trial,success,max_logical_disp,error,syndrome,correction,logical_disp"
    )?;
    let join = |xs: &[f64]| xs.iter().map(|&x| sig12(x)).collect::<Vec<_>>().join(" ");
    let shift = |e: &ShiftError| {
        let mut v = e.s().to_vec();
        v.extend_from_slice(e.t());
        join(&v)
    };
    for r in records {
        let max_disp = r
            .result
            .logical_displacement
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()));
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.trial,
            r.result.success,
            sig12(max_disp),
            shift(&r.error),
            join(&r.syndrome),
            shift(&r.result.correction),
            join(&r.result.logical_displacement)
        )?;
    }
    Ok(())
}
