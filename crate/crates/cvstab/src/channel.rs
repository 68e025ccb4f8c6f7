//! Shift-error models and syndrome measurement noise.
//!
//! A physical error is a displacement `U(e)` with `e` in `R^{2n}` (floating
//! point). A shift of the position observable `q` by `a` is generated by the
//! momentum quadrature, so it lives in the `s` half of the vector; a shift
//! of `p` lives in the `t` half. Samplers are pure functions of the RNG
//! state that is passed in.

use crate::error::{Error, Result};
use crate::scalar::to_f64;
use crate::symplectic::PauliVector;
use rand::Rng;
use rand_distr::{Distribution, Normal, StandardNormal};

/// A displacement error on `n` modes in `(s | t)` layout.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftError {
    s: Vec<f64>,
    t: Vec<f64>,
}

impl ShiftError {
    pub fn new(s: Vec<f64>, t: Vec<f64>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyVector);
        }
        if s.len() != t.len() {
            return Err(Error::DimensionMismatch(s.len(), t.len()));
        }
        if s.iter().chain(&t).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "shift components must be finite".into(),
            ));
        }
        Ok(Self { s, t })
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            s: vec![0.0; n],
            t: vec![0.0; n],
        }
    }

    /// A shift confined to one mode (0-based): `dq` on position, `dp` on
    /// momentum.
    pub fn single_mode(n: usize, mode: usize, dq: f64, dp: f64) -> Result<Self> {
        if mode >= n {
            return Err(Error::InvalidParameter(format!(
                "mode {} out of range for {n} modes",
                mode + 1
            )));
        }
        let mut e = Self::zero(n);
        e.s[mode] = dq;
        e.t[mode] = dp;
        e.check_finite()
    }

    fn check_finite(self) -> Result<Self> {
        if self.s.iter().chain(&self.t).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "shift components must be finite".into(),
            ));
        }
        Ok(self)
    }

    pub fn from_exact(v: &PauliVector) -> Self {
        Self {
            s: v.s().iter().map(to_f64).collect(),
            t: v.t().iter().map(to_f64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    /// Position-shift half.
    pub fn s(&self) -> &[f64] {
        &self.s
    }

    /// Momentum-shift half.
    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn sub(&self, other: &ShiftError) -> ShiftError {
        assert_eq!(self.n(), other.n(), "mode count mismatch");
        ShiftError {
            s: self.s.iter().zip(&other.s).map(|(a, b)| a - b).collect(),
            t: self.t.iter().zip(&other.t).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.s
            .iter()
            .chain(&self.t)
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Nonzero components paired with their mode and quadrature, for display.
    pub fn components(&self) -> impl Iterator<Item = (usize, char, f64)> + '_ {
        let qs = self.s.iter().enumerate().map(|(i, &x)| (i, 'q', x));
        let ps = self.t.iter().enumerate().map(|(i, &x)| (i, 'p', x));
        qs.chain(ps).filter(|&(_, _, x)| x != 0.0)
    }
}

/// Which quadratures a single-mode error may touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    Q,
    P,
    Both,
}

/// An error distribution.
#[derive(Clone, Debug, PartialEq)]
pub enum ErrorModel {
    /// One uniformly random mode receives Gaussian shifts on the allowed
    /// quadrature(s); everything else is zero.
    SingleModeGaussian { sigma: f64, restrict: Restriction },
    /// Every one of the `2n` components is an independent Gaussian.
    IidGaussian { sigma: f64 },
    /// Always the same displacement.
    Fixed(ShiftError),
}

impl ErrorModel {
    pub fn validate_for(&self, n: usize) -> Result<()> {
        match self {
            ErrorModel::SingleModeGaussian { sigma, .. } | ErrorModel::IidGaussian { sigma } => {
                if !(sigma.is_finite() && *sigma > 0.0) {
                    return Err(Error::InvalidModel(format!(
                        "sigma must be positive and finite, got {sigma}"
                    )));
                }
            }
            ErrorModel::Fixed(e) => {
                if e.n() != n {
                    return Err(Error::DimensionMismatch(n, e.n()));
                }
            }
        }
        Ok(())
    }

    /// The scale parameter reported in CSV `param` columns (0 for `fixed`).
    pub fn primary_sigma(&self) -> f64 {
        match self {
            ErrorModel::SingleModeGaussian { sigma, .. } => *sigma,
            ErrorModel::IidGaussian { sigma } => *sigma,
            ErrorModel::Fixed(_) => 0.0,
        }
    }

    /// Same model with a different scale. Fails for `fixed`.
    pub fn with_sigma(&self, sigma: f64) -> Result<ErrorModel> {
        match self {
            ErrorModel::SingleModeGaussian { restrict, .. } => Ok(ErrorModel::SingleModeGaussian {
                sigma,
                restrict: *restrict,
            }),
            ErrorModel::IidGaussian { .. } => Ok(ErrorModel::IidGaussian { sigma }),
            ErrorModel::Fixed(_) => Err(Error::InvalidModel(
                "a fixed error has no sigma to sweep".into(),
            )),
        }
    }
}

/// Additive Gaussian noise on each measured syndrome component. A stand-in
/// for finitely squeezed syndrome extraction; `sigma_m = 0` is noiseless.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementNoise {
    pub sigma_m: f64,
}

impl MeasurementNoise {
    pub fn new(sigma_m: f64) -> Result<Self> {
        if !(sigma_m.is_finite() && sigma_m >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "sigma_m must be finite and nonnegative, got {sigma_m}"
            )));
        }
        Ok(Self { sigma_m })
    }

    pub fn noiseless() -> Self {
        Self { sigma_m: 0.0 }
    }
}

/// Draw one error. Consumes RNG values in a fixed order (mode index first,
/// then q before p) so results depend only on the RNG state.
pub fn sample_error<R: Rng + ?Sized>(model: &ErrorModel, n: usize, rng: &mut R) -> ShiftError {
    match model {
        ErrorModel::Fixed(e) => e.clone(),
        ErrorModel::IidGaussian { sigma } => {
            let normal = Normal::new(0.0, *sigma).expect("validated sigma");
            let s = (0..n).map(|_| normal.sample(rng)).collect();
            let t = (0..n).map(|_| normal.sample(rng)).collect();
            ShiftError { s, t }
        }
        ErrorModel::SingleModeGaussian { sigma, restrict } => {
            let normal = Normal::new(0.0, *sigma).expect("validated sigma");
            let mode = rng.random_range(0..n);
            let mut e = ShiftError::zero(n);
            if matches!(restrict, Restriction::Q | Restriction::Both) {
                e.s[mode] = normal.sample(rng);
            }
            if matches!(restrict, Restriction::P | Restriction::Both) {
                e.t[mode] = normal.sample(rng);
            }
            e
        }
    }
}

/// Draw `count` standard normal values; callers scale them, so streams stay
/// aligned across noise levels.
pub fn standard_normals<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<f64> {
    (0..count).map(|_| StandardNormal.sample(rng)).collect()
}

fn parse_kv(pairs: &str) -> Result<Vec<(&str, &str)>> {
    pairs
        .split(',')
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.split_once('=')
                .ok_or_else(|| Error::InvalidModel(format!("expected key=value, got `{part}`")))
        })
        .collect()
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| Error::InvalidModel(format!("`{value}` is not a number for {key}")))
}

/// Parse a model spec string:
/// `single-mode-gaussian:sigma=0.5,restrict=q`, `iid-gaussian:sigma=0.1`,
/// or `fixed:mode=2,q=0.3,p=-0.1` (modes are 1-based).
pub fn parse_model(spec: &str, n: usize) -> Result<ErrorModel> {
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let model = match kind {
        "single-mode-gaussian" => {
            let mut sigma = None;
            let mut restrict = Restriction::Both;
            for (k, v) in parse_kv(rest)? {
                match k {
                    "sigma" => sigma = Some(parse_f64(k, v)?),
                    "restrict" => {
                        restrict = match v {
                            "q" => Restriction::Q,
                            "p" => Restriction::P,
                            "both" => Restriction::Both,
                            other => {
                                return Err(Error::InvalidModel(format!(
                                    "restrict must be q, p or both, got `{other}`"
                                )))
                            }
                        }
                    }
                    other => return Err(Error::InvalidModel(format!("unknown key `{other}`"))),
                }
            }
            let sigma = sigma
                .ok_or_else(|| Error::InvalidModel("single-mode-gaussian needs sigma".into()))?;
            ErrorModel::SingleModeGaussian { sigma, restrict }
        }
        "iid-gaussian" => {
            let mut sigma = None;
            for (k, v) in parse_kv(rest)? {
                match k {
                    "sigma" => sigma = Some(parse_f64(k, v)?),
                    other => return Err(Error::InvalidModel(format!("unknown key `{other}`"))),
                }
            }
            let sigma =
                sigma.ok_or_else(|| Error::InvalidModel("iid-gaussian needs sigma".into()))?;
            ErrorModel::IidGaussian { sigma }
        }
        "fixed" => ErrorModel::Fixed(parse_shift_spec(rest, n)?),
        other => {
            return Err(Error::InvalidModel(format!(
                "unknown model `{other}` (expected single-mode-gaussian, iid-gaussian or fixed)"
            )))
        }
    };
    model.validate_for(n)?;
    Ok(model)
}

/// Parse a single-mode shift literal `mode=2,q=0.3,p=-0.1` (1-based mode;
/// q and p default to zero).
pub fn parse_shift_spec(spec: &str, n: usize) -> Result<ShiftError> {
    let mut mode = None;
    let mut dq = 0.0;
    let mut dp = 0.0;
    for (k, v) in parse_kv(spec).map_err(invalid_param)? {
        match k {
            "mode" => {
                let m: usize = v
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("`{v}` is not a mode index")))?;
                if m < 1 || m > n {
                    return Err(Error::InvalidParameter(format!(
                        "mode {m} out of range 1..={n}"
                    )));
                }
                mode = Some(m - 1);
            }
            "q" => dq = parse_f64(k, v).map_err(invalid_param)?,
            "p" => dp = parse_f64(k, v).map_err(invalid_param)?,
            other => return Err(Error::InvalidParameter(format!("unknown key `{other}`"))),
        }
    }
    let mode =
        mode.ok_or_else(|| Error::InvalidParameter("shift literal needs mode=<int>".into()))?;
    ShiftError::single_mode(n, mode, dq, dp)
}

fn invalid_param(e: Error) -> Error {
    match e {
        Error::InvalidModel(msg) => Error::InvalidParameter(msg),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn fixed_model_returns_the_error_verbatim() {
        let e = ShiftError::single_mode(3, 1, 0.25, -0.5).unwrap();
        let model = ErrorModel::Fixed(e.clone());
        assert_eq!(sample_error(&model, 3, &mut rng(7)), e);
    }

    #[test]
    fn single_mode_q_touches_only_the_position_half() {
        let model = ErrorModel::SingleModeGaussian {
            sigma: 0.5,
            restrict: Restriction::Q,
        };
        let mut r = rng(3);
        for _ in 0..200 {
            let e = sample_error(&model, 3, &mut r);
            assert_eq!(e.s().iter().filter(|&&x| x != 0.0).count(), 1);
            assert!(e.t().iter().all(|&x| x == 0.0));
        }
        let both = ErrorModel::SingleModeGaussian {
            sigma: 0.5,
            restrict: Restriction::Both,
        };
        for _ in 0..50 {
            let e = sample_error(&both, 4, &mut r);
            let nz_modes: Vec<usize> = (0..4)
                .filter(|&m| e.s()[m] != 0.0 || e.t()[m] != 0.0)
                .collect();
            assert_eq!(nz_modes.len(), 1);
        }
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let model = ErrorModel::IidGaussian { sigma: 1.0 };
        let a = sample_error(&model, 5, &mut rng(42));
        let b = sample_error(&model, 5, &mut rng(42));
        assert_eq!(a, b);
    }

    #[test]
    fn iid_empirical_variance_is_near_one() {
        let model = ErrorModel::IidGaussian { sigma: 1.0 };
        let mut r = rng(0);
        let trials = 100_000;
        let mut sum_sq = 0.0;
        for _ in 0..trials {
            let e = sample_error(&model, 1, &mut r);
            sum_sq += e.s()[0] * e.s()[0] + e.t()[0] * e.t()[0];
        }
        let var = sum_sq / (2.0 * trials as f64);
        assert!((0.97..=1.03).contains(&var), "variance {var}");
    }

    #[test]
    fn parses_model_specs() {
        assert_eq!(
            parse_model("single-mode-gaussian:sigma=0.5,restrict=q", 3).unwrap(),
            ErrorModel::SingleModeGaussian {
                sigma: 0.5,
                restrict: Restriction::Q
            }
        );
        assert_eq!(
            parse_model("iid-gaussian:sigma=0.1", 3).unwrap(),
            ErrorModel::IidGaussian { sigma: 0.1 }
        );
        let fixed = parse_model("fixed:mode=2,q=0.3,p=-0.1", 3).unwrap();
        assert_eq!(
            fixed,
            ErrorModel::Fixed(ShiftError::single_mode(3, 1, 0.3, -0.1).unwrap())
        );
        assert!(parse_model("iid-gaussian:sigma=-1", 3).is_err());
        assert!(parse_model("blah:sigma=1", 3).is_err());
        assert!(parse_model("fixed:mode=9,q=0.3", 3).is_err());
    }
}
