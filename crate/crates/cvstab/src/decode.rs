//! Syndrome computation, shift-error decoding and correctability checks.
//!
//! The syndrome of an error `e` has one component per generator:
//! `m_j(e) = omega(u_j, e)`, the unique linear form that vanishes exactly
//! when the error commutes with generator `j`. Generators are exact; errors
//! are floating point. Two decoders are provided:
//!
//! - minimum-norm: the least-squares preimage of the syndrome under the
//!   syndrome map, via an exact rational pseudoinverse. Model-free; it only
//!   promises to reproduce the syndrome.
//! - single-mode: per-mode two-parameter least squares, picking the mode
//!   with the smallest residual (ties go to the lowest index). Exact for
//!   codes certified by [`check_single_mode_correctability`].

use crate::channel::ShiftError;
use crate::code::{LogicalBasis, StabilizerCode};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{to_f64, Scalar};
use crate::symplectic::{omega, PauliVector};
use num_traits::{One, Zero};

/// Measured syndrome values, one per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Syndrome {
    values: Vec<f64>,
}

impl Syndrome {
    pub fn new(code: &StabilizerCode, values: Vec<f64>) -> Result<Self> {
        if values.len() != code.k() {
            return Err(Error::SyndromeLength {
                expected: code.k(),
                found: values.len(),
            });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0.0)
    }
}

/// `omega(v, e)` with an exact left argument.
fn omega_vec_err(v: &PauliVector, e: &ShiftError) -> f64 {
    let mut acc = 0.0;
    for m in 0..v.n() {
        acc += to_f64(&v.s()[m]) * e.t()[m] - e.s()[m] * to_f64(&v.t()[m]);
    }
    acc
}

/// Syndrome of an error: component `j` is `omega(u_j, e)`.
pub fn syndrome(code: &StabilizerCode, e: &ShiftError) -> Result<Syndrome> {
    if e.n() != code.n() {
        return Err(Error::DimensionMismatch(code.n(), e.n()));
    }
    let values = code
        .generators()
        .iter()
        .map(|u| omega_vec_err(u, e))
        .collect();
    Ok(Syndrome { values })
}

/// The exact syndrome map `M` as a `k x 2n` rational matrix: the coefficient
/// on `e.s_i` is `-u_j.t_i` and on `e.t_i` it is `u_j.s_i`.
fn syndrome_matrix(code: &StabilizerCode) -> Vec<linalg::Row> {
    code.generators()
        .iter()
        .map(|u| {
            let mut row: Vec<Scalar> = u.t().iter().map(|x| -x).collect();
            row.extend(u.s().iter().cloned());
            row
        })
        .collect()
}

/// Minimum-Euclidean-norm decoder backed by the exact pseudoinverse
/// `M^T (M M^T)^{-1}` of the syndrome map; the map is surjective for any
/// valid code, so every syndrome has a preimage.
pub struct MinNormDecoder {
    n: usize,
    k: usize,
    /// 2n x k pseudoinverse, exact.
    pinv: Vec<linalg::Row>,
}

impl MinNormDecoder {
    pub fn new(code: &StabilizerCode) -> Self {
        let m = syndrome_matrix(code);
        let k = code.k();
        let gram: Vec<linalg::Row> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        m[i].iter()
                            .zip(&m[j])
                            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
                    })
                    .collect()
            })
            .collect();
        let gram_inv =
            linalg::invert(&gram).expect("the syndrome map of a valid code has full row rank");
        let cols = 2 * code.n();
        let pinv: Vec<linalg::Row> = (0..cols)
            .map(|c| {
                (0..k)
                    .map(|j| {
                        (0..k)
                            .map(|l| &m[l][c] * &gram_inv[l][j])
                            .fold(Scalar::zero(), |acc, x| acc + x)
                    })
                    .collect()
            })
            .collect();
        Self {
            n: code.n(),
            k,
            pinv,
        }
    }

    pub fn decode(&self, s: &Syndrome) -> Result<ShiftError> {
        if s.values().len() != self.k {
            return Err(Error::SyndromeLength {
                expected: self.k,
                found: s.values().len(),
            });
        }
        let coords: Vec<f64> = self
            .pinv
            .iter()
            .map(|row| row.iter().zip(s.values()).map(|(p, v)| to_f64(p) * v).sum())
            .collect();
        ShiftError::new(coords[..self.n].to_vec(), coords[self.n..].to_vec())
    }

    pub fn decode_exact(&self, s: &[Scalar]) -> Result<PauliVector> {
        if s.len() != self.k {
            return Err(Error::SyndromeLength {
                expected: self.k,
                found: s.len(),
            });
        }
        let coords: Vec<Scalar> = self.pinv.iter().map(|row| dot(row, s)).collect();
        Ok(PauliVector::from_coords(self.n, &coords))
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// One-shot minimum-norm decode.
pub fn decode_min_norm(code: &StabilizerCode, s: &Syndrome) -> Result<ShiftError> {
    MinNormDecoder::new(code).decode(s)
}

/// Exact-rational minimum-norm decode for rational syndromes.
pub fn decode_min_norm_exact(code: &StabilizerCode, s: &[Scalar]) -> Result<PauliVector> {
    MinNormDecoder::new(code).decode_exact(s)
}

/// Exact 2 x k pseudoinverse of a k x 2 rational matrix given by columns.
fn pinv_two_column(c1: &[Scalar], c2: &[Scalar]) -> Vec<linalg::Row> {
    let k = c1.len();
    let zero_cols = (c1.iter().all(Zero::is_zero), c2.iter().all(Zero::is_zero));
    let norm = |c: &[Scalar]| dot(c, c);
    match zero_cols {
        (true, true) => vec![vec![Scalar::zero(); k]; 2],
        _ => {
            // Rank 1 when the columns are proportional.
            let proportional = |a: &[Scalar], b: &[Scalar]| -> Option<Scalar> {
                // b = lambda * a with a nonzero.
                let pivot = a.iter().position(|x| !x.is_zero())?;
                let lambda = &b[pivot] / &a[pivot];
                let matches = a.iter().zip(b).all(|(x, y)| &(&lambda * x) == y);
                matches.then_some(lambda)
            };
            let rank1 = if zero_cols.1 {
                Some((c1.to_vec(), vec![Scalar::one(), Scalar::zero()]))
            } else if zero_cols.0 {
                Some((c2.to_vec(), vec![Scalar::zero(), Scalar::one()]))
            } else {
                proportional(c1, c2).map(|lambda| (c1.to_vec(), vec![Scalar::one(), lambda]))
            };
            if let Some((c, w)) = rank1 {
                // M = c w^T, so M+ = w c^T / (|c|^2 |w|^2).
                let scale = (norm(&c) * norm(&w)).recip();
                return (0..2)
                    .map(|r| c.iter().map(|x| &(&w[r] * x) * &scale).collect())
                    .collect();
            }
            // Rank 2: (M^T M)^{-1} M^T.
            let g = vec![vec![norm(c1), dot(c1, c2)], vec![dot(c1, c2), norm(c2)]];
            let gi = linalg::invert(&g).expect("rank-2 Gram matrix is invertible");
            (0..2)
                .map(|r| {
                    (0..k)
                        .map(|j| &gi[r][0] * &c1[j] + &gi[r][1] * &c2[j])
                        .collect()
                })
                .collect()
        }
    }
}

/// Float view of one mode's restricted syndrome map: the k x 2 submatrix
/// and its 2 x k pseudoinverse, both derived from exact rationals.
type ModeSolver = (Vec<[f64; 2]>, [Vec<f64>; 2]);

/// Decoder restricting the correction to a single mode.
pub struct SingleModeDecoder {
    k: usize,
    n: usize,
    modes: Vec<ModeSolver>,
}

impl SingleModeDecoder {
    pub fn new(code: &StabilizerCode) -> Self {
        let k = code.k();
        let n = code.n();
        let modes = (0..n)
            .map(|i| {
                let c1: Vec<Scalar> = code
                    .generators()
                    .iter()
                    .map(|u| -u.t()[i].clone())
                    .collect();
                let c2: Vec<Scalar> = code.generators().iter().map(|u| u.s()[i].clone()).collect();
                let pinv = pinv_two_column(&c1, &c2);
                let m: Vec<[f64; 2]> = (0..k).map(|j| [to_f64(&c1[j]), to_f64(&c2[j])]).collect();
                let p = [
                    pinv[0].iter().map(to_f64).collect::<Vec<f64>>(),
                    pinv[1].iter().map(to_f64).collect::<Vec<f64>>(),
                ];
                (m, p)
            })
            .collect();
        Self { k, n, modes }
    }

    /// Pick the best single-mode explanation for a syndrome.
    pub fn decode(&self, s: &Syndrome, tolerance: f64) -> Result<SingleModeDecode> {
        if s.values().len() != self.k {
            return Err(Error::SyndromeLength {
                expected: self.k,
                found: s.values().len(),
            });
        }
        let mut best: Option<(usize, f64, f64, f64)> = None;
        for (i, (m, p)) in self.modes.iter().enumerate() {
            let dq: f64 = p[0].iter().zip(s.values()).map(|(a, b)| a * b).sum();
            let dp: f64 = p[1].iter().zip(s.values()).map(|(a, b)| a * b).sum();
            let residual_sq: f64 = (0..self.k)
                .map(|j| {
                    let fit = m[j][0] * dq + m[j][1] * dp;
                    let d = fit - s.values()[j];
                    d * d
                })
                .sum();
            if best.is_none_or(|(_, _, _, r)| residual_sq < r) {
                best = Some((i, dq, dp, residual_sq));
            }
        }
        let (mode, dq, dp, residual_sq) = best.expect("codes have at least one mode");
        let residual_norm = residual_sq.sqrt();
        Ok(SingleModeDecode {
            correction: ShiftError::single_mode(self.n, mode, dq, dp)?,
            mode,
            residual_norm,
            syndrome_match: residual_norm <= tolerance,
        })
    }
}

/// Result of a single-mode decode: the syndrome-matching shift estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct SingleModeDecode {
    /// Estimated error, confined to `mode`. Applying the inverse
    /// displacement undoes it.
    pub correction: ShiftError,
    /// 0-based mode the correction lives on.
    pub mode: usize,
    /// Euclidean distance between the fitted and the measured syndrome.
    pub residual_norm: f64,
    /// Whether the fit reproduces the syndrome within the tolerance.
    pub syndrome_match: bool,
}

/// One-shot single-mode decode.
pub fn decode_single_mode(
    code: &StabilizerCode,
    s: &Syndrome,
    tolerance: f64,
) -> Result<SingleModeDecode> {
    SingleModeDecoder::new(code).decode(s, tolerance)
}

/// Induced logical displacement of an error: for each pair `(x_i, z_i)` the
/// coset expansion coefficients `(omega(e, z_i), omega(x_i, e))`, i.e. the
/// logical position and momentum shifts on mode `i`. Zero on the stabilizer
/// span.
pub fn logical_action(
    code: &StabilizerCode,
    basis: &LogicalBasis,
    e: &ShiftError,
) -> Result<Vec<f64>> {
    if e.n() != code.n() {
        return Err(Error::DimensionMismatch(code.n(), e.n()));
    }
    let mut out = Vec::with_capacity(2 * basis.logical_modes());
    for (x, z) in basis.pairs() {
        out.push(-omega_vec_err(z, e));
        out.push(omega_vec_err(x, e));
    }
    Ok(out)
}

/// Exact-rational logical action for rational displacement vectors.
pub fn logical_action_exact(basis: &LogicalBasis, v: &PauliVector) -> Result<Vec<Scalar>> {
    let mut out = Vec::with_capacity(2 * basis.logical_modes());
    for (x, z) in basis.pairs() {
        if x.n() != v.n() {
            return Err(Error::DimensionMismatch(x.n(), v.n()));
        }
        out.push(omega(v, z));
        out.push(omega(x, v));
    }
    Ok(out)
}

/// Outcome of decoding a known error: the applied correction, what is left,
/// and how the leftover acts on the logical modes.
#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    pub correction: ShiftError,
    /// `error - correction`.
    pub residual: ShiftError,
    pub logical_displacement: Vec<f64>,
    /// True when the largest absolute logical displacement is within the
    /// tolerance.
    pub success: bool,
}

/// Score a correction against the true error.
pub fn evaluate_correction(
    code: &StabilizerCode,
    basis: &LogicalBasis,
    error: &ShiftError,
    correction: ShiftError,
    tolerance: f64,
) -> Result<DecodeResult> {
    if error.n() != code.n() {
        return Err(Error::DimensionMismatch(code.n(), error.n()));
    }
    let residual = error.sub(&correction);
    let logical_displacement = logical_action(code, basis, &residual)?;
    let success = logical_displacement
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()))
        <= tolerance;
    Ok(DecodeResult {
        correction,
        residual,
        logical_displacement,
        success,
    })
}

/// A mode pair whose shift space contains a syndrome-kernel vector that acts
/// logically: two errors the decoder cannot tell apart but that differ on
/// the code space.
#[derive(Clone, Debug, PartialEq)]
pub struct PairFailure {
    /// 0-based mode indices (equal for a single-mode kernel).
    pub modes: (usize, usize),
    pub witness: PauliVector,
    pub witness_logical_action: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub pass: bool,
    pub failures: Vec<PairFailure>,
}

/// Certification that single-mode shifts are correctable, overall and per
/// quadrature family.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectabilityReport {
    /// Shifts touching both quadratures of one mode.
    pub arbitrary: FamilyReport,
    /// Position-only shifts.
    pub q_only: FamilyReport,
    /// Momentum-only shifts.
    pub p_only: FamilyReport,
}

/// One shift coordinate: a position shift on a mode lives in the `s` half,
/// a momentum shift in the `t` half (0-based modes).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftCoord {
    Q(usize),
    P(usize),
}

/// Exact kernel of the syndrome map restricted to shifts on the given
/// coordinates, embedded back into `R^{2n}`. Kernel vectors are errors the
/// syndrome cannot distinguish from nothing.
pub fn restricted_syndrome_kernel(
    code: &StabilizerCode,
    coords: &[ShiftCoord],
) -> Result<Vec<PauliVector>> {
    let n = code.n();
    for c in coords {
        let m = match *c {
            ShiftCoord::Q(m) | ShiftCoord::P(m) => m,
        };
        if m >= n {
            return Err(Error::InvalidParameter(format!(
                "mode {} out of range for {n} modes",
                m + 1
            )));
        }
    }
    let matrix: Vec<linalg::Row> = code
        .generators()
        .iter()
        .map(|u| {
            coords
                .iter()
                .map(|c| match *c {
                    ShiftCoord::Q(m) => -u.t()[m].clone(),
                    ShiftCoord::P(m) => u.s()[m].clone(),
                })
                .collect()
        })
        .collect();
    let kernel = linalg::nullspace(&matrix, coords.len());
    Ok(kernel
        .into_iter()
        .map(|vec| {
            let mut full = vec![Scalar::zero(); 2 * n];
            for (c, val) in coords.iter().zip(vec) {
                match *c {
                    ShiftCoord::Q(m) => full[m] = val,
                    ShiftCoord::P(m) => full[n + m] = val,
                }
            }
            PauliVector::from_coords(n, &full)
        })
        .collect())
}

/// The coordinate sets checked for a mode pair, per family.
pub fn pair_coords(i: usize, j: usize, family_q: bool, family_p: bool) -> Vec<ShiftCoord> {
    let mut coords = Vec::new();
    let modes: &[usize] = if i == j { &[i] } else { &[i, j] };
    for &m in modes {
        if family_q {
            coords.push(ShiftCoord::Q(m));
        }
        if family_p {
            coords.push(ShiftCoord::P(m));
        }
    }
    coords
}

/// Decide exactly whether single-mode errors are correctable: for every mode
/// pair, the kernel of the syndrome map restricted to shifts on those modes
/// must lie inside the stabilizer span `W`. All arithmetic is rational.
pub fn check_single_mode_correctability(
    code: &StabilizerCode,
    basis: &LogicalBasis,
) -> Result<CorrectabilityReport> {
    let n = code.n();
    let family = |family_q: bool, family_p: bool| -> Result<FamilyReport> {
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i..n {
                let coords = pair_coords(i, j, family_q, family_p);
                for witness in restricted_syndrome_kernel(code, &coords)? {
                    if !code.span().contains(&witness)? {
                        let witness_logical_action = logical_action_exact(basis, &witness)?;
                        failures.push(PairFailure {
                            modes: (i, j),
                            witness,
                            witness_logical_action,
                        });
                        break;
                    }
                }
            }
        }
        Ok(FamilyReport {
            pass: failures.is_empty(),
            failures,
        })
    };

    Ok(CorrectabilityReport {
        arbitrary: family(true, true)?,
        q_only: family(true, false)?,
        p_only: family(false, true)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::scalar::{rat, ratio};

    const EPS: f64 = 1e-12;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= EPS
    }

    #[test]
    fn three_mode_syndrome_table() {
        let b = builtin("three-mode-q").unwrap();
        let a = 0.7;
        let cases = [(0, vec![-a, 0.0]), (1, vec![a, -a]), (2, vec![0.0, a])];
        for (mode, expected) in cases {
            let e = ShiftError::single_mode(3, mode, a, 0.0).unwrap();
            let s = syndrome(&b.code, &e).unwrap();
            assert!(
                s.values().iter().zip(&expected).all(|(x, y)| close(*x, *y)),
                "mode {mode}: {:?} vs {expected:?}",
                s.values()
            );
        }
    }

    #[test]
    fn stabilizer_errors_have_zero_syndrome() {
        let b = builtin("five-mode-braunstein").unwrap();
        for g in b.code.generators() {
            let e = ShiftError::from_exact(g);
            assert!(syndrome(&b.code, &e).unwrap().is_zero());
        }
    }

    #[test]
    fn pure_momentum_shifts_are_invisible_to_the_q_code() {
        let b = builtin("three-mode-q").unwrap();
        for mode in 0..3 {
            let e = ShiftError::single_mode(3, mode, 0.0, 1.3).unwrap();
            let s = syndrome(&b.code, &e).unwrap();
            assert_eq!(s.values(), &[0.0, 0.0]);
        }
    }

    #[test]
    fn min_norm_of_zero_is_zero() {
        let b = builtin("three-mode-q").unwrap();
        let s = Syndrome::new(&b.code, vec![0.0, 0.0]).unwrap();
        let e = decode_min_norm(&b.code, &s).unwrap();
        assert_eq!(e, ShiftError::zero(3));
    }

    #[test]
    fn min_norm_matches_the_hand_computed_preimage() {
        let b = builtin("three-mode-q").unwrap();
        let a = 0.6;
        let s = Syndrome::new(&b.code, vec![-a, 0.0]).unwrap();
        let e = decode_min_norm(&b.code, &s).unwrap();
        let expected = [2.0 * a / 3.0, -a / 3.0, -a / 3.0];
        for (x, y) in e.s().iter().zip(&expected) {
            assert!(close(*x, *y), "{x} vs {y}");
        }
        assert!(e.t().iter().all(|&x| x == 0.0));
        // Round trip.
        let s2 = syndrome(&b.code, &e).unwrap();
        assert!(s2
            .values()
            .iter()
            .zip(s.values())
            .all(|(x, y)| close(*x, *y)));
    }

    #[test]
    fn exact_min_norm_agrees() {
        let b = builtin("three-mode-q").unwrap();
        let s = [ratio(-3, 5), rat(0)];
        let e = decode_min_norm_exact(&b.code, &s).unwrap();
        assert_eq!(
            e,
            PauliVector::new(
                vec![ratio(2, 5), ratio(-1, 5), ratio(-1, 5)],
                vec![rat(0), rat(0), rat(0)],
            )
            .unwrap()
        );
    }

    #[test]
    fn single_mode_decode_recovers_the_shift() {
        let b = builtin("three-mode-q").unwrap();
        let a = 0.45;
        let s = Syndrome::new(&b.code, vec![a, -a]).unwrap();
        let d = decode_single_mode(&b.code, &s, 1e-9).unwrap();
        assert_eq!(d.mode, 1);
        assert!(close(d.correction.s()[1], a));
        assert_eq!(d.correction.t()[1], 0.0);
        assert!(d.syndrome_match);
    }

    #[test]
    fn zero_syndrome_yields_identity_correction() {
        let b = builtin("three-mode-q").unwrap();
        let s = Syndrome::new(&b.code, vec![0.0, 0.0]).unwrap();
        let d = decode_single_mode(&b.code, &s, 1e-9).unwrap();
        assert_eq!(d.mode, 0);
        assert_eq!(d.correction, ShiftError::zero(3));
        assert!(d.syndrome_match);
    }

    #[test]
    fn logical_action_values() {
        let b = builtin("three-mode-q").unwrap();
        for g in b.code.generators() {
            let e = ShiftError::from_exact(g);
            let ld = logical_action(&b.code, &b.basis, &e).unwrap();
            assert!(ld.iter().all(|&x| x == 0.0));
        }
        // A logical x displacement of amplitude a shows up as (a, 0).
        let a = 0.8;
        let (x, _) = &b.basis.pairs()[0];
        let mut e = ShiftError::from_exact(x);
        e = ShiftError::new(
            e.s().iter().map(|v| v * a).collect(),
            e.t().iter().map(|v| v * a).collect(),
        )
        .unwrap();
        let ld = logical_action(&b.code, &b.basis, &e).unwrap();
        assert!(close(ld[0], a) && close(ld[1], 0.0), "{ld:?}");
        // A detectable error still acts logically if left uncorrected.
        let e = ShiftError::single_mode(3, 0, 1.0, 0.0).unwrap();
        let ld = logical_action(&b.code, &b.basis, &e).unwrap();
        assert!(close(ld[0], 1.0) && close(ld[1], 0.0), "{ld:?}");
    }

    #[test]
    fn exact_logical_action_is_blind_to_the_stabilizer() {
        let b = builtin("eight-mode-gottesman").unwrap();
        for g in b.code.generators() {
            let ld = logical_action_exact(&b.basis, g).unwrap();
            assert!(ld.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn evaluate_correction_reports_residual_action() {
        let b = builtin("three-mode-q").unwrap();
        let error = ShiftError::single_mode(3, 1, 0.45, 0.0).unwrap();
        let s = syndrome(&b.code, &error).unwrap();
        let d = decode_single_mode(&b.code, &s, 1e-9).unwrap();
        let result = evaluate_correction(&b.code, &b.basis, &error, d.correction, 1e-9).unwrap();
        assert!(result.success);
        assert!(result.residual.max_abs() <= 1e-12);
        // Decoding nothing leaves the full logical damage (mode-1 shifts
        // report their amplitude directly under this basis).
        let error = ShiftError::single_mode(3, 0, 0.45, 0.0).unwrap();
        let bad =
            evaluate_correction(&b.code, &b.basis, &error, ShiftError::zero(3), 1e-9).unwrap();
        assert!(!bad.success);
        assert!((bad.logical_displacement[0] - 0.45).abs() <= EPS);
    }

    #[test]
    fn three_mode_correctability_split() {
        let b = builtin("three-mode-q").unwrap();
        let report = check_single_mode_correctability(&b.code, &b.basis).unwrap();
        assert!(report.q_only.pass);
        assert!(!report.p_only.pass);
        assert!(!report.arbitrary.pass);
        // The witness is a pure momentum shift with zero syndrome.
        let w = &report.p_only.failures[0].witness;
        assert!(w.s().iter().all(Zero::is_zero));
        let e = ShiftError::from_exact(w);
        assert!(syndrome(&b.code, &e).unwrap().is_zero());
        assert!(report.p_only.failures[0]
            .witness_logical_action
            .iter()
            .any(|x| !x.is_zero()));
    }

    #[test]
    fn one_error_codes_pass_the_arbitrary_check() {
        for name in ["five-mode-braunstein", "eight-mode-gottesman"] {
            let b = builtin(name).unwrap();
            let report = check_single_mode_correctability(&b.code, &b.basis).unwrap();
            assert!(report.arbitrary.pass, "{name}");
            assert!(report.q_only.pass, "{name}");
            assert!(report.p_only.pass, "{name}");
        }
    }
}
