//! Lifting binary (qubit) stabilizer data to continuous-variable codes.
//!
//! A binary check matrix whose rows commute under the GF(2) symplectic form
//! can often be reinterpreted over the reals once some entries are flipped
//! from `1` to `-1`: because every pairwise GF(2) form vanishes, each real
//! pairwise form is a sum of an even number of `+-1` terms, so sign flips
//! can cancel it exactly. [`lift_signs`] searches for such an assignment by
//! backtracking; [`lift_logicals`] does the same for logical rows against an
//! already-lifted code.

use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{rat, Scalar};
use crate::symplectic::PauliVector;
use num_traits::{Signed, Zero};

/// Default node budget for the sign searches.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A `k x 2n` bit matrix in `(X-part | Z-part)` convention whose rows
/// pairwise commute under the GF(2) symplectic form. Rank over GF(2) is not
/// enforced here; a rank-deficient lift is caught by code validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCheckMatrix {
    n: usize,
    rows: Vec<Vec<bool>>,
}

fn gf2_commute(a: &[bool], b: &[bool], n: usize) -> bool {
    let mut parity = false;
    for m in 0..n {
        parity ^= a[m] & b[n + m];
        parity ^= a[n + m] & b[m];
    }
    !parity
}

impl BinaryCheckMatrix {
    pub fn new(n: usize, rows: Vec<Vec<bool>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        for row in &rows {
            if row.len() != 2 * n {
                return Err(Error::DimensionMismatch(2 * n, row.len()));
            }
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if !gf2_commute(&rows[i], &rows[j], n) {
                    return Err(Error::BinaryNonCommuting { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }
}

/// Parse `I/X/Y/Z` strings, one stabilizer per line. `X` sets an s-bit, `Z`
/// a t-bit, `Y` both.
pub fn parse_pauli_strings<S: AsRef<str>>(lines: &[S]) -> Result<BinaryCheckMatrix> {
    let mut n = None;
    let mut rows = Vec::with_capacity(lines.len());
    for (idx, line) in lines.iter().enumerate() {
        let line = line.as_ref();
        let len = line.chars().count();
        match n {
            None => {
                if len == 0 {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: "empty Pauli string".into(),
                    });
                }
                n = Some(len);
            }
            Some(n) if n != len => {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("string length {len} differs from {n}"),
                })
            }
            _ => {}
        }
        let n = n.unwrap();
        let mut row = vec![false; 2 * n];
        for (m, c) in line.chars().enumerate() {
            match c {
                'I' => {}
                'X' => row[m] = true,
                'Z' => row[n + m] = true,
                'Y' => {
                    row[m] = true;
                    row[n + m] = true;
                }
                other => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("invalid Pauli character `{other}`"),
                    })
                }
            }
        }
        rows.push(row);
    }
    let n = n.ok_or(Error::EmptySpan)?;
    BinaryCheckMatrix::new(n, rows)
}

/// Sign matrix with entries in `{-1, 0, +1}`, zero exactly where the bit
/// matrix is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAssignment {
    signs: Vec<Vec<i8>>,
}

impl SignAssignment {
    /// Build from raw entries, validating the support against `h`.
    pub fn new(signs: Vec<Vec<i8>>, h: &BinaryCheckMatrix) -> Result<Self> {
        if signs.len() != h.k() {
            return Err(Error::DimensionMismatch(h.k(), signs.len()));
        }
        for (row, bits) in signs.iter().zip(h.rows()) {
            if row.len() != 2 * h.n() {
                return Err(Error::DimensionMismatch(2 * h.n(), row.len()));
            }
            for (&s, &b) in row.iter().zip(bits) {
                let ok = if b { s == 1 || s == -1 } else { s == 0 };
                if !ok {
                    return Err(Error::InvalidParameter(
                        "sign support does not match the bit matrix".into(),
                    ));
                }
            }
        }
        Ok(Self { signs })
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.signs
    }

    fn to_vectors(&self, n: usize) -> Vec<PauliVector> {
        self.signs
            .iter()
            .map(|row| {
                let s = row[..n].iter().map(|&x| rat(x as i64)).collect();
                let t = row[n..].iter().map(|&x| rat(x as i64)).collect();
                PauliVector::new(s, t).expect("sign rows have 2n entries")
            })
            .collect()
    }
}

struct SignSearch<'a> {
    h: &'a BinaryCheckMatrix,
    signs: Vec<Vec<i8>>,
    nodes: u64,
    budget: u64,
    solution: Option<Vec<Vec<i8>>>,
}

impl SignSearch<'_> {
    /// Coefficient of row `r`'s entry at `col` inside the pair form
    /// `omega(u_p, u_r)`, given that row `p` is fully assigned.
    fn coeff(&self, p: usize, col: usize) -> i8 {
        let n = self.h.n();
        if col < n {
            -self.signs[p][n + col]
        } else {
            self.signs[p][col - n]
        }
    }

    fn solve_row(&mut self, r: usize) -> Result<bool> {
        if r == self.h.k() {
            // Sign-feasible leaf; the lift must also validate as a code,
            // which adds the exact rank condition.
            let rows: Vec<linalg::Row> = self
                .signs
                .iter()
                .map(|row| row.iter().map(|&x| rat(x as i64)).collect())
                .collect();
            if linalg::rank(rows) == self.h.k() {
                self.solution = Some(self.signs.clone());
                return Ok(true);
            }
            return Ok(false);
        }
        let positions: Vec<usize> = (0..2 * self.h.n())
            .filter(|&c| self.h.rows()[r][c])
            .collect();
        if positions.is_empty() {
            return self.solve_row(r + 1);
        }
        // Running pair sums against every earlier row, with the remaining
        // absolute weight available to cancel them.
        let mut sums = vec![0i32; r];
        let mut rems: Vec<i32> = (0..r)
            .map(|p| {
                positions
                    .iter()
                    .map(|&c| i32::from(self.coeff(p, c).abs()))
                    .sum()
            })
            .collect();
        self.assign(r, &positions, 0, &mut sums, &mut rems)
    }

    fn assign(
        &mut self,
        r: usize,
        positions: &[usize],
        pi: usize,
        sums: &mut [i32],
        rems: &mut [i32],
    ) -> Result<bool> {
        if pi == positions.len() {
            debug_assert!(sums.iter().all(|&s| s == 0));
            return self.solve_row(r + 1);
        }
        let col = positions[pi];
        // The first nonzero entry of a row is pinned to +1: negating a whole
        // row never changes feasibility.
        let domain: &[i8] = if pi == 0 { &[1] } else { &[1, -1] };
        for &val in domain {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::LiftBudgetExceeded {
                    budget: self.budget,
                });
            }
            self.signs[r][col] = val;
            let mut feasible = true;
            for (p, (sum, rem)) in sums.iter_mut().zip(rems.iter_mut()).enumerate() {
                let c = self.coeff(p, col);
                if c != 0 {
                    *sum += i32::from(c) * i32::from(val);
                    *rem -= 1;
                    if sum.abs() > *rem {
                        feasible = false;
                    }
                }
            }
            if feasible && self.assign(r, positions, pi + 1, sums, rems)? {
                return Ok(true);
            }
            for (p, (sum, rem)) in sums.iter_mut().zip(rems.iter_mut()).enumerate() {
                let c = self.coeff(p, col);
                if c != 0 {
                    *sum -= i32::from(c) * i32::from(val);
                    *rem += 1;
                }
            }
            self.signs[r][col] = 0;
        }
        Ok(false)
    }
}

/// Search for a sign assignment making every real pairwise form vanish
/// exactly and the lifted code validate.
///
/// Deterministic: variables are visited in row-major order (`s` half before
/// `t` half), `+1` is tried before `-1`, and the first solution in that
/// order is returned. Exhaustion yields [`Error::LiftUnsat`]; hitting the
/// node budget yields [`Error::LiftBudgetExceeded`].
pub fn lift_signs(h: &BinaryCheckMatrix, budget: u64) -> Result<SignAssignment> {
    let mut search = SignSearch {
        h,
        signs: vec![vec![0i8; 2 * h.n()]; h.k()],
        nodes: 0,
        budget,
        solution: None,
    };
    if search.solve_row(0)? {
        let signs = search.solution.expect("solver stored its solution");
        Ok(SignAssignment { signs })
    } else {
        Err(Error::LiftUnsat {
            nodes: search.nodes,
        })
    }
}

/// Apply a sign assignment to the bit matrix and validate the result as a
/// continuous-variable code.
pub fn verify_lift(h: &BinaryCheckMatrix, a: &SignAssignment) -> Result<StabilizerCode> {
    let a = SignAssignment::new(a.signs.clone(), h)?;
    StabilizerCode::validate(a.to_vectors(h.n()))
}

/// Sign-assign binary logical rows so each commutes exactly with every
/// generator of `code`. Rows are processed independently; the budget applies
/// per row. The all-zero row trivially commutes and is returned as the zero
/// vector.
pub fn lift_logicals(
    logicals: &[Vec<bool>],
    code: &StabilizerCode,
    budget: u64,
) -> Result<Vec<PauliVector>> {
    let n = code.n();
    let mut out = Vec::with_capacity(logicals.len());
    for (idx, bits) in logicals.iter().enumerate() {
        if bits.len() != 2 * n {
            return Err(Error::DimensionMismatch(2 * n, bits.len()));
        }
        // GF(2) commutation against the generator supports must already
        // hold, otherwise no sign assignment can exist: every pair form is a
        // sum of an odd number of +-1 terms.
        for (j, g) in code.generators().iter().enumerate() {
            let mut gbits = vec![false; 2 * n];
            for m in 0..n {
                gbits[m] = !g.s()[m].is_zero();
                gbits[n + m] = !g.t()[m].is_zero();
            }
            let integral = g
                .s()
                .iter()
                .chain(g.t())
                .all(|x| x.is_integer() && x.abs() <= rat(1));
            if integral && !gf2_commute(bits, &gbits, n) {
                return Err(Error::LogicalNonCommuting {
                    index: idx + 1,
                    check: j + 1,
                });
            }
        }
        out.push(lift_one_logical(bits, code, budget)?);
    }
    Ok(out)
}

struct LogicalSearch<'a> {
    code: &'a StabilizerCode,
    positions: Vec<usize>,
    vals: Vec<i8>,
    nodes: u64,
    budget: u64,
}

impl LogicalSearch<'_> {
    /// Rational coefficient of the entry at `col` in `omega(u_j, row)`.
    fn coeff(&self, j: usize, col: usize) -> Scalar {
        let g = &self.code.generators()[j];
        let n = self.code.n();
        if col < n {
            -g.t()[col].clone()
        } else {
            g.s()[col - n].clone()
        }
    }

    fn dfs(&mut self, pi: usize, sums: &mut [Scalar], rems: &mut [Scalar]) -> Result<bool> {
        if pi == self.positions.len() {
            return Ok(sums.iter().all(Zero::is_zero));
        }
        let col = self.positions[pi];
        let domain: &[i8] = if pi == 0 { &[1] } else { &[1, -1] };
        for &val in domain {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::LiftBudgetExceeded {
                    budget: self.budget,
                });
            }
            self.vals[pi] = val;
            let mut feasible = true;
            for (j, (sum, rem)) in sums.iter_mut().zip(rems.iter_mut()).enumerate() {
                let c = self.coeff(j, col);
                *sum = &*sum + &c * rat(val as i64);
                *rem = &*rem - c.abs();
                if sum.abs() > *rem {
                    feasible = false;
                }
            }
            if feasible && self.dfs(pi + 1, sums, rems)? {
                return Ok(true);
            }
            for (j, (sum, rem)) in sums.iter_mut().zip(rems.iter_mut()).enumerate() {
                let c = self.coeff(j, col);
                *sum = &*sum - &c * rat(val as i64);
                *rem = &*rem + c.abs();
            }
            self.vals[pi] = 0;
        }
        Ok(false)
    }
}

fn lift_one_logical(bits: &[bool], code: &StabilizerCode, budget: u64) -> Result<PauliVector> {
    let n = code.n();
    let positions: Vec<usize> = (0..2 * n).filter(|&c| bits[c]).collect();
    if positions.is_empty() {
        return Ok(PauliVector::zero(n));
    }
    let vals = vec![0i8; positions.len()];
    let mut search = LogicalSearch {
        code,
        positions,
        vals,
        nodes: 0,
        budget,
    };
    let k = code.k();
    let mut sums = vec![Scalar::zero(); k];
    let mut rems = vec![Scalar::zero(); k];
    for (j, rem) in rems.iter_mut().enumerate() {
        for &c in &search.positions {
            *rem = &*rem + search.coeff(j, c).abs();
        }
    }
    if search.dfs(0, &mut sums, &mut rems)? {
        let mut s = vec![Scalar::zero(); n];
        let mut t = vec![Scalar::zero(); n];
        for (&col, &val) in search.positions.iter().zip(&search.vals) {
            if col < n {
                s[col] = rat(val as i64);
            } else {
                t[col - n] = rat(val as i64);
            }
        }
        Ok(PauliVector::new(s, t).expect("lifted logical has n modes"))
    } else {
        Err(Error::LiftUnsat {
            nodes: search.nodes,
        })
    }
}

/// A parsed binary code file: checks plus any binary logical rows.
#[derive(Clone, Debug)]
pub struct BinaryCodeFile {
    pub checks: BinaryCheckMatrix,
    pub logicals: Vec<Vec<bool>>,
}

/// Parse a binary code file in either accepted format.
///
/// Pauli-string format: one `I/X/Y/Z` string per line, with optional
/// `logical <string>` lines. Bit format, mirroring the `cvstab` grammar with
/// entries in `{0, 1}`:
///
/// ```text
/// cvbits 1
/// n 8
/// k 5
/// bits 1 1 1 1 1 1 1 1 | 0 0 0 0 0 0 0 0
/// ...
/// logical 1 1 0 0 0 0 0 0 | 0 0 0 0 0 1 0 1
/// ```
///
/// `#` starts a comment in both formats.
pub fn parse_binary_code_file(text: &str) -> Result<BinaryCodeFile> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
        .collect();
    if lines.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty binary code file".into(),
        });
    }
    if lines[0].1 == ["cvbits", "1"] {
        parse_bits_format(&lines)
    } else {
        parse_string_format(&lines)
    }
}

fn parse_string_format(lines: &[(usize, Vec<&str>)]) -> Result<BinaryCodeFile> {
    let mut checks = Vec::new();
    let mut logical_strings: Vec<(usize, &str)> = Vec::new();
    for (line, toks) in lines {
        match toks.as_slice() {
            ["logical", s] => logical_strings.push((*line, s)),
            [s] => checks.push((*line, *s)),
            _ => {
                return Err(Error::Parse {
                    line: *line,
                    msg: "expected a Pauli string or `logical <string>`".into(),
                })
            }
        }
    }
    let strings: Vec<&str> = checks.iter().map(|&(_, s)| s).collect();
    let matrix = parse_pauli_strings(&strings).map_err(|e| relocate(e, &checks))?;
    let n = matrix.n();
    let mut logicals = Vec::with_capacity(logical_strings.len());
    for (line, s) in logical_strings {
        let one = parse_pauli_strings(&[s]).map_err(|e| relocate(e, &[(line, s)]))?;
        if one.n() != n {
            return Err(Error::Parse {
                line,
                msg: format!("logical string length {} differs from {n}", one.n()),
            });
        }
        logicals.push(one.rows()[0].clone());
    }
    Ok(BinaryCodeFile {
        checks: matrix,
        logicals,
    })
}

/// Remap 1-based indices of `parse_pauli_strings` errors onto file lines.
fn relocate(e: Error, source_lines: &[(usize, &str)]) -> Error {
    match e {
        Error::Parse { line, msg } if line >= 1 && line <= source_lines.len() => Error::Parse {
            line: source_lines[line - 1].0,
            msg,
        },
        Error::BinaryNonCommuting { i, j }
            if i >= 1 && j <= source_lines.len() && j >= 1 && i <= source_lines.len() =>
        {
            Error::Parse {
                line: source_lines[j - 1].0,
                msg: format!("rows {i} and {j} do not commute over GF(2)"),
            }
        }
        other => other,
    }
}

fn parse_bits_row(tokens: &[&str], n: usize, line: usize) -> Result<Vec<bool>> {
    let err = |msg: String| Error::Parse { line, msg };
    let bar = tokens
        .iter()
        .position(|&t| t == "|")
        .ok_or_else(|| err("missing `|` separator".into()))?;
    let (s_toks, rest) = tokens.split_at(bar);
    let t_toks = &rest[1..];
    if s_toks.len() != n || t_toks.len() != n {
        return Err(err(format!(
            "expected {n} bits on each side of `|`, found {} and {}",
            s_toks.len(),
            t_toks.len()
        )));
    }
    s_toks
        .iter()
        .chain(t_toks)
        .map(|&t| match t {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(err(format!("`{other}` is not a 0/1 bit"))),
        })
        .collect()
}

fn parse_bits_format(lines: &[(usize, Vec<&str>)]) -> Result<BinaryCodeFile> {
    let mut it = lines.iter().skip(1);
    let mut read_field = |field: &str| -> Result<usize> {
        let (line, toks) = it.next().ok_or_else(|| Error::Parse {
            line: lines[0].0,
            msg: format!("missing `{field} <int>` line"),
        })?;
        if toks.len() != 2 || toks[0] != field {
            return Err(Error::Parse {
                line: *line,
                msg: format!("expected `{field} <int>`"),
            });
        }
        toks[1].parse::<usize>().map_err(|_| Error::Parse {
            line: *line,
            msg: format!("`{}` is not a valid count", toks[1]),
        })
    };
    let n = read_field("n")?;
    let k = read_field("k")?;
    if n == 0 {
        return Err(Error::Parse {
            line: lines[0].0,
            msg: "n must be at least 1".into(),
        });
    }
    let mut rows = Vec::with_capacity(k);
    let mut logicals = Vec::new();
    for (line, toks) in it {
        match toks.first() {
            Some(&"bits") => rows.push((*line, parse_bits_row(&toks[1..], n, *line)?)),
            Some(&"logical") => logicals.push(parse_bits_row(&toks[1..], n, *line)?),
            _ => {
                return Err(Error::Parse {
                    line: *line,
                    msg: "expected a `bits` or `logical` line".into(),
                })
            }
        }
    }
    if rows.len() != k {
        return Err(Error::Parse {
            line: lines[0].0,
            msg: format!("k = {k} does not match {} `bits` lines", rows.len()),
        });
    }
    let checks =
        BinaryCheckMatrix::new(n, rows.iter().map(|(_, r)| r.clone()).collect()).map_err(|e| {
            match e {
                Error::BinaryNonCommuting { i, j } => Error::Parse {
                    line: rows[j - 1].0,
                    msg: format!("rows {i} and {j} do not commute over GF(2)"),
                },
                other => other,
            }
        })?;
    Ok(BinaryCodeFile { checks, logicals })
}

/// Split an integer-valued code with entries in `{-1, 0, +1}` into its bit
/// support and its sign matrix.
pub fn strip_signs(code: &StabilizerCode) -> Result<(BinaryCheckMatrix, SignAssignment)> {
    let n = code.n();
    let mut bits = Vec::with_capacity(code.k());
    let mut signs = Vec::with_capacity(code.k());
    for g in code.generators() {
        let mut brow = vec![false; 2 * n];
        let mut srow = vec![0i8; 2 * n];
        for (c, x) in g.s().iter().chain(g.t()).enumerate() {
            let v = if x.is_zero() {
                0i8
            } else if *x == rat(1) {
                1
            } else if *x == rat(-1) {
                -1
            } else {
                return Err(Error::InvalidParameter(format!(
                    "entry {x} is not in {{-1, 0, 1}}"
                )));
            };
            brow[c] = v != 0;
            srow[c] = v;
        }
        bits.push(brow);
        signs.push(srow);
    }
    let h = BinaryCheckMatrix::new(n, bits)?;
    let a = SignAssignment::new(signs, &h)?;
    Ok((h, a))
}
