//! Stabilizer-code objects: validation, logical bases, classification of
//! normalizer elements, syndrome observables and concatenation.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::symplectic::{omega, symplectic_gram_schmidt, PauliVector, Subspace};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An `n`-mode stabilizer code given by `k` isotropic, linearly independent
/// generator rows. The rows are stored verbatim (not canonicalized) so a
/// catalog matrix prints exactly as entered; the canonical span is kept
/// alongside for membership queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCode {
    name: Option<String>,
    generators: Vec<PauliVector>,
    span: Subspace,
}

impl StabilizerCode {
    /// Check isotropy and rank exactly and build the code.
    ///
    /// The `-I not in S` stabilizer condition needs no runtime check here:
    /// the groups generated by real one-parameter displacement families are
    /// connected and contain no nontrivial scalar.
    pub fn validate(generators: Vec<PauliVector>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::EmptySpan);
        };
        let n = first.n();
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch(n, g.n()));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                let w = omega(&generators[i], &generators[j]);
                if !w.is_zero() {
                    return Err(Error::NonIsotropic {
                        i: i + 1,
                        j: j + 1,
                        value: w,
                    });
                }
            }
        }
        // Incremental rank so the first dependent row can be named.
        let mut acc: Vec<linalg::Row> = Vec::new();
        for (idx, g) in generators.iter().enumerate() {
            acc.push(g.coords());
            let mut m = acc.clone();
            if linalg::rref(&mut m).len() != acc.len() {
                return Err(Error::RankDeficient { index: idx + 1 });
            }
        }
        let span = Subspace::span(&generators)?;
        Ok(Self {
            name: None,
            generators,
            span,
        })
    }

    /// The code with no generators at all: every state is a codeword and all
    /// `n` modes are logical.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            name: None,
            generators: Vec::new(),
            span: Subspace::zero(n),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.span.n()
    }

    /// Generator count.
    pub fn k(&self) -> usize {
        self.generators.len()
    }

    pub fn logical_modes(&self) -> usize {
        self.n() - self.k()
    }

    pub fn generators(&self) -> &[PauliVector] {
        &self.generators
    }

    /// Canonical span `W` of the generators.
    pub fn span(&self) -> &Subspace {
        &self.span
    }

    /// The symplectic complement `W^omega`: vectors of operators that
    /// preserve the code space.
    pub fn complement(&self) -> Subspace {
        self.span.symplectic_complement()
    }
}

/// Hyperbolic logical pairs `(x_i, z_i)` for a code: representatives of a
/// symplectic basis of `W^omega / W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalBasis {
    pairs: Vec<(PauliVector, PauliVector)>,
}

impl LogicalBasis {
    /// Validate a candidate basis against its code: all vectors must lie in
    /// `W^omega` but outside `W`, and the full pairing table must hold
    /// exactly: `omega(x_i, x_j) = omega(z_i, z_j) = 0`,
    /// `omega(x_i, z_j) = delta_ij`.
    pub fn new(code: &StabilizerCode, pairs: Vec<(PauliVector, PauliVector)>) -> Result<Self> {
        if pairs.len() != code.logical_modes() {
            return Err(Error::InvalidLogicalBasis(format!(
                "expected {} pairs, found {}",
                code.logical_modes(),
                pairs.len()
            )));
        }
        let complement = code.complement();
        for (idx, (x, z)) in pairs.iter().enumerate() {
            for (vec, label) in [(x, "x"), (z, "z")] {
                if vec.n() != code.n() {
                    return Err(Error::DimensionMismatch(code.n(), vec.n()));
                }
                if !complement.contains(vec)? {
                    return Err(Error::InvalidLogicalBasis(format!(
                        "{label}{} does not commute with the stabilizer",
                        idx + 1
                    )));
                }
                if code.span().contains(vec)? {
                    return Err(Error::InvalidLogicalBasis(format!(
                        "{label}{} lies in the stabilizer span",
                        idx + 1
                    )));
                }
            }
        }
        for (i, (xi, zi)) in pairs.iter().enumerate() {
            for (j, (xj, zj)) in pairs.iter().enumerate() {
                let expect = if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                };
                if omega(xi, zj) != expect {
                    return Err(Error::InvalidLogicalBasis(format!(
                        "omega(x{}, z{}) != {}",
                        i + 1,
                        j + 1,
                        expect
                    )));
                }
                if !omega(xi, xj).is_zero() || !omega(zi, zj).is_zero() {
                    return Err(Error::InvalidLogicalBasis(format!(
                        "pair ({}, {}) is not isotropic within its own kind",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(PauliVector, PauliVector)] {
        &self.pairs
    }

    pub fn logical_modes(&self) -> usize {
        self.pairs.len()
    }
}

/// Derive a logical basis from the code alone. Deterministic: the complement
/// basis is canonical and the Gram-Schmidt pivoting is index-ordered.
pub fn logical_basis(code: &StabilizerCode) -> LogicalBasis {
    let pairs = symplectic_gram_schmidt(&code.complement(), code.span())
        .expect("a valid code always admits a hyperbolic basis of W^omega / W");
    LogicalBasis { pairs }
}

/// Where a vector sits relative to a code and a logical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogicalClass {
    /// Inside the stabilizer span `W`: acts trivially on the code space.
    Stabilizer,
    /// In `W^omega` but not `W`. Carries the expansion coefficients
    /// `(a_i, b_i)` of the coset: `v = sum_i a_i x_i + b_i z_i  (mod W)`.
    Logical(Vec<(Scalar, Scalar)>),
    /// Outside `W^omega`: detectable, anticommutes with some generator.
    Outside,
}

/// Classify `v` as stabilizer, logical (with coefficients) or detectable.
pub fn contains_logical(
    code: &StabilizerCode,
    basis: &LogicalBasis,
    v: &PauliVector,
) -> Result<LogicalClass> {
    if v.n() != code.n() {
        return Err(Error::DimensionMismatch(code.n(), v.n()));
    }
    if code.span().contains(v)? {
        return Ok(LogicalClass::Stabilizer);
    }
    if code.generators().iter().any(|u| !omega(u, v).is_zero()) {
        return Ok(LogicalClass::Outside);
    }
    // v = sum a_i x_i + b_i z_i (mod W) with a_i = omega(v, z_i) and
    // b_i = omega(x_i, v), read off from the delta_ij table.
    let coefficients = basis
        .pairs()
        .iter()
        .map(|(x, z)| (omega(v, z), omega(x, v)))
        .collect();
    Ok(LogicalClass::Logical(coefficients))
}

/// Concatenate codes: re-encode every physical mode of `outer` with `inner`.
///
/// `inner` must encode exactly one logical mode. The result acts on
/// `outer.n() * inner.n()` modes; its generators are the inner generators
/// embedded in every block followed by the outer generators with each
/// single-mode component `(s_b, t_b)` replaced by `s_b * x_in + t_b * z_in`
/// in block `b`, where `(x_in, z_in)` is the derived logical pair of the
/// inner code. The outer logicals lift the same way and are returned as the
/// logical basis of the result.
pub fn concatenate(
    outer: &StabilizerCode,
    inner: &StabilizerCode,
) -> Result<(StabilizerCode, LogicalBasis)> {
    if inner.logical_modes() != 1 {
        return Err(Error::UnsupportedInner(inner.logical_modes()));
    }
    let inner_basis = logical_basis(inner);
    let (x_in, z_in) = &inner_basis.pairs()[0];
    let n_in = inner.n();
    let n_out = outer.n();
    let n = n_out * n_in;

    let embed = |block: usize, v: &PauliVector| -> (Vec<Scalar>, Vec<Scalar>) {
        let mut s = vec![Scalar::zero(); n];
        let mut t = vec![Scalar::zero(); n];
        for i in 0..n_in {
            s[block * n_in + i] = v.s()[i].clone();
            t[block * n_in + i] = v.t()[i].clone();
        }
        (s, t)
    };
    let lift_vector = |v: &PauliVector| -> PauliVector {
        let mut s = vec![Scalar::zero(); n];
        let mut t = vec![Scalar::zero(); n];
        for block in 0..n_out {
            let component = &x_in.scaled(&v.s()[block]) + &z_in.scaled(&v.t()[block]);
            let (bs, bt) = embed(block, &component);
            for i in 0..n {
                s[i] = &s[i] + &bs[i];
                t[i] = &t[i] + &bt[i];
            }
        }
        PauliVector::new(s, t).expect("lifted vectors have n_out * n_in modes")
    };

    let mut generators = Vec::with_capacity(n_out * inner.k() + outer.k());
    for block in 0..n_out {
        for g in inner.generators() {
            let (s, t) = embed(block, g);
            generators.push(PauliVector::new(s, t).expect("embedded generator"));
        }
    }
    for g in outer.generators() {
        generators.push(lift_vector(g));
    }

    let code = if generators.is_empty() {
        StabilizerCode::trivial(n)
    } else {
        StabilizerCode::validate(generators)?
    };

    let outer_basis = logical_basis(outer);
    let lifted_pairs: Vec<(PauliVector, PauliVector)> = outer_basis
        .pairs()
        .iter()
        .map(|(x, z)| (lift_vector(x), lift_vector(z)))
        .collect();
    let basis = LogicalBasis::new(&code, lifted_pairs)?;
    Ok((code, basis))
}

/// The nullifier observable of one generator: the linear form
/// `m_j = sum_i s_ij p_i + t_ij q_i` that vanishes on the code space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyndromeObservable {
    index: usize,
    coefficients: PauliVector,
}

impl SyndromeObservable {
    /// 1-based generator index.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Coefficient vector; equals the generator row.
    pub fn coefficients(&self) -> &PauliVector {
        &self.coefficients
    }
}

impl fmt::Display for SyndromeObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{} =", self.index)?;
        let mut first = true;
        let mut term =
            |f: &mut fmt::Formatter<'_>, coeff: &Scalar, var: &str, mode: usize| -> fmt::Result {
                if coeff.is_zero() {
                    return Ok(());
                }
                let sign = if coeff.is_negative() { "-" } else { "+" };
                let mag = coeff.abs();
                if first {
                    first = false;
                    if sign == "-" {
                        write!(f, " -")?;
                    } else {
                        write!(f, " ")?;
                    }
                } else {
                    write!(f, " {sign} ")?;
                }
                if mag.is_one() {
                    write!(f, "{var}{mode}")
                } else {
                    write!(f, "{mag} {var}{mode}")
                }
            };
        for (i, c) in self.coefficients.s().iter().enumerate() {
            term(f, c, "p", i + 1)?;
        }
        for (i, c) in self.coefficients.t().iter().enumerate() {
            term(f, c, "q", i + 1)?;
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

/// One observable per generator, in generator order.
pub fn syndrome_observables(code: &StabilizerCode) -> Vec<SyndromeObservable> {
    code.generators()
        .iter()
        .enumerate()
        .map(|(i, g)| SyndromeObservable {
            index: i + 1,
            coefficients: g.clone(),
        })
        .collect()
}
