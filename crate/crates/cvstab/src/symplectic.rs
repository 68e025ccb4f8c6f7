//! Symplectic linear algebra over `R^{2n}` with exact rational scalars.
//!
//! A displacement operator on `n` modes is indexed by a vector
//! `v = (s_1..s_n, t_1..t_n)`: the `s` half generates momentum-type shifts
//! (`X`, translating position) and the `t` half position-type shifts (`Z`,
//! translating momentum). Two operators commute up to the phase
//! `exp(i*pi*omega(v, w))` where `omega` is the standard symplectic form
//!
//! ```text
//! omega(v, w) = sum_i (v.s_i * w.t_i - w.s_i * v.t_i)
//! ```
//!
//! Everything in this module is exact: subspaces are kept in reduced row
//! echelon form so that span equality is plain structural equality, and
//! `omega = 0` is a decidable test. All types are immutable once built.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{mod_two, Scalar};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A vector in `R^{2n}` indexing a Heisenberg-Weyl displacement operator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliVector {
    s: Vec<Scalar>,
    t: Vec<Scalar>,
}

impl PauliVector {
    pub fn new(s: Vec<Scalar>, t: Vec<Scalar>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyVector);
        }
        if s.len() != t.len() {
            return Err(Error::DimensionMismatch(s.len(), t.len()));
        }
        Ok(Self { s, t })
    }

    /// Convenience constructor for integer-valued vectors.
    ///
    /// Panics on empty or unequal halves; intended for literals.
    pub fn from_ints(s: &[i64], t: &[i64]) -> Self {
        let s = s.iter().map(|&x| crate::scalar::rat(x)).collect();
        let t = t.iter().map(|&x| crate::scalar::rat(x)).collect();
        Self::new(s, t).expect("from_ints requires two equal nonempty halves")
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "a vector must have at least one mode");
        Self {
            s: vec![Scalar::zero(); n],
            t: vec![Scalar::zero(); n],
        }
    }

    /// Number of modes.
    pub fn n(&self) -> usize {
        self.s.len()
    }

    /// Momentum-shift half (coefficients on the `p` observables).
    pub fn s(&self) -> &[Scalar] {
        &self.s
    }

    /// Position-shift half (coefficients on the `q` observables).
    pub fn t(&self) -> &[Scalar] {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.s.iter().all(Zero::is_zero) && self.t.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Self {
            s: self.s.iter().map(|x| x * c).collect(),
            t: self.t.iter().map(|x| x * c).collect(),
        }
    }

    /// Flatten to `(s_1..s_n, t_1..t_n)` coordinates.
    pub(crate) fn coords(&self) -> Vec<Scalar> {
        let mut v = self.s.clone();
        v.extend(self.t.iter().cloned());
        v
    }

    pub(crate) fn from_coords(n: usize, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), 2 * n);
        Self {
            s: coords[..n].to_vec(),
            t: coords[n..].to_vec(),
        }
    }
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Scalar]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} | {}", join(&self.s), join(&self.t))
    }
}

impl Add for &PauliVector {
    type Output = PauliVector;
    fn add(self, rhs: &PauliVector) -> PauliVector {
        assert_eq!(self.n(), rhs.n(), "mode count mismatch");
        PauliVector {
            s: self.s.iter().zip(&rhs.s).map(|(a, b)| a + b).collect(),
            t: self.t.iter().zip(&rhs.t).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PauliVector {
    type Output = PauliVector;
    fn sub(self, rhs: &PauliVector) -> PauliVector {
        assert_eq!(self.n(), rhs.n(), "mode count mismatch");
        PauliVector {
            s: self.s.iter().zip(&rhs.s).map(|(a, b)| a - b).collect(),
            t: self.t.iter().zip(&rhs.t).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &PauliVector {
    type Output = PauliVector;
    fn neg(self) -> PauliVector {
        PauliVector {
            s: self.s.iter().map(|x| -x).collect(),
            t: self.t.iter().map(|x| -x).collect(),
        }
    }
}

/// The standard symplectic form `sum_i (v.s_i w.t_i - w.s_i v.t_i)`.
pub fn symplectic_form(v: &PauliVector, w: &PauliVector) -> Result<Scalar> {
    if v.n() != w.n() {
        return Err(Error::DimensionMismatch(v.n(), w.n()));
    }
    Ok(omega(v, w))
}

pub(crate) fn omega(v: &PauliVector, w: &PauliVector) -> Scalar {
    debug_assert_eq!(v.n(), w.n());
    let mut acc = Scalar::zero();
    for i in 0..v.n() {
        acc = acc + &v.s[i] * &w.t[i] - &w.s[i] * &v.t[i];
    }
    acc
}

/// A displacement operator: a vector together with a scalar phase in units
/// of pi, kept reduced into `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergWeylOp {
    vector: PauliVector,
    phase: Scalar,
}

impl HeisenbergWeylOp {
    pub fn new(vector: PauliVector, phase: Scalar) -> Self {
        Self {
            vector,
            phase: mod_two(&phase),
        }
    }

    pub fn from_vector(vector: PauliVector) -> Self {
        Self {
            vector,
            phase: Scalar::zero(),
        }
    }

    pub fn vector(&self) -> &PauliVector {
        &self.vector
    }

    /// Phase in units of pi, in `[0, 2)`.
    pub fn phase(&self) -> &Scalar {
        &self.phase
    }
}

/// Commutation phase of two operators in units of pi, reduced mod 2.
/// Zero means the operators commute.
pub fn commutation_phase(a: &HeisenbergWeylOp, b: &HeisenbergWeylOp) -> Result<Scalar> {
    Ok(mod_two(&symplectic_form(&a.vector, &b.vector)?))
}

/// Operator product. Vectors add; phases add plus half the symplectic form,
/// so that `multiply(a, b)` and `multiply(b, a)` differ by exactly
/// `exp(i*pi*omega)`.
pub fn multiply(a: &HeisenbergWeylOp, b: &HeisenbergWeylOp) -> Result<HeisenbergWeylOp> {
    let w = symplectic_form(&a.vector, &b.vector)?;
    let two = crate::scalar::rat(2);
    let phase = &a.phase + &b.phase + w / two;
    Ok(HeisenbergWeylOp::new(&a.vector + &b.vector, phase))
}

/// Convention for the per-mode Fourier action on vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FourierConvention {
    /// `(s|t) -> (-t|s)`: preserves the symplectic form; applying it twice
    /// negates the vector, four times restores it.
    #[default]
    Symplectic,
    /// `(s|t) -> (t|s)`: the plain exchange of the two halves. Antisymplectic
    /// (negates the form), but matches the usual "swap X and Z" reading.
    Swap,
}

/// Apply a Fourier transform on every mode to the vector.
pub fn fourier_conjugate(v: &PauliVector, convention: FourierConvention) -> PauliVector {
    match convention {
        FourierConvention::Symplectic => PauliVector {
            s: v.t.iter().map(|x| -x).collect(),
            t: v.s.clone(),
        },
        FourierConvention::Swap => PauliVector {
            s: v.t.clone(),
            t: v.s.clone(),
        },
    }
}

/// A linear subspace of `R^{2n}` held as a canonical row-reduced basis.
///
/// Canonical form is the reduced row echelon form of any spanning set, so
/// two subspaces are equal as values exactly when they have the same span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    basis: Vec<PauliVector>,
}

impl Subspace {
    /// Canonicalized span of the given vectors. Fails on an empty list
    /// because the mode count would be unknown.
    pub fn span(rows: &[PauliVector]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptySpan);
        };
        let n = first.n();
        for row in rows {
            if row.n() != n {
                return Err(Error::DimensionMismatch(n, row.n()));
            }
        }
        let mut m: Vec<linalg::Row> = rows.iter().map(PauliVector::coords).collect();
        linalg::rref(&mut m);
        let basis = m
            .iter()
            .map(|row| PauliVector::from_coords(n, row))
            .collect();
        Ok(Self { n, basis })
    }

    /// The zero subspace of an `n`-mode system.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            n,
            basis: Vec::new(),
        }
    }

    /// All of `R^{2n}`.
    pub fn full(n: usize) -> Self {
        assert!(n >= 1);
        let mut basis = Vec::with_capacity(2 * n);
        for c in 0..2 * n {
            let mut coords = vec![Scalar::zero(); 2 * n];
            coords[c] = Scalar::one();
            basis.push(PauliVector::from_coords(n, &coords));
        }
        Self { n, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PauliVector] {
        &self.basis
    }

    /// Membership test; the zero vector belongs to every subspace.
    pub fn contains(&self, v: &PauliVector) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::DimensionMismatch(self.n, v.n()));
        }
        if v.is_zero() {
            return Ok(true);
        }
        let mut m: Vec<linalg::Row> = self.basis.iter().map(PauliVector::coords).collect();
        m.push(v.coords());
        Ok(linalg::rank(m) == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The symplectic complement `W^omega = { v : omega(v, u) = 0 for all u in W }`.
    /// Its dimension is always `2n - dim W`.
    pub fn symplectic_complement(&self) -> Subspace {
        // omega(v, u) = (u.t | -u.s) . (v.s | v.t), so each basis vector of W
        // contributes one linear constraint row in those flipped coordinates.
        let constraints: Vec<linalg::Row> = self
            .basis
            .iter()
            .map(|u| {
                let mut row: Vec<Scalar> = u.t().to_vec();
                row.extend(u.s().iter().map(|x| -x));
                row
            })
            .collect();
        let null = linalg::nullspace(&constraints, 2 * self.n);
        let rows: Vec<PauliVector> = null
            .iter()
            .map(|row| PauliVector::from_coords(self.n, row))
            .collect();
        if rows.is_empty() {
            Subspace::zero(self.n)
        } else {
            Subspace::span(&rows).expect("nullspace rows share the mode count")
        }
    }

    /// True when omega vanishes on every pair of basis vectors.
    pub fn is_isotropic(&self) -> bool {
        for (i, u) in self.basis.iter().enumerate() {
            for v in &self.basis[i + 1..] {
                if !omega(u, v).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Extract hyperbolic pairs `(x_i, z_i)` spanning `w_omega / w`.
///
/// Requires `w` isotropic, `w` contained in `w_omega`, and the quotient
/// dimension even. Returns `(dim w_omega - dim w) / 2` pairs satisfying
/// `omega(x_i, x_j) = omega(z_i, z_j) = 0` and `omega(x_i, z_j) = delta_ij`
/// exactly. Pivoting is deterministic: the first basis pair (in row order)
/// with a nonzero form is taken, and `z` is rescaled by the inverse form.
pub fn symplectic_gram_schmidt(
    w_omega: &Subspace,
    w: &Subspace,
) -> Result<Vec<(PauliVector, PauliVector)>> {
    if w_omega.n() != w.n() {
        return Err(Error::DimensionMismatch(w_omega.n(), w.n()));
    }
    if !w.is_isotropic() {
        return Err(Error::NotIsotropic);
    }
    if !w.is_subspace_of(w_omega)? {
        return Err(Error::NotASubspace);
    }
    let quotient = w_omega.dim() - w.dim();
    if !quotient.is_multiple_of(2) {
        return Err(Error::OddQuotient(quotient));
    }

    let mut pool: Vec<PauliVector> = w_omega.basis().to_vec();
    let mut pairs = Vec::with_capacity(quotient / 2);
    loop {
        let mut found = None;
        'scan: for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                let c = omega(&pool[i], &pool[j]);
                if !c.is_zero() {
                    found = Some((i, j, c));
                    break 'scan;
                }
            }
        }
        let Some((i, j, c)) = found else {
            break;
        };
        let x = pool[i].clone();
        let z = pool[j].scaled(&c.recip());
        pool.remove(j);
        pool.remove(i);
        // Make the rest of the pool symplectically orthogonal to the pair.
        for v in pool.iter_mut() {
            let a = omega(v, &z);
            let b = omega(v, &x);
            let mut next = &*v - &x.scaled(&a);
            next = &next + &z.scaled(&b);
            *v = next;
        }
        pairs.push((x, z));
    }

    // What is left of the pool spans the radical of the restricted form,
    // which must be w itself for the pairs to span the quotient.
    if pairs.len() != quotient / 2 {
        return Err(Error::DegenerateQuotient);
    }
    for v in &pool {
        if !w.contains(v)? {
            return Err(Error::DegenerateQuotient);
        }
    }
    Ok(pairs)
}
