//! Continuous-variable stabilizer codes with exact symplectic algebra.
//!
//! Displacement (Heisenberg-Weyl) operators on `n` bosonic modes are indexed
//! by vectors in `R^{2n}`; commutation is governed by the standard symplectic
//! form. A set of `k` pairwise symplectically orthogonal, linearly
//! independent vectors generates an abelian stabilizer group whose joint
//! zero-eigenspace encodes `n - k` logical modes. This crate builds, checks
//! and converts such codes exactly (arbitrary-precision rationals), and
//! simulates shift-error correction in floating point:
//!
//! - [`symplectic`]: vectors, the form, subspaces, complements and the
//!   symplectic Gram-Schmidt construction of hyperbolic logical pairs.
//! - [`code`]: validated stabilizer codes, logical bases, syndrome
//!   observables and code concatenation.
//! - [`catalog`]: a small catalog of named codes (three-, five-, eight- and
//!   nine-mode).
//! - [`format`]: the `cvstab` text format for codes.
//! - [`lift`]: conversion of binary (qubit) check matrices to CV codes by
//!   searching sign assignments that restore exact isotropy.
//! - [`channel`]: shift-error models and measurement noise.
//! - [`decode`]: syndromes, minimum-norm and single-mode decoders, logical
//!   action, and single-mode correctability certification.
//! - [`sim`]: a seeded Monte Carlo harness with CSV output.
//!
//! Construction-side arithmetic never touches floating point, so every
//! validity statement (isotropy, rank, the `delta_ij` pairing table) is an
//! exact equality, not a tolerance check.

pub mod catalog;
pub mod channel;
pub mod code;
pub mod decode;
mod error;
pub mod format;
pub mod lift;
mod linalg;
pub mod numfmt;
pub mod scalar;
pub mod sim;
pub mod symplectic;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use symplectic::{
    commutation_phase, fourier_conjugate, multiply, symplectic_form, symplectic_gram_schmidt,
    FourierConvention, HeisenbergWeylOp, PauliVector, Subspace,
};

pub use code::{
    concatenate, contains_logical, logical_basis, syndrome_observables, LogicalBasis, LogicalClass,
    StabilizerCode, SyndromeObservable,
};

pub use catalog::{builtin, builtin_names, Builtin};
