//! Helpers shared by the integration test binaries: an independent
//! brute-force nullspace and a seeded generator of random valid codes.
//! Each test binary uses its own subset, so allow the remainder to be dead.
#![allow(dead_code)]

use cvstab::scalar::rat;
use cvstab::{PauliVector, Scalar, StabilizerCode, Subspace};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Textbook left-nullspace computation, deliberately different from the
/// library's free-column construction: row-reduce `[A^T | I]`; the identity
/// part of every row whose `A^T` part vanished is a nullspace vector of `A`.
pub fn oracle_nullspace(a: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let m = a.len();
    let mut b: Vec<Vec<Scalar>> = (0..ncols)
        .map(|c| {
            let mut row: Vec<Scalar> = (0..m).map(|r| a[r][c].clone()).collect();
            row.extend((0..ncols).map(|j| {
                if j == c {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            row
        })
        .collect();
    let mut pivot_row = 0usize;
    for col in 0..m {
        if pivot_row == ncols {
            break;
        }
        let Some(p) = (pivot_row..ncols).find(|&r| !b[r][col].is_zero()) else {
            continue;
        };
        b.swap(pivot_row, p);
        let pivot = b[pivot_row][col].clone();
        let pivot_vec = b[pivot_row].clone();
        for (r, row) in b.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = &row[col] / &pivot;
                for (x, pv) in row.iter_mut().zip(&pivot_vec) {
                    *x = &*x - pv * &f;
                }
            }
        }
        pivot_row += 1;
    }
    b.iter()
        .filter(|row| row[..m].iter().all(Zero::is_zero))
        .map(|row| row[m..].to_vec())
        .collect()
}

/// The constraint matrix whose nullspace is the symplectic complement of the
/// span of `rows`: one row `(u.t | -u.s)` per vector.
pub fn complement_constraints(rows: &[PauliVector]) -> Vec<Vec<Scalar>> {
    rows.iter()
        .map(|u| {
            let mut row: Vec<Scalar> = u.t().to_vec();
            row.extend(u.s().iter().map(|x| -x));
            row
        })
        .collect()
}

pub fn vector_from_coords(n: usize, coords: &[Scalar]) -> PauliVector {
    PauliVector::new(coords[..n].to_vec(), coords[n..].to_vec()).expect("2n coordinates")
}

/// Random vector with small integer entries.
pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> PauliVector {
    loop {
        let s: Vec<Scalar> = (0..n).map(|_| rat(rng.random_range(-3..=3))).collect();
        let t: Vec<Scalar> = (0..n).map(|_| rat(rng.random_range(-3..=3))).collect();
        let v = PauliVector::new(s, t).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random valid stabilizer code: rows are drawn from the running symplectic
/// complement, so isotropy holds by construction; dependent draws retry.
pub fn random_valid_code(rng: &mut ChaCha8Rng, n: usize, k: usize) -> StabilizerCode {
    assert!(k >= 1 && k <= n);
    let mut rows: Vec<PauliVector> = Vec::new();
    let mut guard = 0;
    while rows.len() < k {
        guard += 1;
        assert!(guard < 10_000, "random code generation stalled");
        let pool = if rows.is_empty() {
            Subspace::full(n)
        } else {
            Subspace::span(&rows).unwrap().symplectic_complement()
        };
        let mut v = PauliVector::zero(n);
        for b in pool.basis() {
            let c = rat(rng.random_range(-2..=2));
            v = &v + &b.scaled(&c);
        }
        if v.is_zero() {
            continue;
        }
        let mut attempt = rows.clone();
        attempt.push(v);
        if StabilizerCode::validate(attempt.clone()).is_ok() {
            rows = attempt;
        }
    }
    StabilizerCode::validate(rows).unwrap()
}
