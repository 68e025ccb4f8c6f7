//! Exact Gauss-Jordan elimination over the rationals.
//!
//! Everything here works on dense row vectors of [`Scalar`]. Matrices are
//! tiny (at most a few dozen rows/columns) so no pivoting heuristics are
//! needed; exactness makes every rank decision unambiguous.

use crate::scalar::Scalar;
use num_traits::{One, Zero};

pub(crate) type Row = Vec<Scalar>;

/// Reduce `rows` to the unique reduced row echelon form of their span.
/// Zero rows are dropped. Returns the pivot column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone().recip();
        for x in rows[r][c..].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = &*x - p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(mut rows: Vec<Row>) -> usize {
    rref(&mut rows).len()
}

/// Canonical basis of `{ x : M x = 0 }` for a matrix given by rows of
/// length `ncols`. One basis vector per free column of the RREF.
pub(crate) fn nullspace(matrix: &[Row], ncols: usize) -> Vec<Row> {
    let mut m = matrix.to_vec();
    let pivots = rref(&mut m);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in 0..ncols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![Scalar::zero(); ncols];
        v[f] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse of a square matrix, or `None` if singular.
pub(crate) fn invert(matrix: &[Row]) -> Option<Vec<Row>> {
    let k = matrix.len();
    let mut aug: Vec<Row> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), k, "invert expects a square matrix");
            let mut r = row.clone();
            r.extend((0..k).map(|j| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != k || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn rows(data: &[&[i64]]) -> Vec<Row> {
        data.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = rows(&[&[2, 4, 0], &[1, 2, 1]]);
        let mut b = rows(&[&[1, 2, 1], &[3, 6, 1]]);
        rref(&mut a);
        rref(&mut b);
        assert_eq!(a, b);
        assert_eq!(a, rows(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(rows(&[&[1, 0], &[0, 1], &[1, 1]])), 2);
        assert_eq!(rank(rows(&[&[0, 0]])), 0);
        assert_eq!(rank(Vec::new()), 0);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let m = rows(&[&[1, -1, 0, 0], &[0, 1, -1, 0]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot: Scalar = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn invert_round_trips() {
        let m = rows(&[&[2, 1], &[1, 1]]);
        let inv = invert(&m).unwrap();
        let prod: Vec<Row> = (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| {
                        (0..2)
                            .map(|l| &m[i][l] * &inv[l][j])
                            .fold(Scalar::zero(), |a, b| a + b)
                    })
                    .collect()
            })
            .collect();
        assert_eq!(prod, rows(&[&[1, 0], &[0, 1]]));
        assert!(invert(&rows(&[&[1, 2], &[2, 4]])).is_none());
    }
}
