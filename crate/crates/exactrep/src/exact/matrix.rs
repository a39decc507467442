//! Dense rational matrices and exact rank.

use num::{One, Zero};

use super::Rational;

/// A dense matrix of rationals, stored row-major.
pub type Matrix = Vec<Vec<Rational>>;

/// The `n x n` identity matrix.
pub fn mat_identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_is_identity(m: &Matrix) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

/// Matrix product `a * b`.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let inner = b.len();
    assert!(a.iter().all(|r| r.len() == inner), "shape mismatch");
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    let t = aik * &b[k][j];
                    out[i][j] += t;
                }
            }
        }
    }
    out
}

/// Exact rank of a rectangular rational matrix via Gaussian elimination.
pub fn matrix_rank(m: &Matrix) -> usize {
    let mut a: Matrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        let inv = a[row][col].clone().recip();
        for j in col..cols {
            let v = &a[row][j] * &inv;
            a[row][j] = v;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..cols {
                    let sub = &factor * &a[row][j];
                    a[r][j] -= sub;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|v| rat(*v)).collect())
            .collect()
    }

    #[test]
    fn rank_of_identity() {
        assert_eq!(matrix_rank(&mat_identity(3)), 3);
    }

    #[test]
    fn rank_of_zero_matrix() {
        assert_eq!(matrix_rank(&m(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn rank_of_proportional_rows() {
        assert_eq!(matrix_rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn rank_of_rectangular() {
        assert_eq!(matrix_rank(&m(&[&[1, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(matrix_rank(&m(&[&[1, 2], &[3, 4], &[4, 6]])), 2);
    }

    #[test]
    fn mat_mul_against_hand_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(mat_mul(&a, &b), m(&[&[2, 1], &[4, 3]]));
        assert!(mat_is_identity(&mat_mul(&b, &b)));
    }
}
