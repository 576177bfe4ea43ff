//! Dense exact linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-reduces `m` in place and returns its rank.
#[allow(clippy::needless_range_loop)]
pub fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for k in c..cols {
                let d = &f * &m[r][k];
                m[i][k] -= d;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Determinant of a square matrix by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix is not square");
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for k in c..n {
                let d = &f * &m[c][k];
                m[i][k] -= d;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(rank(mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(mat(&[&[0, 0, 0]])), 0);
        assert_eq!(rank(mat(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])), 2);
        assert_eq!(determinant(mat(&[&[2, 1], &[1, 1]])), rat(1));
        assert_eq!(determinant(mat(&[&[0, 1], &[1, 0]])), rat(-1));
        assert_eq!(determinant(mat(&[&[1, 2], &[2, 4]])), rat(0));
    }
}
