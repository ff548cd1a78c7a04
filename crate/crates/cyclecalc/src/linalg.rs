//! Exact linear algebra over the rationals: Gauss-Jordan elimination for
//! solving, inverting and rank computation. Matrices are dense
//! `Vec<Vec<Rational>>` rows; everything here is desk-scale.

use num_traits::Zero;

use crate::rational::Rational;

/// Solve `mat * x = rhs` for square `mat`. Returns `None` when singular.
pub(crate) fn solve(mat: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = mat.len();
    assert_eq!(rhs.len(), n);
    let mut aug: Vec<Vec<Rational>> = mat
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            assert_eq!(row.len(), n);
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x = &*x / &inv;
        }
        for row in 0..n {
            if row != col && !aug[row][col].is_zero() {
                let factor = aug[row][col].clone();
                for k in col..=n {
                    let delta = &factor * &aug[col][k];
                    aug[row][k] = &aug[row][k] - &delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Inverse of a square matrix. `None` when singular.
pub(crate) fn invert(mat: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = mat.len();
    let zero = Rational::zero();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![zero.clone(); n];
        e[j] = crate::rational::rat(1);
        cols.push(solve(mat, &e)?);
    }
    // columns back to rows
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Rank over the rationals of an arbitrary (possibly non-square) matrix.
pub(crate) fn rank(mat: &[Vec<Rational>]) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let cols = mat[0].len();
    let mut m: Vec<Vec<Rational>> = mat.to_vec();
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for k in col..cols {
                    let delta = &factor * &m[r][k];
                    m[i][k] = &m[i][k] - &delta;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn solve_2x2() {
        // [[1,1],[4,8]] x = [1,0]  =>  x = (2, -1) ... check: 2-1=1, 8-8=0
        let mat = vec![vec![rat(1), rat(1)], vec![rat(4), rat(8)]];
        let x = solve(&mat, &[rat(1), rat(0)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(-1)]);
    }

    #[test]
    fn singular_detected() {
        let mat = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve(&mat, &[rat(1), rat(0)]).is_none());
        assert!(invert(&mat).is_none());
        assert_eq!(rank(&mat), 1);
    }

    #[test]
    fn invert_vandermonde() {
        // nodes 1, 2 with exponents 2, 3 (rows scaled Vandermonde)
        let mat = vec![vec![rat(1), rat(1)], vec![rat(4), rat(8)]];
        let inv = invert(&mat).unwrap();
        assert_eq!(inv[0], vec![rat(2), frac(-1, 4)]);
        assert_eq!(inv[1], vec![rat(-1), frac(1, 4)]);
    }

    #[test]
    fn rank_rectangular() {
        let mat = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank(&mat), 2);
        assert_eq!(rank(&[]), 0);
    }
}
