//! Exact Gaussian elimination over the rational-function field.

use super::RatFun;
use crate::error::Error;

/// Solve `A x = b` exactly over rational functions.
///
/// Plain Gaussian elimination with exact arithmetic. Pivot rows are chosen
/// among nonzero candidates by lowest denominator degree, then lowest
/// numerator degree, which keeps intermediate fractions small for the
/// triangular-ish weight systems this is used on. The solution is checked by
/// back-substitution before it is returned.
///
/// Returns [`Error::SingularMatrix`] when no unique solution exists.
pub fn solve_linear_system(a: &[Vec<RatFun>], b: &[RatFun]) -> Result<Vec<RatFun>, Error> {
    let m = a.len();
    assert_eq!(b.len(), m, "matrix and right-hand side sizes differ");
    for row in a {
        assert_eq!(row.len(), m, "matrix is not square");
    }

    // Augmented matrix.
    let mut mat: Vec<Vec<RatFun>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..m {
        let pivot = (col..m)
            .filter(|&r| !mat[r][col].is_zero())
            .min_by_key(|&r| {
                let e = &mat[r][col];
                (e.den().degree().unwrap_or(0), e.num().degree().unwrap_or(0))
            })
            .ok_or(Error::SingularMatrix)?;
        mat.swap(col, pivot);

        let inv = mat[col][col].inv().expect("pivot is nonzero");
        for j in col..=m {
            mat[col][j] = &mat[col][j] * &inv;
        }
        for r in 0..m {
            if r == col || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for j in col..=m {
                let t = &factor * &mat[col][j];
                mat[r][j] = &mat[r][j] - &t;
            }
        }
    }

    let x: Vec<RatFun> = mat.into_iter().map(|row| row[m].clone()).collect();

    // The elimination is exact, so a residual here means a programming error,
    // not a numerical one.
    for (row, rhs) in a.iter().zip(b) {
        let mut acc = RatFun::zero();
        for (coeff, xi) in row.iter().zip(&x) {
            acc = &acc + &(coeff * xi);
        }
        assert_eq!(&acc, rhs, "back-substitution residual is nonzero");
    }

    Ok(x)
}
