//! Exact integer linear algebra: Bareiss fraction-free elimination.
//!
//! Matrices are dense `Vec<Vec<BigInt>>` in row-major order. Sizes here are
//! bounded by partition counts (77 rows at degree 12), so no attempt is made
//! at anything cleverer than cubic elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type IntMatrix = Vec<Vec<BigInt>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: matrix has {rows} rows, right-hand side has {rhs}")]
    Dimension { rows: usize, rhs: usize },
    #[error("inverse is not integral")]
    NotIntegral,
}

fn check_square(a: &[Vec<BigInt>]) -> Result<usize, LinalgError> {
    let n = a.len();
    for row in a {
        if row.len() != n {
            return Err(LinalgError::NotSquare { rows: n, cols: row.len() });
        }
    }
    Ok(n)
}

/// Runs Bareiss elimination on `m` (n rows, at least n columns) in place.
///
/// Returns the sign of the row permutation, or `None` when the leading
/// n×n block is singular. On success `m[n-1][n-1]` is ± the determinant of
/// that block and `m` is upper triangular in its first n columns.
fn bareiss(m: &mut IntMatrix, n: usize) -> Option<i32> {
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero())?;
            m.swap(k, swap);
            sign = -sign;
        }
        let width = m[k].len();
        for i in k + 1..n {
            for j in k + 1..width {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Some(sign)
}

pub fn determinant(a: &[Vec<BigInt>]) -> Result<BigInt, LinalgError> {
    let n = check_square(a)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.to_vec();
    match bareiss(&mut m, n) {
        Some(sign) => Ok(&m[n - 1][n - 1] * sign),
        None => Ok(BigInt::zero()),
    }
}

/// Solves `A X = B` for several right-hand sides at once, exactly over Q.
///
/// `rhs[k]` is the k-th right-hand column.
pub fn solve_many(a: &[Vec<BigInt>], rhs: &[Vec<BigInt>]) -> Result<Vec<Vec<BigRational>>, LinalgError> {
    let n = check_square(a)?;
    for b in rhs {
        if b.len() != n {
            return Err(LinalgError::Dimension { rows: n, rhs: b.len() });
        }
    }
    let mut m: IntMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(rhs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    bareiss(&mut m, n).ok_or(LinalgError::Singular)?;

    let mut solutions = Vec::with_capacity(rhs.len());
    for k in 0..rhs.len() {
        let col = n + k;
        let mut x = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = BigRational::from_integer(m[i][col].clone());
            for j in i + 1..n {
                acc -= BigRational::from_integer(m[i][j].clone()) * &x[j];
            }
            x[i] = acc / BigRational::from_integer(m[i][i].clone());
        }
        solutions.push(x);
    }
    Ok(solutions)
}

/// Solves `A x = b` exactly over Q.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<Vec<BigRational>, LinalgError> {
    Ok(solve_many(a, &[b.to_vec()])?.remove(0))
}

/// Exact inverse over Q.
pub fn inverse_rational(a: &[Vec<BigInt>]) -> Result<Vec<Vec<BigRational>>, LinalgError> {
    let n = check_square(a)?;
    let identity: IntMatrix =
        (0..n).map(|k| (0..n).map(|i| if i == k { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let cols = solve_many(a, &identity)?;
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Exact inverse, required to have integer entries.
pub fn inverse_integral(a: &[Vec<BigInt>]) -> Result<IntMatrix, LinalgError> {
    inverse_rational(a)?
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|q| if q.is_integer() { Ok(q.to_integer()) } else { Err(LinalgError::NotIntegral) })
                .collect()
        })
        .collect()
}

/// Inverse of a lower unitriangular integer matrix by forward substitution,
/// or `None` if the matrix is not of that shape.
pub fn inverse_unit_lower(a: &[Vec<BigInt>]) -> Option<IntMatrix> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n || !row[i].is_one() || row[i + 1..].iter().any(|x| !x.is_zero()) {
            return None;
        }
    }
    let mut inv = identity(n);
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..i {
            // (L X)_{ij} = 0 for j < i gives X_{ij} = -Σ_{j<=k<i} L_{ik} X_{kj}
            let s: BigInt = (j..i).map(|k| &a[i][k] * &inv[k][j]).sum();
            inv[i][j] = -s;
        }
    }
    Some(inv)
}

pub fn transpose(a: &[Vec<BigInt>]) -> IntMatrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn multiply(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b.iter()).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}
