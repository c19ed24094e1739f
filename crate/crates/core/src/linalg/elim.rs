//! Determinant, rank and linear solving.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, RatMatrix, RatVector};
use crate::error::{Error, Result};

/// Exact determinant by fraction-free Bareiss elimination. Every division in
/// the inner loop is exact, so no rational ever appears.
pub fn det(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::dimension(
            "det",
            format!("{}x{} is not square", a.rows(), a.cols()),
        ));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap_rows(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    let d = m[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Rank over the rationals.
pub fn rank(a: &RatMatrix) -> usize {
    row_echelon(a.clone()).1.len()
}

/// Rank of an integer matrix, computed fraction-free.
pub fn int_rank(a: &IntMatrix) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        for i in r + 1..rows {
            if m[(i, c)].is_zero() {
                continue;
            }
            let (f, g) = (m[(r, c)].clone(), m[(i, c)].clone());
            for j in c..cols {
                let v = &m[(i, j)] * &f - &m[(r, j)] * &g;
                m[(i, j)] = v;
            }
        }
        r += 1;
    }
    r
}

/// Reduced row echelon form; returns the matrix and its pivot columns.
fn row_echelon(mut m: RatMatrix) -> (RatMatrix, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m[(r, c)].recip();
        for j in c..cols {
            let v = &m[(r, j)] * &inv;
            m[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..cols {
                let v = &m[(i, j)] - &f * &m[(r, j)];
                m[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Some exact solution of `a·x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero, so a full-column-rank system
/// yields its unique solution.
pub fn solve(a: &RatMatrix, b: &[BigRational]) -> Result<Option<RatVector>> {
    if a.rows() != b.len() {
        return Err(Error::dimension(
            "solve",
            format!(
                "{} equations but right-hand side of length {}",
                a.rows(),
                b.len()
            ),
        ));
    }
    let n = a.cols();
    let aug = RatMatrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (red, pivots) = row_echelon(aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[(r, n)].clone();
    }
    Ok(Some(x))
}

pub(crate) fn abs_det(a: &IntMatrix) -> Result<BigInt> {
    det(a).map(|d| d.abs())
}
