//! Hermite and Smith normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Row-style Hermite normal form `u · a = h`.
///
/// `h` is upper echelon with strictly increasing pivot columns, positive
/// pivots, and every entry above a pivot reduced into `[0, pivot)`. Zero rows
/// sit at the bottom. `u` is unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteDecomposition {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Smith normal form `u · a · v = s` with a divisibility chain on the
/// diagonal of `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// `v⁻¹`, maintained alongside `v` during the reduction.
    pub fn v_inverse(&self) -> &IntMatrix {
        &self.v_inv
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

// row_a -= q * row_b
fn row_axpy(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        let v = &m[(a, j)] - q * &m[(b, j)];
        m[(a, j)] = v;
    }
}

fn col_axpy(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        let v = &m[(i, a)] - q * &m[(i, b)];
        m[(i, a)] = v;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for x in m.row_mut(r) {
        *x = -std::mem::take(x);
    }
}

pub fn hnf(a: &IntMatrix) -> HermiteDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c below row r until a single nonzero entry remains.
        loop {
            let best = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            row_axpy(&mut h, i, r, &q);
            row_axpy(&mut u, i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteDecomposition {
        h,
        u,
        rank: r,
        pivots,
    }
}

pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Column op col_a -= q col_b on `v` is undone by row_b += q row_a on `v_inv`.
    let col_op = |s: &mut IntMatrix,
                  v: &mut IntMatrix,
                  vi: &mut IntMatrix,
                  a: usize,
                  b: usize,
                  q: &BigInt| {
        col_axpy(s, a, b, q);
        col_axpy(v, a, b, q);
        row_axpy(vi, b, a, &-q);
    };

    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if s[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            for i in t + 1..rows {
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                row_axpy(&mut s, i, t, &q);
                row_axpy(&mut u, i, t, &q);
            }
            for j in t + 1..cols {
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                col_op(&mut s, &mut v, &mut v_inv, j, t, &q);
            }
            // a remainder smaller than the pivot moves into pivot position
            let rem_row = (t + 1..rows).find(|&i| !s[(i, t)].is_zero());
            let rem_col = (t + 1..cols).find(|&j| !s[(t, j)].is_zero());
            if let Some(i) = rem_row {
                s.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }
            if let Some(j) = rem_col {
                s.swap_cols(t, j);
                v.swap_cols(t, j);
                v_inv.swap_rows(t, j);
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)])));
            match offender {
                Some(i) => {
                    // row_t += row_i, then reduce again
                    row_axpy(&mut s, t, i, &BigInt::from(-1));
                    row_axpy(&mut u, t, i, &BigInt::from(-1));
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }
    SmithDecomposition {
        s,
        u,
        v,
        v_inv,
        rank: t,
    }
}
