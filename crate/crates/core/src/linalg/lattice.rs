use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::normal_form::{hnf, snf};
use crate::error::{Error, Result};

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `v / gcd(v)`, keeping the orientation of `v`. Use this for directed edge
/// vectors.
pub fn primitive_part(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = gcd_of(v);
    if g.is_zero() {
        return Err(Error::domain("primitive part of the zero vector"));
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Primitive representative of the line through `v`, signed so the first
/// nonzero entry is positive.
pub fn primitive_direction(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut p = primitive_part(v)?;
    if p.iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        for x in &mut p {
            *x = -std::mem::take(x);
        }
    }
    Ok(p)
}

/// A lattice basis of `span_Q(vectors) ∩ Z^d`, in Hermite normal form.
///
/// Reads the basis off the Smith form `u·M·v = s`: the first `rank` rows of
/// `v⁻¹` generate the saturated row lattice of `M`.
pub fn saturate(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let d = first.len();
    let m = IntMatrix::from_rows(d, vectors.to_vec()).expect("vectors of equal length");
    let smith = snf(&m);
    if smith.rank == 0 {
        return Vec::new();
    }
    let v_inv = smith.v_inverse();
    let basis = IntMatrix::from_fn(smith.rank, d, |i, j| v_inv[(i, j)].clone());
    let h = hnf(&basis);
    (0..h.rank).map(|i| h.h.row(i).to_vec()).collect()
}

/// Lattice basis of the integer kernel `{x ∈ Z^n : a·x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    // u·aᵀ = h; the rows of u against zero rows of h span the left kernel of aᵀ
    let d = hnf(&a.transpose());
    let kernel: Vec<Vec<BigInt>> = (d.rank..a.cols()).map(|i| d.u.row(i).to_vec()).collect();
    if kernel.is_empty() {
        return kernel;
    }
    let k = IntMatrix::from_rows(a.cols(), kernel).expect("kernel rows");
    let h = hnf(&k);
    (0..h.rank).map(|i| h.h.row(i).to_vec()).collect()
}
