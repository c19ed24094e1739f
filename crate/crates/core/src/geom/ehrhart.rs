use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::chart::AffineLatticeChart;
use super::points::LatticePointCounter;
use crate::polytope::{FaceRef, Polytope};

/// Polynomial with exact rational coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    pub fn coeffs_padded(&self, len: usize) -> Vec<BigRational> {
        let mut c = self.coeffs.clone();
        c.resize(len.max(c.len()), BigRational::zero());
        c
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_integer(&self, t: impl Into<BigInt>) -> BigRational {
        self.eval(&BigRational::from_integer(t.into()))
    }

    /// The unique polynomial of degree `< values.len()` taking `values[i]` at
    /// `t = i`, via Newton forward differences.
    pub fn interpolate(values: &[BigInt]) -> Self {
        let n = values.len();
        let mut diffs: Vec<BigInt> = values.to_vec();
        let mut leading_diffs = Vec::with_capacity(n);
        for level in 0..n {
            leading_diffs.push(diffs[0].clone());
            for i in 0..n - level - 1 {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
        }
        // Σ_j Δ^j f(0) · C(t, j)
        let mut coeffs = vec![BigRational::zero(); n];
        let mut falling = vec![BigRational::one()]; // t(t-1)...(t-j+1)
        let mut factorial = BigInt::one();
        for (j, dj) in leading_diffs.iter().enumerate() {
            if j > 0 {
                factorial *= j;
                let shift = BigRational::from_integer(BigInt::from(j - 1));
                let mut next = vec![BigRational::zero(); falling.len() + 1];
                for (i, c) in falling.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * &shift;
                }
                falling = next;
            }
            let scale = BigRational::new(dj.clone(), factorial.clone());
            for (i, c) in falling.iter().enumerate() {
                coeffs[i] += c * &scale;
            }
        }
        Self::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    /// Space-separated ascending coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Lattice-point counter for `t·F` in the chart of `F`.
pub(crate) fn face_counter(p: &Polytope, f: FaceRef) -> LatticePointCounter {
    let points = p.face_points(f);
    let chart = AffineLatticeChart::new(&points);
    LatticePointCounter::new(&chart.map_points(&points))
}

/// Ehrhart polynomial of a face: counts of `Z^d ∩ t·F` for `t = 0..=dim F`,
/// interpolated.
pub fn ehrhart(p: &Polytope, f: FaceRef) -> Polynomial {
    if f.dim == 0 {
        return Polynomial::from_integers([1]);
    }
    let counter = face_counter(p, f);
    let values: Vec<BigInt> = std::iter::once(BigInt::one())
        .chain((1..=f.dim).map(|t| counter.count(&BigInt::from(t))))
        .collect();
    Polynomial::interpolate(&values)
}

/// Ehrhart polynomial of the polytope itself.
pub fn ehrhart_polynomial(p: &Polytope) -> Polynomial {
    ehrhart(p, p.face_lattice().top())
}

/// Ehrhart polynomials of every face, indexed like the face lattice levels.
/// Faces are processed in parallel.
pub fn face_ehrhart_polynomials(p: &Polytope) -> Vec<Vec<Polynomial>> {
    let lattice = p.face_lattice();
    (0..=lattice.dim())
        .map(|dim| {
            (0..lattice.faces_of_dim(dim).len())
                .into_par_iter()
                .map(|index| ehrhart(p, FaceRef { dim, index }))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn interpolation_recovers_triangle_numbers() {
        let p = Polynomial::interpolate(&[1.into(), 3.into(), 6.into()]);
        assert_eq!(p.coeffs(), &[q(1, 1), q(3, 2), q(1, 2)]);
        assert_eq!(p.eval_integer(10), q(66, 1));
    }

    #[test]
    fn interpolation_of_cubes() {
        let values: Vec<BigInt> = (0..4).map(|t: i64| BigInt::from((t + 1).pow(3))).collect();
        let p = Polynomial::interpolate(&values);
        assert_eq!(p, Polynomial::from_integers([1, 3, 3, 1]));
        assert_eq!(p.to_string(), "1 3 3 1");
    }

    #[test]
    fn zero_polynomial() {
        let p = Polynomial::new(vec![q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), None);
        assert_eq!(p.coeffs_padded(3).len(), 3);
        assert_eq!(p.to_string(), "0");
    }
}
