use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::{saturate, IntMatrix};
use crate::polytope::{FaceRef, Polytope};

/// Integer coordinates on `Z^d ∩ aff(F)`.
///
/// `basis` is the Hermite-reduced lattice basis of the saturation of
/// `lin(F - origin)`, so lattice points of the affine hull correspond exactly
/// to integer coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLatticeChart {
    origin: Vec<BigInt>,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl AffineLatticeChart {
    /// Chart of `aff(points)` with origin `points[0]`.
    pub fn new(points: &[Vec<BigInt>]) -> Self {
        let origin = points[0].clone();
        let d = origin.len();
        let diffs: Vec<Vec<BigInt>> = points[1..]
            .iter()
            .map(|p| p.iter().zip(&origin).map(|(a, b)| a - b).collect())
            .collect();
        let rows = saturate(&diffs);
        let pivots = rows
            .iter()
            .map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero basis row")
            })
            .collect();
        let basis = IntMatrix::from_rows(d, rows).expect("basis rows");
        AffineLatticeChart {
            origin,
            basis,
            pivots,
        }
    }

    pub fn of_face(p: &Polytope, f: FaceRef) -> Self {
        Self::new(&p.face_points(f))
    }

    pub fn of_polytope(p: &Polytope) -> Self {
        Self::new(&p.vertices().to_rows())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn origin(&self) -> &[BigInt] {
        &self.origin
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Coordinates of `x` in the chart, or `None` when `x ∉ aff(F)`.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigRational>> {
        let rel: Vec<BigInt> = x.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        let k = self.dim();
        let mut c: Vec<BigRational> = Vec::with_capacity(k);
        // echelon basis: the pivot columns form a lower-triangular system
        for j in 0..k {
            let p = self.pivots[j];
            let mut acc = BigRational::from_integer(rel[p].clone());
            for (i, ci) in c.iter().enumerate() {
                acc -= ci * &self.basis[(i, p)];
            }
            c.push(acc / &self.basis[(j, p)]);
        }
        let consistent = (0..rel.len()).all(|col| {
            let mut acc = BigRational::zero();
            for (i, ci) in c.iter().enumerate() {
                acc += ci * &self.basis[(i, col)];
            }
            acc == BigRational::from_integer(rel[col].clone())
        });
        consistent.then_some(c)
    }

    /// Integer chart coordinates, or `None` unless `x ∈ Z^d ∩ aff(F)`.
    pub fn lattice_coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.coordinates(x)?;
        c.into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect()
    }

    /// Inverse of [`AffineLatticeChart::lattice_coordinates`].
    pub fn point(&self, c: &[BigInt]) -> Vec<BigInt> {
        let mut x = self.origin.clone();
        for (i, ci) in c.iter().enumerate() {
            for (xj, bj) in x.iter_mut().zip(self.basis.row(i)) {
                *xj += ci * bj;
            }
        }
        x
    }

    /// Chart coordinates of points known to lie in `Z^d ∩ aff(F)`.
    pub(crate) fn map_points(&self, points: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        points
            .iter()
            .map(|p| {
                self.lattice_coordinates(p)
                    .expect("point lies in the lattice of the chart")
            })
            .collect()
    }
}
