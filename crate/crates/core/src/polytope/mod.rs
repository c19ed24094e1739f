//! Lattice polytopes given by their vertices.

mod faces;
mod hull;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use faces::{Face, FaceLattice, FaceRef};
pub(crate) use hull::convex_hull;
pub use hull::{HRep, Halfspace};

/// A lattice polytope. Vertices are fixed at construction; facets are
/// computed eagerly (they are needed to strip redundant points), the face
/// lattice lazily on first use.
#[derive(Debug)]
pub struct Polytope {
    vertices: IntMatrix,
    dim: usize,
    hrep: HRep,
    incidence: Vec<BitSet>,
    lattice: OnceLock<FaceLattice>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        Polytope {
            vertices: self.vertices.clone(),
            dim: self.dim,
            hrep: self.hrep.clone(),
            incidence: self.incidence.clone(),
            lattice: self.lattice.clone(),
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

/// Input rows that [`Polytope::from_points`] dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stripped {
    pub duplicates: Vec<usize>,
    pub non_extreme: Vec<usize>,
}

impl Stripped {
    pub fn is_empty(&self) -> bool {
        self.duplicates.is_empty() && self.non_extreme.is_empty()
    }
}

impl Polytope {
    /// Convex hull of `rows`; duplicate and non-extreme rows are removed and
    /// the surviving rows keep their input order.
    pub fn from_vertices(rows: &IntMatrix) -> Result<Polytope> {
        Self::from_points(rows).map(|(p, _)| p)
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Polytope> {
        Self::from_vertices(&IntMatrix::from_i64_rows(rows)?)
    }

    /// Like [`Polytope::from_vertices`], but reports which rows were dropped.
    pub fn from_points(rows: &IntMatrix) -> Result<(Polytope, Stripped)> {
        if rows.rows() == 0 {
            return Err(Error::domain("a polytope needs at least one point"));
        }
        let mut stripped = Stripped::default();
        let mut kept: Vec<usize> = Vec::with_capacity(rows.rows());
        for i in 0..rows.rows() {
            if kept.iter().any(|&k| rows.row(k) == rows.row(i)) {
                stripped.duplicates.push(i);
            } else {
                kept.push(i);
            }
        }
        let points: Vec<Vec<BigInt>> = kept.iter().map(|&i| rows.row(i).to_vec()).collect();
        let hull = hull::convex_hull(&points);

        let mut is_extreme = vec![false; kept.len()];
        for &e in &hull.extreme {
            is_extreme[e] = true;
        }
        for (k, &i) in kept.iter().enumerate() {
            if !is_extreme[k] {
                stripped.non_extreme.push(i);
            }
        }

        let vertices = IntMatrix::from_rows(
            rows.cols(),
            hull.extreme.iter().map(|&e| points[e].clone()).collect(),
        )?;
        let n = vertices.rows();
        let incidence = hull
            .incidence
            .iter()
            .map(|z| {
                let mut s = BitSet::new(n);
                for (new, &old) in hull.extreme.iter().enumerate() {
                    if z.contains(old) {
                        s.insert(new);
                    }
                }
                s
            })
            .collect();

        Ok((
            Polytope {
                vertices,
                dim: hull.dim,
                hrep: hull.hrep,
                incidence,
                lattice: OnceLock::new(),
            },
            stripped,
        ))
    }

    pub fn vertices(&self) -> &IntMatrix {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[BigInt] {
        self.vertices.row(i)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices.cols()
    }

    /// Intrinsic dimension: the rank of the vertex differences.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &HRep {
        &self.hrep
    }

    /// Vertex indices on each inequality of [`Polytope::facets`].
    pub fn facet_vertices(&self) -> Vec<Vec<usize>> {
        self.incidence.iter().map(|s| s.iter().collect()).collect()
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.lattice
            .get_or_init(|| FaceLattice::build(self.n_vertices(), self.dim, &self.incidence))
    }

    /// Vertices of a face as rows.
    pub fn face_points(&self, f: FaceRef) -> Vec<Vec<BigInt>> {
        self.face_lattice()
            .face(f)
            .vertices
            .iter()
            .map(|&i| self.vertex(i).to_vec())
            .collect()
    }

    /// A polytope is simple when every vertex lies on exactly `dim` edges.
    pub fn is_simple(&self) -> bool {
        let mut degree = vec![0usize; self.n_vertices()];
        for e in self.face_lattice().faces_of_dim(1) {
            for &v in &e.vertices {
                degree[v] += 1;
            }
        }
        degree.iter().all(|&k| k == self.dim)
    }

    /// Number of edges at each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut degree = vec![0usize; self.n_vertices()];
        for e in self.face_lattice().faces_of_dim(1) {
            for &v in &e.vertices {
                degree[v] += 1;
            }
        }
        degree
    }

    pub fn contains(&self, x: &[BigRational]) -> Result<bool> {
        if x.len() != self.ambient_dim() {
            return Err(Error::dimension(
                "contains",
                format!("point of length {} in R^{}", x.len(), self.ambient_dim()),
            ));
        }
        Ok(self
            .hrep
            .equations
            .iter()
            .all(|h| h.eval_rational(x).is_zero())
            && self
                .hrep
                .inequalities
                .iter()
                .all(|h| !h.eval_rational(x).is_negative()))
    }

    pub fn contains_lattice_point(&self, x: &[BigInt]) -> Result<bool> {
        let x: Vec<BigRational> = x.iter().cloned().map(BigRational::from_integer).collect();
        self.contains(&x)
    }
}
