//! Exact invariants of lattice polytopes.
//!
//! The crate builds polytopes from integer vertices, computes their facets
//! and face lattices, normalized volumes and Ehrhart polynomials in the
//! lattice of each face, and the alternating face sums `c_t(P)` and the
//! Ehrhart-convolution polynomial `f(P, t)`.

pub mod constructions;
pub mod error;
pub mod geom;
pub mod invariants;
pub mod linalg;
pub mod polytope;

mod bitset;

pub use error::{Error, Result};
pub use geom::{AffineLatticeChart, Polynomial};
pub use invariants::{ct_invariant, f_poly, is_defect, report, InvariantReport};
pub use polytope::{Face, FaceLattice, FaceRef, HRep, Halfspace, Polytope};
