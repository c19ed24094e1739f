//! Lattice geometry of faces: charts on `Z^d ∩ aff(F)`, normalized volume,
//! lattice points, Ehrhart polynomials, smoothness and width.

mod chart;
mod ehrhart;
mod points;
mod smooth;
mod volume;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::polytope::Polytope;

pub use chart::AffineLatticeChart;
pub use ehrhart::{ehrhart, ehrhart_polynomial, face_ehrhart_polynomials, Polynomial};
pub use smooth::{is_smooth, search_width_one, width};
pub use volume::{
    face_volumes, lattice_volume, normalized_volume, normalized_volume_with, pulling_triangulation,
    PullingOrder,
};

use points::LatticePointCounter;

/// `t·P`.
pub fn dilate(p: &Polytope, t: u64) -> Result<Polytope> {
    if t == 0 {
        return Err(Error::domain("dilation factor must be at least 1"));
    }
    let t = BigInt::from(t);
    let rows = p.vertices().map(|x| x * &t);
    Polytope::from_vertices(&rows)
}

/// All lattice points of `P` in lexicographic order.
pub fn lattice_points(p: &Polytope) -> Vec<Vec<BigInt>> {
    if p.dim() == 0 {
        return vec![p.vertex(0).to_vec()];
    }
    let chart = AffineLatticeChart::of_polytope(p);
    let counter = LatticePointCounter::new(&chart.map_points(&p.vertices().to_rows()));
    let mut out = Vec::new();
    counter.for_each(&BigInt::one(), |c| out.push(chart.point(c)));
    out.sort();
    out
}

/// `|Z^d ∩ t·P|` without materializing the points.
pub fn count_lattice_points(p: &Polytope, t: u64) -> BigInt {
    if t == 0 || p.dim() == 0 {
        return BigInt::one();
    }
    let chart = AffineLatticeChart::of_polytope(p);
    LatticePointCounter::new(&chart.map_points(&p.vertices().to_rows())).count(&BigInt::from(t))
}

/// Copy of `P` in the coordinates of its own lattice chart; full-dimensional.
pub fn to_chart_polytope(p: &Polytope) -> Result<Polytope> {
    let chart = AffineLatticeChart::of_polytope(p);
    let rows = chart.map_points(&p.vertices().to_rows());
    Polytope::from_vertices(&IntMatrix::from_rows(chart.dim(), rows)?)
}
