use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::chart::AffineLatticeChart;
use crate::error::{Error, Result};
use crate::linalg::{abs_det, dot, gcd_of, primitive_part, IntMatrix};
use crate::polytope::Polytope;

/// Smoothness of the associated toric variety: `P` is simple and at every
/// vertex the primitive edge directions form a basis of the lattice of
/// `aff(P)`.
pub fn is_smooth(p: &Polytope) -> bool {
    if !p.is_simple() {
        return false;
    }
    let k = p.dim();
    if k == 0 {
        return true;
    }
    let chart = AffineLatticeChart::of_polytope(p);
    let coords = chart.map_points(&p.vertices().to_rows());
    let edges = p.face_lattice().faces_of_dim(1);
    (0..p.n_vertices()).all(|v| {
        let dirs: Vec<Vec<BigInt>> = edges
            .iter()
            .filter(|e| e.vertices.contains(&v))
            .map(|e| {
                let u = if e.vertices[0] == v {
                    e.vertices[1]
                } else {
                    e.vertices[0]
                };
                let dir: Vec<BigInt> = coords[u]
                    .iter()
                    .zip(&coords[v])
                    .map(|(a, b)| a - b)
                    .collect();
                primitive_part(&dir).expect("edge endpoints are distinct")
            })
            .collect();
        let m = IntMatrix::from_rows(k, dirs).expect("edge directions");
        abs_det(&m).expect("simple vertex has dim edges").is_one()
    })
}

/// `max w·x - min w·x` over the vertices.
pub fn width(p: &Polytope, w: &[BigInt]) -> Result<BigInt> {
    if w.len() != p.ambient_dim() {
        return Err(Error::dimension(
            "width",
            format!("direction of length {} in R^{}", w.len(), p.ambient_dim()),
        ));
    }
    if w.iter().all(Zero::is_zero) {
        return Err(Error::domain("width along the zero direction"));
    }
    let values: Vec<BigInt> = p.vertices().row_iter().map(|v| dot(w, v)).collect();
    let max = values.iter().max().expect("nonempty");
    let min = values.iter().min().expect("nonempty");
    Ok(max - min)
}

/// Bounded search for a lattice direction of width one.
///
/// Scans integer directions `w` with entries in `[-bound, bound]` (first
/// nonzero entry positive) in lexicographic order. A direction counts only
/// when its restriction to the lattice of `aff(P)` is primitive, so width one
/// means the vertices lie on two adjacent lattice hyperplanes of that
/// lattice. This is a heuristic witness search, not a lattice-width
/// computation: `None` only says no witness exists inside the box.
pub fn search_width_one(p: &Polytope, bound: u32) -> Option<Vec<BigInt>> {
    let d = p.ambient_dim();
    if d == 0 || bound == 0 {
        return None;
    }
    let chart = AffineLatticeChart::of_polytope(p);
    let b = i64::from(bound);
    let mut w = vec![-b; d];
    loop {
        let first_nonzero = w.iter().find(|&&x| x != 0);
        if first_nonzero.is_some_and(|&x| x > 0) {
            let wb: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
            if gcd_of(&wb).is_one() {
                let restricted: Vec<BigInt> =
                    chart.basis().row_iter().map(|row| dot(row, &wb)).collect();
                if gcd_of(&restricted).is_one() && width(p, &wb).is_ok_and(|v| v.is_one()) {
                    return Some(wb);
                }
            }
        }
        // odometer increment
        let mut i = d;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if w[i] < b {
                w[i] += 1;
                break;
            }
            w[i] = -b;
        }
    }
}
