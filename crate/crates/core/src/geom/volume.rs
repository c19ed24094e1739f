//! Normalized volume by pulling triangulations.
//!
//! A face is triangulated by coning its pulled vertex over the
//! triangulations of those facets that avoid it. Facets come from the face
//! lattice, so no further hull computations are needed. Each simplex
//! contributes `|det|` of its edge matrix in the face's lattice chart, which
//! makes a unimodular simplex count 1.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::chart::AffineLatticeChart;
use crate::linalg::{abs_det, IntMatrix};
use crate::polytope::{FaceRef, Polytope};

/// Which vertex of a face is pulled first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PullingOrder {
    #[default]
    Lowest,
    Highest,
}

type Simplices = Rc<Vec<Vec<usize>>>;

struct Triangulator<'a> {
    p: &'a Polytope,
    order: PullingOrder,
    memo: HashMap<FaceRef, Simplices>,
}

impl<'a> Triangulator<'a> {
    fn new(p: &'a Polytope, order: PullingOrder) -> Self {
        Triangulator {
            p,
            order,
            memo: HashMap::new(),
        }
    }

    fn triangulate(&mut self, f: FaceRef) -> Simplices {
        if let Some(t) = self.memo.get(&f) {
            return t.clone();
        }
        let lattice = self.p.face_lattice();
        let verts = &lattice.face(f).vertices;
        let result = if f.dim == 0 {
            vec![vec![verts[0]]]
        } else {
            let apex = match self.order {
                PullingOrder::Lowest => verts[0],
                PullingOrder::Highest => *verts.last().expect("nonempty face"),
            };
            let facets: Vec<FaceRef> = lattice
                .facets_of(f)
                .filter(|&g| !lattice.face(g).vertices.contains(&apex))
                .collect();
            let mut out = Vec::new();
            for g in facets {
                for s in self.triangulate(g).iter() {
                    let mut simplex = s.clone();
                    simplex.push(apex);
                    out.push(simplex);
                }
            }
            out
        };
        let result = Rc::new(result);
        self.memo.insert(f, result.clone());
        result
    }

    fn volume(&mut self, f: FaceRef) -> BigInt {
        if f.dim == 0 {
            return BigInt::one();
        }
        let simplices = self.triangulate(f);
        let chart = AffineLatticeChart::of_face(self.p, f);
        let face = self.p.face_lattice().face(f);
        let coords: HashMap<usize, Vec<BigInt>> = face
            .vertices
            .iter()
            .map(|&v| {
                let c = chart
                    .lattice_coordinates(self.p.vertex(v))
                    .expect("face vertex lies in its own chart");
                (v, c)
            })
            .collect();
        let k = f.dim;
        simplices.iter().fold(BigInt::zero(), |acc, s| {
            let base = &coords[&s[0]];
            let m = IntMatrix::from_fn(k, k, |i, j| &coords[&s[i + 1]][j] - &base[j]);
            acc + abs_det(&m).expect("square edge matrix")
        })
    }
}

/// Simplices (as vertex-index lists) of the pulling triangulation of `f`.
pub fn pulling_triangulation(p: &Polytope, f: FaceRef, order: PullingOrder) -> Vec<Vec<usize>> {
    Triangulator::new(p, order).triangulate(f).as_ref().clone()
}

/// Normalized volume of a face in its own lattice; 1 for a vertex.
pub fn normalized_volume(p: &Polytope, f: FaceRef) -> BigInt {
    normalized_volume_with(p, f, PullingOrder::Lowest)
}

pub fn normalized_volume_with(p: &Polytope, f: FaceRef, order: PullingOrder) -> BigInt {
    Triangulator::new(p, order).volume(f)
}

/// Normalized volume of the polytope itself.
pub fn lattice_volume(p: &Polytope) -> BigInt {
    normalized_volume(p, p.face_lattice().top())
}

/// Normalized volumes of all faces, indexed like the face lattice levels.
pub fn face_volumes(p: &Polytope, order: PullingOrder) -> Vec<Vec<BigInt>> {
    let lattice = p.face_lattice();
    let mut tri = Triangulator::new(p, order);
    (0..=lattice.dim())
        .map(|dim| {
            (0..lattice.faces_of_dim(dim).len())
                .map(|index| tri.volume(FaceRef { dim, index }))
                .collect()
        })
        .collect()
}
