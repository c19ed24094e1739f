//! Vertex-to-facet conversion by the double description method.
//!
//! Points are lifted to `(1, y)` and the cone `{x : (1, y_i)·x ≥ 0}` is built
//! by inserting one constraint at a time; its extreme rays are the facets.
//! All arithmetic stays in primitive integer vectors, so degenerate inputs
//! are handled exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::linalg::{dot, gcd_of, int_rank, integer_kernel, solve, IntMatrix, RatMatrix};

/// `constant + normal·x ≥ 0` (inequality) or `= 0` (equation).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub constant: BigInt,
    pub normal: Vec<BigInt>,
}

impl Halfspace {
    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        &self.constant + dot(&self.normal, x)
    }

    pub fn eval_rational(&self, x: &[BigRational]) -> BigRational {
        self.normal.iter().zip(x).fold(
            BigRational::from_integer(self.constant.clone()),
            |acc, (a, b)| acc + b * a,
        )
    }
}

/// Irredundant inequality description plus the equations of the affine hull.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HRep {
    pub inequalities: Vec<Halfspace>,
    pub equations: Vec<Halfspace>,
}

pub(crate) struct Hull {
    pub dim: usize,
    pub hrep: HRep,
    /// Per facet, the input points lying on it.
    pub incidence: Vec<BitSet>,
    /// Indices of input points that are extreme.
    pub extreme: Vec<usize>,
}

/// Hull of distinct, non-empty `points`.
pub(crate) fn convex_hull(points: &[Vec<BigInt>]) -> Hull {
    let n = points.len();
    let d = points[0].len();
    let origin = &points[0];
    let diffs = IntMatrix::from_rows(
        d,
        points[1..]
            .iter()
            .map(|p| p.iter().zip(origin).map(|(a, b)| a - b).collect())
            .collect(),
    )
    .expect("points share a dimension");

    let equations = integer_kernel(&diffs)
        .into_iter()
        .map(|b| Halfspace {
            constant: -dot(&b, origin),
            normal: b,
        })
        .collect::<Vec<_>>();
    let dim = d - equations.len();

    if dim == 0 {
        return Hull {
            dim,
            hrep: HRep {
                inequalities: Vec::new(),
                equations,
            },
            incidence: Vec::new(),
            extreme: (0..n).collect(),
        };
    }

    // project onto `dim` coordinates; an affine isomorphism on aff(points)
    let mut coords: Vec<usize> = Vec::with_capacity(dim);
    for c in 0..d {
        let mut trial = coords.clone();
        trial.push(c);
        let sub = IntMatrix::from_fn(diffs.rows(), trial.len(), |i, j| {
            diffs[(i, trial[j])].clone()
        });
        if int_rank(&sub) == trial.len() {
            coords = trial;
            if coords.len() == dim {
                break;
            }
        }
    }
    let projected: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| coords.iter().map(|&c| p[c].clone()).collect())
        .collect();

    let rays = full_dimensional_facets(&projected);

    let mut inequalities = Vec::with_capacity(rays.len());
    let mut incidence = Vec::with_capacity(rays.len());
    for (ray, zeros) in rays {
        let mut normal = vec![BigInt::zero(); d];
        for (k, &c) in coords.iter().enumerate() {
            normal[c] = ray[k + 1].clone();
        }
        let g = gcd_of(&normal);
        let normal: Vec<BigInt> = normal.iter().map(|x| x / &g).collect();
        let constant = &ray[0] / &g;
        inequalities.push(Halfspace { constant, normal });
        incidence.push(zeros);
    }

    let extreme = (0..n)
        .filter(|&i| {
            let tight: Vec<Vec<BigInt>> = inequalities
                .iter()
                .zip(&incidence)
                .filter(|(_, z)| z.contains(i))
                .map(|(h, _)| h.normal.clone())
                .collect();
            tight.len() >= dim && int_rank(&IntMatrix::from_rows(d, tight).expect("normals")) == dim
        })
        .collect();

    Hull {
        dim,
        hrep: HRep {
            inequalities,
            equations,
        },
        incidence,
        extreme,
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: BitSet,
}

fn make_primitive(v: &mut [BigInt]) {
    let g = gcd_of(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Facets of a full-dimensional point configuration in `R^r`, as
/// `(constant, normal)` vectors of length `r + 1` with their point incidences.
fn full_dimensional_facets(points: &[Vec<BigInt>]) -> Vec<(Vec<BigInt>, BitSet)> {
    let n = points.len();
    let r = points[0].len();
    let lifted: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            std::iter::once(BigInt::one())
                .chain(p.iter().cloned())
                .collect()
        })
        .collect();

    // initial simplex: first r+1 affinely independent points in input order
    let mut basis: Vec<usize> = Vec::with_capacity(r + 1);
    for i in 0..n {
        let mut rows: Vec<Vec<BigInt>> = basis.iter().map(|&b| lifted[b].clone()).collect();
        rows.push(lifted[i].clone());
        let m = IntMatrix::from_rows(r + 1, rows).expect("lifted rows");
        if int_rank(&m) == basis.len() + 1 {
            basis.push(i);
            if basis.len() == r + 1 {
                break;
            }
        }
    }
    debug_assert_eq!(basis.len(), r + 1, "configuration must be full-dimensional");

    let b_mat = RatMatrix::from_fn(r + 1, r + 1, |i, j| {
        BigRational::from_integer(lifted[basis[i]][j].clone())
    });
    let mut rays: Vec<Ray> = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let e: Vec<BigRational> = (0..=r)
            .map(|i| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        let x = solve(&b_mat, &e)
            .expect("square system")
            .expect("invertible basis");
        let denom = x.iter().fold(BigInt::one(), |acc, q| {
            num_integer::lcm(acc, q.denom().clone())
        });
        let mut v: Vec<BigInt> = x
            .iter()
            .map(|q| (q * BigRational::from_integer(denom.clone())).to_integer())
            .collect();
        make_primitive(&mut v);
        let mut zeros = BitSet::new(n);
        for (k, &b) in basis.iter().enumerate() {
            if k != j {
                zeros.insert(b);
            }
        }
        rays.push(Ray { v, zeros });
    }

    let in_basis = {
        let mut s = BitSet::new(n);
        for &b in &basis {
            s.insert(b);
        }
        s
    };

    for i in (0..n).filter(|&i| !in_basis.contains(i)) {
        let g = &lifted[i];
        let vals: Vec<BigInt> = rays.iter().map(|ray| dot(g, &ray.v)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if minus.is_empty() {
            for (ray, val) in rays.iter_mut().zip(&vals) {
                if val.is_zero() {
                    ray.zeros.insert(i);
                }
            }
            continue;
        }

        let mut created = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                if common.len() + 1 < r {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(t, ray)| t != p && t != q && common.is_subset(&ray.zeros));
                if blocked {
                    continue;
                }
                let (sp, sq) = (&vals[p], &vals[q]);
                let mut v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xq, xp)| sp * xq - sq * xp)
                    .collect();
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.insert(i);
                created.push(Ray { v, zeros });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut ray, val) in rays.into_iter().zip(vals) {
            if val.is_negative() {
                continue;
            }
            if val.is_zero() {
                ray.zeros.insert(i);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }

    rays.into_iter().map(|ray| (ray.v, ray.zeros)).collect()
}
