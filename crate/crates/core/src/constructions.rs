//! Standard lattice polytopes and the constructions used to build the
//! counter-examples: prisms, lattice pyramids, hypersimplices, Cayley joins.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::AffineLatticeChart;
use crate::linalg::{abs_det, det, int_rank, solve, IntMatrix, RatMatrix};
use crate::polytope::Polytope;

/// Vertex cap for [`lattice_equivalent`] when the caller has no preference.
pub const DEFAULT_VERTEX_CAP: usize = 10;

fn build(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Polytope> {
    Polytope::from_vertices(&IntMatrix::from_rows(cols, rows)?)
}

/// `conv{0, e_1, ..., e_d}`.
pub fn simplex(d: usize) -> Polytope {
    let rows = (0..=d)
        .map(|i| (0..d).map(|j| BigInt::from(u8::from(i == j + 1))).collect())
        .collect();
    build(d, rows).expect("standard simplex")
}

/// The 0/1 cube `[0,1]^d`.
pub fn cube(d: usize) -> Result<Polytope> {
    if d == 0 {
        return Err(Error::domain("cube dimension must be at least 1"));
    }
    if d >= usize::BITS as usize {
        return Err(Error::domain(format!("cube dimension {d} is too large")));
    }
    let rows = (0..1usize << d)
        .map(|m| (0..d).map(|j| BigInt::from((m >> j) & 1)).collect())
        .collect();
    build(d, rows)
}

/// `conv(P × {0} ∪ P × {1})`.
pub fn prism(p: &Polytope) -> Polytope {
    let d = p.ambient_dim();
    let rows = [0u8, 1]
        .iter()
        .flat_map(|&h| {
            p.vertices().row_iter().map(move |v| {
                v.iter()
                    .cloned()
                    .chain(std::iter::once(BigInt::from(h)))
                    .collect()
            })
        })
        .collect();
    build(d + 1, rows).expect("prism of a polytope")
}

/// `conv(P × {0} ∪ {(v_0, 1)})` with `v_0` the first vertex of `P`.
pub fn lattice_pyramid(p: &Polytope) -> Polytope {
    let d = p.ambient_dim();
    let mut rows: Vec<Vec<BigInt>> = p
        .vertices()
        .row_iter()
        .map(|v| {
            v.iter()
                .cloned()
                .chain(std::iter::once(BigInt::zero()))
                .collect()
        })
        .collect();
    rows.push(
        p.vertex(0)
            .iter()
            .cloned()
            .chain(std::iter::once(BigInt::one()))
            .collect(),
    );
    build(d + 1, rows).expect("pyramid of a polytope")
}

/// `pyr^r(P)`; `r = 0` returns a copy of `P`.
pub fn r_fold_pyramid(p: &Polytope, r: usize) -> Polytope {
    let mut out = p.clone();
    for _ in 0..r {
        out = lattice_pyramid(&out);
    }
    out
}

/// `Δ(k, n)`: all 0/1 vectors of length `n` with exactly `k` ones.
pub fn hypersimplex(k: usize, n: usize) -> Result<Polytope> {
    if k < 1 || k + 1 > n {
        return Err(Error::domain(format!(
            "hypersimplex({k}, {n}) needs 1 <= k <= n - 1"
        )));
    }
    fn choose(
        start: usize,
        n: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - left {
            cur.push(i);
            choose(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut subsets = Vec::new();
    choose(0, n, k, &mut Vec::new(), &mut subsets);
    let rows = subsets
        .iter()
        .map(|s| {
            (0..n)
                .map(|j| BigInt::from(u8::from(s.contains(&j))))
                .collect()
        })
        .collect();
    build(n, rows)
}

/// `Q_0 ⋆ ... ⋆ Q_k = conv(Q_0 × {e_0}, ..., Q_k × {e_k})` in `R^{m+k+1}`.
///
/// The factors are not required to share a normal fan.
pub fn cayley(factors: &[Polytope]) -> Result<Polytope> {
    let first = factors
        .first()
        .ok_or_else(|| Error::domain("a Cayley join needs at least one factor"))?;
    let m = first.ambient_dim();
    if let Some(bad) = factors.iter().find(|q| q.ambient_dim() != m) {
        return Err(Error::domain(format!(
            "Cayley factors live in R^{m} and R^{}",
            bad.ambient_dim()
        )));
    }
    let k1 = factors.len();
    let rows = factors
        .iter()
        .enumerate()
        .flat_map(|(j, q)| {
            q.vertices().row_iter().map(move |v| {
                v.iter()
                    .cloned()
                    .chain((0..k1).map(|i| BigInt::from(u8::from(i == j))))
                    .collect()
            })
        })
        .collect();
    build(m + k1, rows)
}

/// `P × Q` with vertices `(v, w)`, `v` varying slowest.
pub fn product(p: &Polytope, q: &Polytope) -> Polytope {
    let rows = p
        .vertices()
        .row_iter()
        .flat_map(|v| {
            q.vertices()
                .row_iter()
                .map(move |w| v.iter().chain(w).cloned().collect())
        })
        .collect();
    build(p.ambient_dim() + q.ambient_dim(), rows).expect("product of polytopes")
}

/// `{U·v + s}` for a unimodular `U`.
pub fn unimodular_image(p: &Polytope, u: &IntMatrix, s: &[BigInt]) -> Result<Polytope> {
    let d = p.ambient_dim();
    if u.rows() != d || u.cols() != d || s.len() != d {
        return Err(Error::dimension(
            "unimodular_image",
            format!(
                "{}x{} matrix and shift of length {} in R^{d}",
                u.rows(),
                u.cols(),
                s.len()
            ),
        ));
    }
    if !det(u)?.abs().is_one() {
        return Err(Error::domain("matrix is not unimodular"));
    }
    let rows = p
        .vertices()
        .row_iter()
        .map(|v| {
            u.mul_vec(v)
                .expect("shapes checked")
                .into_iter()
                .zip(s)
                .map(|(a, b)| a + b)
                .collect()
        })
        .collect();
    build(d, rows)
}

/// Whether some vertex bijection extends to an affine lattice isomorphism
/// between the charts of `P` and `Q`.
///
/// Searches injective assignments of an affine basis of `P` to vertices of
/// `Q` with matching vertex degree, fits the affine map, and accepts it when
/// it is integral, unimodular, and maps the vertex set onto the vertex set.
/// Factorial in the worst case, hence the cap.
pub fn lattice_equivalent(p: &Polytope, q: &Polytope, cap: usize) -> Result<bool> {
    for n in [p.n_vertices(), q.n_vertices()] {
        if n > cap {
            return Err(Error::Capacity {
                what: "lattice_equivalent vertex count",
                size: n,
                cap,
            });
        }
    }
    if p.n_vertices() != q.n_vertices() || p.dim() != q.dim() {
        return Ok(false);
    }
    if p.face_lattice().f_vector() != q.face_lattice().f_vector() {
        return Ok(false);
    }
    let (deg_p, deg_q) = (p.vertex_degrees(), q.vertex_degrees());
    let mut sp = deg_p.clone();
    let mut sq = deg_q.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return Ok(false);
    }
    let k = p.dim();
    if k == 0 {
        return Ok(true);
    }

    let cp = AffineLatticeChart::of_polytope(p).map_points(&p.vertices().to_rows());
    let cq = AffineLatticeChart::of_polytope(q).map_points(&q.vertices().to_rows());

    let mut basis = vec![0usize];
    let mut edges: Vec<Vec<BigInt>> = Vec::with_capacity(k);
    for i in 1..cp.len() {
        let mut trial = edges.clone();
        trial.push(diff(&cp[i], &cp[0]));
        let m = IntMatrix::from_rows(k, trial.clone()).expect("chart rows");
        if int_rank(&m) == trial.len() {
            edges = trial;
            basis.push(i);
            if basis.len() == k + 1 {
                break;
            }
        }
    }
    let mp = RatMatrix::from_fn(k, k, |i, j| {
        BigRational::from_integer(&cp[basis[i + 1]][j] - &cp[basis[0]][j])
    });
    let mut q_sorted = cq.clone();
    q_sorted.sort();

    let search = Search {
        cp: &cp,
        cq: &cq,
        q_sorted: &q_sorted,
        deg_p: &deg_p,
        deg_q: &deg_q,
        basis: &basis,
        mp: &mp,
        k,
    };
    let mut used = vec![false; cq.len()];
    let mut image = Vec::with_capacity(k + 1);
    Ok(search.assign(&mut used, &mut image))
}

fn diff(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

struct Search<'a> {
    cp: &'a [Vec<BigInt>],
    cq: &'a [Vec<BigInt>],
    q_sorted: &'a [Vec<BigInt>],
    deg_p: &'a [usize],
    deg_q: &'a [usize],
    basis: &'a [usize],
    mp: &'a RatMatrix,
    k: usize,
}

impl Search<'_> {
    fn assign(&self, used: &mut [bool], image: &mut Vec<usize>) -> bool {
        if image.len() == self.basis.len() {
            return self.check(image);
        }
        let src = self.basis[image.len()];
        for j in 0..self.cq.len() {
            if used[j] || self.deg_q[j] != self.deg_p[src] {
                continue;
            }
            used[j] = true;
            image.push(j);
            if self.assign(used, image) {
                return true;
            }
            image.pop();
            used[j] = false;
        }
        false
    }

    // x ↦ x·X + s in row-vector convention, with mp·X = mq.
    fn check(&self, image: &[usize]) -> bool {
        let k = self.k;
        let q0 = &self.cq[image[0]];
        let mut x = IntMatrix::zeros(k, k);
        for col in 0..k {
            let rhs: Vec<BigRational> = (0..k)
                .map(|i| BigRational::from_integer(&self.cq[image[i + 1]][col] - &q0[col]))
                .collect();
            let Ok(Some(sol)) = solve(self.mp, &rhs) else {
                return false;
            };
            for (i, v) in sol.into_iter().enumerate() {
                if !v.is_integer() {
                    return false;
                }
                x[(i, col)] = v.to_integer();
            }
        }
        if !abs_det(&x).is_ok_and(|d| d.is_one()) {
            return false;
        }
        let p0 = &self.cp[self.basis[0]];
        let map = |v: &[BigInt]| -> Vec<BigInt> {
            (0..k)
                .map(|col| {
                    let mut acc = q0[col].clone();
                    for i in 0..k {
                        acc += (&v[i] - &p0[i]) * &x[(i, col)];
                    }
                    acc
                })
                .collect()
        };
        let mut mapped: Vec<Vec<BigInt>> = self.cp.iter().map(|v| map(v)).collect();
        mapped.sort();
        mapped == self.q_sorted
    }
}
