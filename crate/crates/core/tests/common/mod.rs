#![allow(dead_code)]

use defectpoly_core::constructions::{
    cayley, cube, hypersimplex, lattice_pyramid, prism, product, r_fold_pyramid, simplex,
};
use defectpoly_core::geom::dilate;
use defectpoly_core::linalg::{hnf, IntMatrix};
use defectpoly_core::Polytope;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

pub fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn poly(rows: &[&[i64]]) -> Polytope {
    Polytope::from_i64_rows(rows).unwrap()
}

pub fn cross_polytope(d: usize) -> Polytope {
    let mut rows = Vec::new();
    for i in 0..d {
        for s in [1i64, -1] {
            let mut v = vec![0i64; d];
            v[i] = s;
            rows.push(v);
        }
    }
    Polytope::from_i64_rows(&rows).unwrap()
}

/// Named polytopes shared by the property suites.
pub fn corpus() -> Vec<(String, Polytope)> {
    let seg = cube(1).unwrap();
    let pt = poly(&[&[0]]);
    let mut out: Vec<(String, Polytope)> = Vec::new();
    for d in 0..=4 {
        out.push((format!("simplex({d})"), simplex(d)));
    }
    for d in 1..=3 {
        out.push((format!("cube({d})"), cube(d).unwrap()));
    }
    out.push(("prism(simplex(2))".into(), prism(&simplex(2))));
    out.push(("prism(simplex(3))".into(), prism(&simplex(3))));
    out.push((
        "seg x seg x seg".into(),
        product(&product(&seg, &seg), &seg),
    ));
    out.push((
        "simplex(2) x simplex(2)".into(),
        product(&simplex(2), &simplex(2)),
    ));
    out.push(("hypersimplex(2,4)".into(), hypersimplex(2, 4).unwrap()));
    out.push(("hypersimplex(1,3)".into(), hypersimplex(1, 3).unwrap()));
    out.push(("pyr(cube(2))".into(), lattice_pyramid(&cube(2).unwrap())));
    out.push((
        "pyr^2(cube(2))".into(),
        r_fold_pyramid(&cube(2).unwrap(), 2),
    ));
    out.push(("pyr(cube(3))".into(), lattice_pyramid(&cube(3).unwrap())));
    out.push((
        "cayley(seg,seg,seg)".into(),
        cayley(&[seg.clone(), seg.clone(), seg.clone()]).unwrap(),
    ));
    out.push((
        "cayley(seg,seg,pt,pt)".into(),
        cayley(&[seg.clone(), seg.clone(), pt.clone(), pt]).unwrap(),
    ));
    out.push(("2*simplex(2)".into(), dilate(&simplex(2), 2).unwrap()));
    out.push(("skew triangle".into(), poly(&[&[0, 0], &[2, 1], &[1, 3]])));
    out.push(("cross(3)".into(), cross_polytope(3)));
    out.push(("diagonal edge".into(), poly(&[&[0, 0], &[2, 2]])));
    out.push((
        "tilted square in R^3".into(),
        poly(&[&[0, 0, 0], &[1, 1, 0], &[0, 1, 1], &[1, 2, 1]]),
    ));
    out
}

/// Random lattice polytopes: 2..=7 points in a small box, dimension 1..=3.
pub fn arb_polytope() -> impl Strategy<Value = Polytope> {
    (1usize..=3)
        .prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-1i64..=2, d), 2..=7))
        .prop_map(|rows| Polytope::from_i64_rows(&rows).unwrap())
}

/// Unimodular matrix taken from the transform of a Hermite reduction of a
/// random integer matrix.
pub fn random_unimodular(rng: &mut impl Rng, d: usize) -> IntMatrix {
    let a = IntMatrix::from_fn(d, d, |_, _| BigInt::from(rng.gen_range(-3i64..=3)));
    let u = hnf(&a).u;
    // a random signed permutation on top, so the identity is not over-represented
    let mut perm: Vec<usize> = (0..d).collect();
    for i in (1..d).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    IntMatrix::from_fn(d, d, |i, j| {
        let x = u[(perm[i], j)].clone();
        if i % 2 == 0 {
            x
        } else {
            -x
        }
    })
}

pub fn random_shift(rng: &mut impl Rng, d: usize) -> Vec<BigInt> {
    (0..d)
        .map(|_| BigInt::from(rng.gen_range(-5i64..=5)))
        .collect()
}

/// Exact rank of a small integer matrix by fraction-free elimination on
/// i128; independent of the library's linear algebra.
pub fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let (f, g) = (m[r][c], m[i][c]);
            if g == 0 {
                continue;
            }
            let pivot = m[r].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot) {
                *x = *x * f - p * g;
            }
            let gcd = m[i].iter().fold(0i128, |a, &b| gcd128(a, b));
            if gcd > 1 {
                for x in m[i].iter_mut() {
                    *x /= gcd;
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Cofactor-expansion determinant on i64.
pub fn oracle_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * oracle_det(&minor)
        })
        .sum()
}

pub fn to_i64(rows: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect()
}
