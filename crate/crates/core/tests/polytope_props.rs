mod common;

use std::collections::BTreeSet;

use common::{arb_polytope, corpus, cross_polytope, oracle_det, oracle_rank, to_i64};
use defectpoly_core::constructions::{cube, hypersimplex, prism, simplex};
use defectpoly_core::linalg::IntMatrix;
use defectpoly_core::{Error, Polytope};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn diffs(points: &[Vec<i64>], idx: &[usize]) -> Vec<Vec<i64>> {
    let base = &points[idx[0]];
    idx[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect()
}

fn affine_dim(points: &[Vec<i64>], idx: &[usize]) -> usize {
    if idx.len() <= 1 {
        return 0;
    }
    oracle_rank(&diffs(points, idx))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Facets of a full-dimensional point configuration in `R^d`, by testing
/// every hyperplane spanned by `d` of the points.
fn oracle_facets(points: &[Vec<i64>]) -> BTreeSet<Vec<usize>> {
    let d = points[0].len();
    let mut out = BTreeSet::new();
    for subset in combinations(points.len(), d) {
        let rows = diffs(points, &subset);
        // normal via signed maximal minors
        let normal: Vec<i64> = (0..d)
            .map(|j| {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                if j % 2 == 0 {
                    oracle_det(&minor)
                } else {
                    -oracle_det(&minor)
                }
            })
            .collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let base: i64 = normal
            .iter()
            .zip(&points[subset[0]])
            .map(|(a, b)| a * b)
            .sum();
        let vals: Vec<i64> = points
            .iter()
            .map(|p| normal.iter().zip(p).map(|(a, b)| a * b).sum::<i64>() - base)
            .collect();
        if vals.iter().all(|&v| v >= 0) || vals.iter().all(|&v| v <= 0) {
            let tight: Vec<usize> = (0..points.len()).filter(|&i| vals[i] == 0).collect();
            out.insert(tight);
        }
    }
    out
}

/// Face poset as all nonempty intersections of facets, plus the polytope.
fn oracle_faces(n: usize, facets: &BTreeSet<Vec<usize>>) -> BTreeSet<Vec<usize>> {
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    faces.insert((0..n).collect());
    let mut frontier: Vec<Vec<usize>> = faces.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for f in facets {
            let meet: Vec<usize> = g.iter().copied().filter(|i| f.contains(i)).collect();
            if !meet.is_empty() && faces.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    faces
}

fn lattice_faces(p: &Polytope) -> BTreeSet<Vec<usize>> {
    p.face_lattice()
        .iter()
        .map(|(_, f)| f.vertices.clone())
        .collect()
}

fn check_against_oracles(p: &Polytope) {
    let pts = to_i64(&p.vertices().to_rows());
    let facets: BTreeSet<Vec<usize>> = p.facet_vertices().into_iter().collect();
    if p.dim() == p.ambient_dim() && p.dim() >= 1 {
        assert_eq!(facets, oracle_facets(&pts), "facets of {:?}", p.vertices());
    }
    let faces = oracle_faces(p.n_vertices(), &facets);
    assert_eq!(lattice_faces(p), faces);
    let mut f = vec![0usize; p.dim() + 1];
    for g in &faces {
        f[affine_dim(&pts, g)] += 1;
    }
    assert_eq!(p.face_lattice().f_vector(), f);
    for (r, face) in p.face_lattice().iter() {
        assert_eq!(affine_dim(&pts, &face.vertices), r.dim);
    }
}

fn euler(f: &[usize]) -> i64 {
    f.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

#[test]
fn hypersimplex_3_6_facets_against_brute_force() {
    let p = hypersimplex(3, 6).unwrap();
    assert_eq!(p.n_vertices(), 20);
    assert_eq!(p.dim(), 5);
    // x6 = 3 - (x1 + ... + x5) is an affine isomorphism onto the first five coordinates
    let projected: Vec<Vec<i64>> = to_i64(&p.vertices().to_rows())
        .into_iter()
        .map(|mut r| {
            r.pop();
            r
        })
        .collect();
    let facets = oracle_facets(&projected);
    assert_eq!(facets.len(), 12);
    let got: BTreeSet<Vec<usize>> = p.facet_vertices().into_iter().collect();
    assert_eq!(got, facets);
    assert_eq!(p.facets().equations.len(), 1);
}

#[test]
fn corpus_face_lattices_match_oracles() {
    for (name, p) in corpus() {
        eprintln!("{name}");
        check_against_oracles(&p);
        assert_eq!(euler(&p.face_lattice().f_vector()), 1, "{name}");
    }
    check_against_oracles(&hypersimplex(3, 6).unwrap());
}

#[test]
fn vertices_are_certified_by_tight_inequalities() {
    for (name, p) in corpus() {
        let h = p.facets();
        for i in 0..p.n_vertices() {
            let v = p.vertex(i);
            for e in &h.equations {
                assert!(e.eval(v).is_zero(), "{name}");
            }
            let mut tight: Vec<Vec<BigInt>> =
                h.equations.iter().map(|e| e.normal.clone()).collect();
            for ineq in &h.inequalities {
                let s = ineq.eval(v);
                assert!(!s.is_negative(), "{name}: vertex {i} violates a facet");
                if s.is_zero() {
                    tight.push(ineq.normal.clone());
                }
            }
            if p.ambient_dim() > 0 {
                assert_eq!(
                    oracle_rank(&to_i64(&tight)),
                    p.ambient_dim(),
                    "{name}: vertex {i}"
                );
            }
        }
    }
}

#[test]
fn vertices_of_dimension_zero_are_singletons() {
    for (name, p) in corpus() {
        let verts = p.face_lattice().faces_of_dim(0);
        assert_eq!(verts.len(), p.n_vertices(), "{name}");
        for (i, f) in verts.iter().enumerate() {
            assert_eq!(f.vertices, vec![i]);
        }
        let top = p.face_lattice().face(p.face_lattice().top());
        assert_eq!(top.vertices.len(), p.n_vertices());
    }
}

#[test]
fn cube_and_cross_polytope_have_reversed_f_vectors() {
    for d in 2..=4 {
        let mut a = cube(d).unwrap().face_lattice().f_vector();
        let mut b = cross_polytope(d).face_lattice().f_vector();
        a.pop();
        b.pop();
        b.reverse();
        assert_eq!(a, b, "d = {d}");
    }
    assert_eq!(
        cube(4).unwrap().face_lattice().f_vector(),
        vec![16, 32, 24, 8, 1]
    );
}

#[test]
fn covers_are_consistent() {
    for (name, p) in corpus() {
        let lat = p.face_lattice();
        for (r, f) in lat.iter() {
            for c in lat.covers(r) {
                assert_eq!(c.dim, r.dim + 1, "{name}");
                let g = lat.face(c);
                assert!(f.vertices.iter().all(|v| g.vertices.contains(v)));
                assert!(lat.facets_of(c).any(|x| x == r));
            }
        }
        // an edge has exactly two vertices
        for e in lat.faces_of_dim(1) {
            assert_eq!(e.vertices.len(), 2, "{name}");
        }
    }
}

#[test]
fn simplicity_and_degrees() {
    assert!(cube(3).unwrap().is_simple());
    assert!(prism(&simplex(2)).is_simple());
    assert!(!cross_polytope(3).is_simple());
    assert!(!hypersimplex(2, 4).unwrap().is_simple());
    assert_eq!(prism(&simplex(2)).face_lattice().f_vector()[1], 9);
    let degs = cube(3).unwrap().vertex_degrees();
    assert!(degs.iter().all(|&d| d == 3));
}

#[test]
fn redundant_points_are_stripped() {
    let pts = IntMatrix::from_i64_rows(&[[0, 0], [2, 0], [0, 2], [1, 1], [2, 0], [1, 0]]).unwrap();
    let (p, stripped) = Polytope::from_points(&pts).unwrap();
    assert_eq!(p.n_vertices(), 3);
    assert_eq!(stripped.duplicates, vec![4]);
    assert_eq!(stripped.non_extreme, vec![3, 5]);
    assert!(matches!(
        Polytope::from_vertices(&IntMatrix::zeros(0, 2)),
        Err(Error::Domain(_))
    ));
}

#[test]
fn containment() {
    let p = simplex(2);
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    assert!(p.contains(&[r(1, 3), r(1, 3)]).unwrap());
    assert!(p.contains(&[r(1, 2), r(1, 2)]).unwrap());
    assert!(!p.contains(&[r(2, 3), r(1, 2)]).unwrap());
    assert!(p.contains(&[r(1, 1)]).is_err());
    let edge = common::poly(&[&[0, 0], &[2, 2]]);
    assert!(edge.contains_lattice_point(&common::ints(&[1, 1])).unwrap());
    assert!(!edge.contains_lattice_point(&common::ints(&[1, 0])).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_polytopes_match_oracles(p in arb_polytope()) {
        check_against_oracles(&p);
        prop_assert_eq!(euler(&p.face_lattice().f_vector()), 1);
    }

    #[test]
    fn hull_contains_its_generators(rows in (1usize..=3).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, d), 1..=8)
    })) {
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        let (p, stripped) = Polytope::from_points(&m).unwrap();
        prop_assert_eq!(p.n_vertices() + stripped.duplicates.len() + stripped.non_extreme.len(), rows.len());
        for r in m.row_iter() {
            prop_assert!(p.contains_lattice_point(r).unwrap());
        }
        prop_assert_eq!(p.dim(), oracle_rank(&diffs(&rows, &(0..rows.len()).collect::<Vec<_>>())));
    }
}
