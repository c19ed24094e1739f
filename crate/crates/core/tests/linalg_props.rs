mod common;

use common::{oracle_det, oracle_rank};
use defectpoly_core::linalg::{
    det, hnf, int_rank, integer_kernel, saturate, snf, solve, IntMatrix, RatMatrix,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn arb_square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, n), n)
}

fn m(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows).unwrap()
}

fn is_unimodular(u: &IntMatrix) -> bool {
    det(u).unwrap().abs().is_one()
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// gcd of all k×k minors, by enumerating row and column subsets.
fn minors_gcd(a: &[Vec<i64>], k: usize) -> i64 {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let mut g = 0;
    for rs in subsets(a.len(), k) {
        for cs in subsets(a[0].len(), k) {
            let sub: Vec<Vec<i64>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a[i][j]).collect())
                .collect();
            g = gcd(g, oracle_det(&sub));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn det_matches_cofactor_expansion(a in (1usize..=5).prop_flat_map(arb_square)) {
        prop_assert_eq!(det(&m(&a)).unwrap(), BigInt::from(oracle_det(&a)));
    }

    #[test]
    fn det_is_multiplicative(a in arb_square(4), b in arb_square(4)) {
        let (a, b) = (m(&a), m(&b));
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(det(&ab).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn rank_matches_oracle(a in arb_matrix(5, 5)) {
        let r = oracle_rank(&a);
        prop_assert_eq!(int_rank(&m(&a)), r);
        prop_assert_eq!(defectpoly_core::linalg::rank(&m(&a).to_rational()), r);
    }

    #[test]
    fn hnf_is_a_unimodular_echelon_form(a in arb_matrix(5, 5)) {
        let a = m(&a);
        let dec = hnf(&a);
        prop_assert!(is_unimodular(&dec.u));
        prop_assert_eq!(dec.u.mul(&a).unwrap(), dec.h.clone());
        prop_assert_eq!(dec.rank, int_rank(&a));
        prop_assert_eq!(dec.pivots.len(), dec.rank);
        for (r, &c) in dec.pivots.iter().enumerate() {
            prop_assert!(dec.h[(r, c)].is_positive());
            for j in 0..c {
                prop_assert!(dec.h[(r, j)].is_zero());
            }
            for i in 0..r {
                prop_assert!(!dec.h[(i, c)].is_negative() && dec.h[(i, c)] < dec.h[(r, c)]);
            }
            if r > 0 {
                prop_assert!(dec.pivots[r - 1] < c);
            }
        }
        for r in dec.rank..dec.h.rows() {
            prop_assert!(dec.h.row(r).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn hnf_is_canonical_under_left_multiplication(a in arb_matrix(4, 4), w in arb_square(4)) {
        // rows of W·A span a sublattice; stacking it under A leaves the row lattice unchanged
        let a = m(&a);
        let w = IntMatrix::from_fn(a.rows(), a.rows(), |i, j| BigInt::from(w[i % 4][j % 4]));
        let extra = w.mul(&a).unwrap();
        let mut rows = a.to_rows();
        rows.extend(extra.to_rows());
        let stacked = IntMatrix::from_rows(a.cols(), rows).unwrap();
        let (h1, h2) = (hnf(&a), hnf(&stacked));
        prop_assert_eq!(h1.rank, h2.rank);
        for r in 0..h1.rank {
            prop_assert_eq!(h1.h.row(r), h2.h.row(r));
        }
    }

    #[test]
    fn snf_identity_and_divisibility(a in arb_matrix(4, 4)) {
        let rows = a.clone();
        let a = m(&a);
        let dec = snf(&a);
        prop_assert!(is_unimodular(&dec.u));
        prop_assert!(is_unimodular(&dec.v));
        prop_assert_eq!(dec.v.mul(dec.v_inverse()).unwrap(), IntMatrix::identity(a.cols()));
        prop_assert_eq!(dec.u.mul(&a).unwrap().mul(&dec.v).unwrap(), dec.s.clone());
        let f = dec.invariant_factors();
        for i in 0..dec.s.rows() {
            for j in 0..dec.s.cols() {
                if i != j || i >= dec.rank {
                    prop_assert!(dec.s[(i, j)].is_zero());
                }
            }
        }
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive());
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        // d_1 ⋯ d_k equals the gcd of the k×k minors
        let mut prod = BigInt::one();
        for (k, d) in f.iter().enumerate() {
            prod *= d;
            prop_assert_eq!(prod.clone(), BigInt::from(minors_gcd(&rows, k + 1)));
        }
    }

    #[test]
    fn saturation_is_idempotent_and_contains_input(a in arb_matrix(3, 4)) {
        let vs: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let basis = saturate(&vs);
        prop_assert_eq!(basis.len(), oracle_rank(&a));
        prop_assert_eq!(saturate(&basis), basis.clone());
        if basis.is_empty() {
            return Ok(());
        }
        let bt = IntMatrix::from_rows(vs[0].len(), basis.clone()).unwrap().transpose().to_rational();
        for v in &vs {
            let rhs: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
            let x = solve(&bt, &rhs).unwrap();
            prop_assert!(x.is_some_and(|x| x.iter().all(BigRational::is_integer)));
        }
        // saturated: (1/2)·b for any basis row is not in the lattice span
        for b in &basis {
            prop_assert!(b.iter().any(|x: &BigInt| !(x % 2u32).is_zero()) || b.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn integer_kernel_spans_the_kernel(a in arb_matrix(3, 5)) {
        let am = m(&a);
        let ker = integer_kernel(&am);
        prop_assert_eq!(ker.len(), am.cols() - oracle_rank(&a));
        for v in &ker {
            prop_assert!(am.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(saturate(&ker), ker.clone());
    }

    #[test]
    fn solve_solutions_substitute_back(a in arb_matrix(4, 4), b in prop::collection::vec(-6i64..=6, 4)) {
        let a: RatMatrix = m(&a).to_rational();
        let b: Vec<BigRational> = b[..a.rows()].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        if let Some(x) = solve(&a, &b).unwrap() {
            prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
        } else {
            // inconsistent: appending b raises the rank
            let aug = RatMatrix::from_fn(a.rows(), a.cols() + 1, |i, j| {
                if j < a.cols() { a[(i, j)].clone() } else { b[i].clone() }
            });
            prop_assert!(defectpoly_core::linalg::rank(&aug) > defectpoly_core::linalg::rank(&a));
        }
    }
}
