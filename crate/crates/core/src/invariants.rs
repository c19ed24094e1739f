//! Alternating face sums of a lattice polytope.
//!
//! For a `d`-polytope `P` with `f_k` faces of dimension `k`:
//!
//! * `c_t(P) = Σ_k (-1)^(d-k) · (k+t)!/k! · Σ_{dim F = k} lvol(F)`
//! * `f(P, t) = Σ_k (-1)^(d-k) · (k+1)! · t^(d-k) · Σ_{dim F = k} ehr(F, t)`
//!
//! where `lvol` is the normalized volume in the lattice of `aff(F)` and `ehr`
//! the Ehrhart polynomial. The leading coefficient of `f` is `c_1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{face_ehrhart_polynomials, face_volumes, is_smooth, PullingOrder};
use crate::polytope::Polytope;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(k+t)! / k!`
fn rising(k: usize, t: u64) -> BigInt {
    (1..=t).fold(BigInt::one(), |acc, i| acc * (k as u64 + i))
}

fn alternating_sign(d: usize, k: usize) -> BigInt {
    if (d - k).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Deliberate corruptions of the `c_t` evaluation, used as negative controls
/// by the reproduction harness.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Drop the `(-1)^(d-k)` factor.
    SignAlternation,
    /// Use Euclidean chart volume (`lvol / k!`) in place of `lvol`.
    VolumeNormalization,
}

fn ct_from_volumes(volumes: &[Vec<BigInt>], t: u64, mutation: Option<Mutation>) -> BigRational {
    let d = volumes.len() - 1;
    let mut total = BigRational::zero();
    for (k, level) in volumes.iter().enumerate() {
        let sum: BigInt = level.iter().sum();
        let sign = match mutation {
            Some(Mutation::SignAlternation) => BigInt::one(),
            _ => alternating_sign(d, k),
        };
        let mut term = BigRational::from_integer(sign * rising(k, t) * sum);
        if mutation == Some(Mutation::VolumeNormalization) {
            term /= BigRational::from_integer(factorial(k));
        }
        total += term;
    }
    total
}

/// `c_t(P)` with `d` the intrinsic dimension of `P`.
pub fn ct_invariant(p: &Polytope, t: u64) -> BigInt {
    let volumes = face_volumes(p, PullingOrder::Lowest);
    ct_from_volumes(&volumes, t, None).to_integer()
}

/// `c_t(P)` evaluated with a corrupted formula; may be non-integral.
#[doc(hidden)]
pub fn ct_invariant_mutated(p: &Polytope, t: u64, mutation: Mutation) -> BigRational {
    let volumes = face_volumes(p, PullingOrder::Lowest);
    ct_from_volumes(&volumes, t, Some(mutation))
}

/// Coefficients of `f(P, t)`, ascending, exactly `dim + 1` entries.
pub fn f_poly(p: &Polytope) -> Result<Vec<BigInt>> {
    let d = p.dim();
    let ehr = face_ehrhart_polynomials(p);
    let mut coeffs = vec![BigRational::zero(); d + 1];
    for (k, level) in ehr.iter().enumerate() {
        let scale = BigRational::from_integer(alternating_sign(d, k) * factorial(k + 1));
        for poly in level {
            for (i, c) in poly.coeffs().iter().enumerate() {
                let slot = i + d - k;
                if slot > d {
                    return Err(Error::Internal(format!(
                        "Ehrhart polynomial of a {k}-face has degree {i}"
                    )));
                }
                coeffs[slot] += c * &scale;
            }
        }
    }
    coeffs
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Internal(format!(
                    "coefficient of t^{i} in f(P, t) is {c}, not an integer"
                )))
            }
        })
        .collect()
}

/// `r!·c_0(P) + (-1)^(d+1)·r!`, the value of `c_r(pyr^r(P))` for a
/// `d`-dimensional `P` with `c_0(P) = c0`.
pub fn pyramid_ct_closed_form(c0: &BigInt, d: usize, r: usize) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::domain("pyramid closed form needs r >= 1"));
    }
    let rf = factorial(r);
    let tail = if (d + 1).is_multiple_of(2) {
        rf.clone()
    } else {
        -rf.clone()
    };
    Ok(rf * c0 + tail)
}

/// Smooth with `c_1(P) = 0`.
pub fn is_defect(p: &Polytope) -> bool {
    is_smooth(p) && ct_invariant(p, 1).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CtValue {
    pub t: u64,
    #[serde(serialize_with = "json::bigint")]
    pub value: BigInt,
}

/// Everything the CLI prints about one polytope. Field order is the
/// serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub dim: usize,
    pub ambient_dim: usize,
    pub n_vertices: usize,
    pub f_vector: Vec<usize>,
    pub is_simple: bool,
    pub is_smooth: bool,
    #[serde(serialize_with = "json::bigint")]
    pub c0: BigInt,
    #[serde(serialize_with = "json::bigint")]
    pub c1: BigInt,
    pub ct: Vec<CtValue>,
    #[serde(serialize_with = "json::bigints")]
    pub f_coefficients: Vec<BigInt>,
    pub is_defect: bool,
}

pub const REPORT_SCHEMA: u32 = 1;

pub fn report(p: &Polytope, extra_t: &[u64]) -> Result<InvariantReport> {
    let volumes = face_volumes(p, PullingOrder::Lowest);
    let ct = |t| ct_from_volumes(&volumes, t, None).to_integer();
    let c0 = ct(0);
    let c1 = ct(1);
    let smooth = is_smooth(p);
    Ok(InvariantReport {
        schema: REPORT_SCHEMA,
        dim: p.dim(),
        ambient_dim: p.ambient_dim(),
        n_vertices: p.n_vertices(),
        f_vector: p.face_lattice().f_vector(),
        is_simple: p.is_simple(),
        is_smooth: smooth,
        is_defect: smooth && c1.is_zero(),
        ct: extra_t
            .iter()
            .map(|&t| CtValue { t, value: ct(t) })
            .collect(),
        c0,
        c1,
        f_coefficients: f_poly(p)?,
    })
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for InvariantReport {
    /// Aligned two-column table.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows: Vec<(String, String)> = vec![
            ("dim".into(), self.dim.to_string()),
            ("ambient_dim".into(), self.ambient_dim.to_string()),
            ("n_vertices".into(), self.n_vertices.to_string()),
            ("f_vector".into(), join(&self.f_vector)),
            ("is_simple".into(), self.is_simple.to_string()),
            ("is_smooth".into(), self.is_smooth.to_string()),
            ("c0".into(), self.c0.to_string()),
            ("c1".into(), self.c1.to_string()),
        ];
        for c in &self.ct {
            rows.push((format!("c{}", c.t), c.value.to_string()));
        }
        rows.push(("f_coefficients".into(), join(&self.f_coefficients)));
        rows.push(("is_defect".into(), self.is_defect.to_string()));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            writeln!(f, "{k:<width$}  {v}")?;
        }
        Ok(())
    }
}

mod json {
    use num_bigint::BigInt;
    use serde::ser::SerializeSeq;
    use serde::{Serialize, Serializer};

    // Emits the integer as a bare JSON number of any size.
    pub fn bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = x.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn bigints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        struct Wrap<'a>(&'a BigInt);
        impl Serialize for Wrap<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                bigint(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&Wrap(x))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cube, simplex};

    #[test]
    fn point_values() {
        let pt = simplex(0);
        for t in 0..5 {
            assert_eq!(ct_invariant(&pt, t), factorial(t as usize));
        }
        assert_eq!(f_poly(&pt).unwrap(), vec![BigInt::one()]);
    }

    #[test]
    fn segment_c1_vanishes() {
        let seg = cube(1).unwrap();
        assert_eq!(ct_invariant(&seg, 1), BigInt::zero());
        // (t+1)! - 2 t!
        assert_eq!(ct_invariant(&seg, 3), BigInt::from(24 - 12));
    }

    #[test]
    fn closed_form_plug_ins() {
        let c0 = BigInt::from(-2);
        let got: Vec<BigInt> = (1..=3)
            .map(|r| pyramid_ct_closed_form(&c0, 3, r).unwrap())
            .collect();
        assert_eq!(
            got,
            vec![BigInt::from(-1), BigInt::from(-2), BigInt::from(-6)]
        );
        assert_eq!(
            pyramid_ct_closed_form(&BigInt::zero(), 2, 1).unwrap(),
            BigInt::from(-1)
        );
        assert!(matches!(
            pyramid_ct_closed_form(&c0, 3, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn report_of_point() {
        let r = report(&simplex(0), &[]).unwrap();
        assert_eq!(r.dim, 0);
        assert_eq!(r.f_vector, vec![1]);
        assert_eq!(r.c0, BigInt::one());
        assert_eq!(r.c1, BigInt::one());
        assert!(r.ct.is_empty());
    }

    #[test]
    fn json_numbers_are_unquoted() {
        let r = report(&cube(2).unwrap(), &[5]).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(
            s.starts_with(r#"{"schema":1,"dim":2,"ambient_dim":2,"#),
            "{s}"
        );
        assert!(s.contains(r#""f_coefficients":[6,"#), "{s}");
    }
}
