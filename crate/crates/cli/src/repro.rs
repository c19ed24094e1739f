//! Recomputes every published value and compares it with the expected one.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use defectpoly_core::constructions::{cube, hypersimplex, prism, r_fold_pyramid, simplex};
use defectpoly_core::geom::is_smooth;
use defectpoly_core::invariants::{ct_invariant_mutated, Mutation};
use defectpoly_core::{ct_invariant, f_poly, Polytope, Result};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Smooth,
    Ct(u64),
    FPoly,
}

struct Check {
    id: &'static str,
    what: &'static str,
    build: fn() -> Polytope,
    kind: Kind,
    expected: &'static [i64],
}

fn pyr_cube(r: usize) -> Polytope {
    r_fold_pyramid(&cube(3).expect("cube(3)"), r)
}

const CHECKS: &[Check] = &[
    Check {
        id: "prism-smooth",
        what: "SMOOTH of prism(simplex(2))",
        build: || prism(&simplex(2)),
        kind: Kind::Smooth,
        expected: &[1],
    },
    Check {
        id: "prism-c1",
        what: "c_1 of prism(simplex(2))",
        build: || prism(&simplex(2)),
        kind: Kind::Ct(1),
        expected: &[0],
    },
    Check {
        id: "hypersimplex-c1",
        what: "c_1 of hypersimplex(3,6)",
        build: || hypersimplex(3, 6).expect("hypersimplex(3,6)"),
        kind: Kind::Ct(1),
        expected: &[136],
    },
    Check {
        id: "cube-c0",
        what: "c_0 of cube(3)",
        build: || cube(3).expect("cube(3)"),
        kind: Kind::Ct(0),
        expected: &[-2],
    },
    Check {
        id: "cube-c1",
        what: "c_1 of cube(3)",
        build: || cube(3).expect("cube(3)"),
        kind: Kind::Ct(1),
        expected: &[4],
    },
    Check {
        id: "pyr1-c1",
        what: "c_1 of pyr^1(cube(3))",
        build: || pyr_cube(1),
        kind: Kind::Ct(1),
        expected: &[-1],
    },
    Check {
        id: "pyr2-c2",
        what: "c_2 of pyr^2(cube(3))",
        build: || pyr_cube(2),
        kind: Kind::Ct(2),
        expected: &[-2],
    },
    Check {
        id: "pyr3-c3",
        what: "c_3 of pyr^3(cube(3))",
        build: || pyr_cube(3),
        kind: Kind::Ct(3),
        expected: &[-6],
    },
    Check {
        id: "cube-fpoly",
        what: "f(cube(3), t)",
        build: || cube(3).expect("cube(3)"),
        kind: Kind::FPoly,
        expected: &[24, 36, 24, 4],
    },
    Check {
        id: "pyr1-fpoly",
        what: "f(pyr^1(cube(3)), t)",
        build: || pyr_cube(1),
        kind: Kind::FPoly,
        expected: &[120, 192, 114, 32, -1],
    },
    Check {
        id: "pyr3-fpoly",
        what: "f(pyr^3(cube(3)), t)",
        build: || pyr_cube(3),
        kind: Kind::FPoly,
        expected: &[5040, 9060, 5538, 1698, 188, -3, 0],
    },
    Check {
        id: "pyr5-fpoly",
        what: "f(pyr^5(cube(3)), t)",
        build: || pyr_cube(5),
        kind: Kind::FPoly,
        expected: &[362880, 717696, 491304, 163056, 28086, 1490, -15, 0, 0],
    },
    Check {
        id: "pyr2-square-c1",
        what: "c_1 of pyr^2(cube(2))",
        build: || r_fold_pyramid(&cube(2).expect("cube(2)"), 2),
        kind: Kind::Ct(1),
        expected: &[0],
    },
];

/// Corruptions accepted by the hidden `--mutate` flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MutationArg {
    Sign,
    Volume,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Self {
        match m {
            MutationArg::Sign => Mutation::SignAlternation,
            MutationArg::Volume => Mutation::VolumeNormalization,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub id: &'static str,
    pub what: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub schema: u32,
    pub all_pass: bool,
    pub rows: Vec<Row>,
}

impl Outcome {
    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn compute(check: &Check, mutation: Option<Mutation>) -> Result<String> {
    let p = (check.build)();
    Ok(match check.kind {
        Kind::Smooth => u8::from(is_smooth(&p)).to_string(),
        Kind::Ct(t) => match mutation {
            None => ct_invariant(&p, t).to_string(),
            Some(m) => ct_invariant_mutated(&p, t, m).to_string(),
        },
        Kind::FPoly => join(f_poly(&p)?),
    })
}

pub fn run(mutation: Option<MutationArg>) -> Result<Outcome> {
    let mutation = mutation.map(Mutation::from);
    let mut rows = Vec::with_capacity(CHECKS.len());
    for check in CHECKS {
        let start = Instant::now();
        let computed = compute(check, mutation)?;
        let expected = join(check.expected.iter().map(|&x| BigInt::from(x)));
        rows.push(Row {
            id: check.id,
            what: check.what,
            pass: computed == expected,
            expected,
            computed,
            elapsed: start.elapsed(),
        });
    }
    Ok(Outcome {
        schema: 1,
        all_pass: rows.iter().all(|r| r.pass),
        rows,
    })
}

/// Aligned PASS/FAIL table with one row per check.
pub fn table(outcome: &Outcome) -> String {
    let w_id = outcome.rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let w_exp = outcome
        .rows
        .iter()
        .map(|r| r.expected.len())
        .max()
        .unwrap_or(0)
        .max(8);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "      {:<w_id$}  {:<w_exp$}  computed",
        "check", "expected"
    );
    for r in &outcome.rows {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status}  {:<w_id$}  {:<w_exp$}  {}  ({} ms)",
            r.id,
            r.expected,
            r.computed,
            r.elapsed.as_millis()
        );
    }
    let passed = outcome.rows.iter().filter(|r| r.pass).count();
    let _ = writeln!(out, "{passed}/{} checks passed", outcome.rows.len());
    out
}
