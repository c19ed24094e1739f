//! Front end for `defectpoly`: polytope files in, invariants out.
//!
//! Exit codes: 0 on success, 1 on domain, parse or verification failure,
//! 2 on usage errors.

pub mod polyfile;
pub mod repro;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use defectpoly_core::constructions::{
    cayley, cube, hypersimplex, lattice_equivalent, lattice_pyramid, prism, product,
    r_fold_pyramid, simplex, DEFAULT_VERTEX_CAP,
};
use defectpoly_core::geom::{dilate, ehrhart_polynomial};
use defectpoly_core::{ct_invariant, f_poly, report, Polytope};

pub const VERTEX_CAP_ENV: &str = "DEFECTPOLY_VERTEX_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}: {err}")]
    Parse {
        source_name: String,
        err: polyfile::ParseError,
    },
    #[error("{name}: {err}")]
    Io { name: String, err: io::Error },
    #[error(transparent)]
    Core(#[from] defectpoly_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{failed} of {total} reproduction checks failed")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "defectpoly",
    version,
    about = "Face-volume invariants of lattice polytopes"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for per-face computations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a standard polytope.
    Construct {
        #[command(subcommand)]
        what: Construction,
        /// Output file; stdout when absent.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Apply a construction to a polytope file.
    Transform {
        #[command(subcommand)]
        op: Transform,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Print an invariant of a polytope file.
    Invariant {
        kind: InvariantKind,
        /// Dilation parameter; required by `ct`, may repeat.
        #[arg(long = "t")]
        t: Vec<u64>,
        /// Input file; stdin when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Recompute the reference values and compare.
    Repro {
        #[arg(long, hide = true, value_enum)]
        mutate: Option<repro::MutationArg>,
    },
    /// Decide lattice equivalence of two polytope files.
    Equivalent { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum Construction {
    /// conv(0, e_1, ..., e_d)
    Simplex { d: usize },
    /// [0,1]^d
    Cube { d: usize },
    /// Δ(k, n)
    Hypersimplex { k: usize, n: usize },
    /// P × [0,1] for P read from a file.
    PrismOverFile { input: PathBuf },
    /// P × Q
    Product { a: PathBuf, b: PathBuf },
    /// Cayley join of the given files.
    Cayley {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Transform {
    Prism {
        input: Option<PathBuf>,
    },
    Pyramid {
        input: Option<PathBuf>,
    },
    /// r-fold lattice pyramid.
    Rpyr {
        r: usize,
        input: Option<PathBuf>,
    },
    /// t-th dilate.
    Dilate {
        t: u64,
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantKind {
    Ct,
    C0,
    Fpoly,
    Ehrhart,
    Report,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn load(&mut self, path: Option<&Path>) -> CliResult<Polytope> {
        let (name, text) = match path {
            Some(p) if p != Path::new("-") => {
                let name = p.display().to_string();
                let text = fs::read_to_string(p).map_err(|err| CliError::Io {
                    name: name.clone(),
                    err,
                })?;
                (name, text)
            }
            _ => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|err| CliError::Io {
                        name: "<stdin>".into(),
                        err,
                    })?;
                ("<stdin>".to_string(), text)
            }
        };
        let (p, stripped) = polyfile::parse(&text).map_err(|err| CliError::Parse {
            source_name: name.clone(),
            err,
        })?;
        if !stripped.is_empty() {
            let _ = writeln!(
                self.stderr,
                "{name}: dropped {} duplicate and {} non-vertex rows",
                stripped.duplicates.len(),
                stripped.non_extreme.len()
            );
        }
        Ok(p)
    }

    fn emit(&mut self, p: &Polytope, output: Option<&Path>) -> CliResult<()> {
        let text = polyfile::serialize(p);
        match output {
            Some(path) if path != Path::new("-") => {
                fs::write(path, text).map_err(|err| CliError::Io {
                    name: path.display().to_string(),
                    err,
                })
            }
            _ => self.print(&text),
        }
    }

    fn print(&mut self, s: &str) -> CliResult<()> {
        self.stdout
            .write_all(s.as_bytes())
            .map_err(|err| CliError::Io {
                name: "<stdout>".into(),
                err,
            })
    }
}

fn vertex_cap() -> CliResult<usize> {
    match std::env::var(VERTEX_CAP_ENV) {
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{VERTEX_CAP_ENV}={s} is not a vertex count"))),
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn construct(io: &mut Io, what: &Construction) -> CliResult<Polytope> {
    Ok(match what {
        Construction::Simplex { d } => simplex(*d),
        Construction::Cube { d } => cube(*d)?,
        Construction::Hypersimplex { k, n } => hypersimplex(*k, *n)?,
        Construction::PrismOverFile { input } => prism(&io.load(Some(input))?),
        Construction::Product { a, b } => product(&io.load(Some(a))?, &io.load(Some(b))?),
        Construction::Cayley { inputs } => {
            let factors = inputs
                .iter()
                .map(|p| io.load(Some(p)))
                .collect::<CliResult<Vec<_>>>()?;
            cayley(&factors)?
        }
    })
}

fn transform(io: &mut Io, op: &Transform) -> CliResult<Polytope> {
    Ok(match op {
        Transform::Prism { input } => prism(&io.load(input.as_deref())?),
        Transform::Pyramid { input } => lattice_pyramid(&io.load(input.as_deref())?),
        Transform::Rpyr { r, input } => r_fold_pyramid(&io.load(input.as_deref())?, *r),
        Transform::Dilate { t, input } => dilate(&io.load(input.as_deref())?, *t)?,
    })
}

fn invariant(
    io: &mut Io,
    json: bool,
    kind: InvariantKind,
    ts: &[u64],
    input: Option<&Path>,
) -> CliResult<()> {
    if kind == InvariantKind::Ct && ts.is_empty() {
        return Err(CliError::Usage("`invariant ct` needs --t <T>".into()));
    }
    let p = io.load(input)?;
    if json {
        let r = report(&p, ts)?;
        return io.print(&json_line(&r));
    }
    let text = match kind {
        InvariantKind::Ct => ts
            .iter()
            .map(|&t| ct_invariant(&p, t).to_string())
            .collect::<Vec<_>>()
            .join(" "),
        InvariantKind::C0 => ct_invariant(&p, 0).to_string(),
        InvariantKind::Fpoly => f_poly(&p)?
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        InvariantKind::Ehrhart => ehrhart_polynomial(&p).to_string(),
        InvariantKind::Report => {
            let r = report(&p, ts)?;
            return io.print(&r.to_string());
        }
    };
    io.print(&format!("{text}\n"))
}

fn dispatch(cli: &Cli, io: &mut Io) -> CliResult<()> {
    if let Some(n) = cli.jobs {
        // a second initialization in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global();
    }
    match &cli.command {
        Command::Construct { what, output } => {
            let p = construct(io, what)?;
            io.emit(&p, output.as_deref())
        }
        Command::Transform { op, output } => {
            let p = transform(io, op)?;
            io.emit(&p, output.as_deref())
        }
        Command::Invariant { kind, t, input } => {
            invariant(io, cli.json, *kind, t, input.as_deref())
        }
        Command::Repro { mutate } => {
            let outcome = repro::run(*mutate)?;
            if cli.json {
                io.print(&json_line(&outcome))?;
            } else {
                io.print(&repro::table(&outcome))?;
            }
            let failed = outcome.failures().count();
            for r in outcome.failures() {
                let _ = writeln!(
                    io.stderr,
                    "{}: expected {}, computed {}",
                    r.id, r.expected, r.computed
                );
            }
            if failed > 0 {
                return Err(CliError::Verification {
                    failed,
                    total: outcome.rows.len(),
                });
            }
            Ok(())
        }
        Command::Equivalent { a, b } => {
            let cap = vertex_cap()?;
            let (p, q) = (io.load(Some(a))?, io.load(Some(b))?);
            let eq = lattice_equivalent(&p, &q, cap)?;
            if cli.json {
                io.print(&json_line(&serde_json::json!({ "equivalent": eq })))
            } else {
                io.print(&format!("{eq}\n"))
            }
        }
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return e.exit_code();
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(&cli, &mut io) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            e.exit_code()
        }
    }
}
