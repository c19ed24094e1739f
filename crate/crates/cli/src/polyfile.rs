//! Plain-text polytope files: one vertex per line, integers separated by
//! whitespace, `#` starts a comment line. No header; the dimension is the
//! line width. A file whose only non-comment lines are blank holds the single
//! point of `R^0`.

use std::fmt;

use defectpoly_core::linalg::IntMatrix;
use defectpoly_core::polytope::Stripped;
use defectpoly_core::Polytope;
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Vertex rows exactly as written, before any hull computation.
pub fn parse_rows(text: &str) -> Result<IntMatrix, ParseError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut width: Option<(usize, usize)> = None;
    let mut saw_blank = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            saw_blank = true;
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| ParseError::new(line_no, format!("`{tok}` is not an integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        match width {
            None => width = Some((row.len(), line_no)),
            Some((w, first)) if w != row.len() => {
                return Err(ParseError::new(
                    line_no,
                    format!("{} coordinates, but line {first} has {w}", row.len()),
                ));
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        if saw_blank {
            return Ok(IntMatrix::zeros(1, 0));
        }
        return Err(ParseError::new(0, "no vertices"));
    }
    let cols = rows[0].len();
    IntMatrix::from_rows(cols, rows).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses and takes the convex hull; the second value lists rows that were
/// not vertices.
pub fn parse(text: &str) -> Result<(Polytope, Stripped), ParseError> {
    let rows = parse_rows(text)?;
    Polytope::from_points(&rows).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Vertex rows in stored order, one per line, each terminated by `\n`.
pub fn serialize(p: &Polytope) -> String {
    Display(p).to_string()
}

struct Display<'a>(&'a Polytope);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.0.vertices().row_iter() {
            let mut first = true;
            for x in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
