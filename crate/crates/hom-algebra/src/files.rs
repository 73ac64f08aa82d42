//! JSON serialization for algebras and matrices.
//!
//! Rationals are stored as `"p/q"` strings, never floats, so files round-trip
//! exactly. Structure constants are sparse (omitted entries are zero, indices
//! 1-based); the twist is dense. A file with `"bracket": true` may only list
//! entries with i < j; the i > j side is implied by skew-symmetry and the
//! loaded algebra is marked skew.

use std::path::Path;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::HomAlgebra;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::rational::{format_rational, parse_rational, Rational};

/// On-disk shape of an algebra.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub mu: Vec<(usize, usize, usize, String)>,
    pub alpha: Vec<Vec<String>>,
    pub bracket: bool,
}

/// Canonical file form: nonzero constants only, sorted by (i, j, k)
/// ascending 1-based; for a bracket only the i < j side is written.
pub fn algebra_to_file(a: &HomAlgebra) -> AlgebraFile {
    let n = a.dim();
    let mut mu = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if a.skew_declared() && i >= j {
                continue;
            }
            for k in 0..n {
                let value = a.constant(i, j, k);
                if !value.is_zero() {
                    mu.push((i + 1, j + 1, k + 1, format_rational(value)));
                }
            }
        }
    }
    let alpha = (0..n)
        .map(|i| (0..n).map(|j| format_rational(a.alpha().get(i, j))).collect())
        .collect();
    AlgebraFile { dim: n, mu, alpha, bracket: a.skew_declared() }
}

/// Validates and builds the algebra a file describes.
pub fn algebra_from_file(file: &AlgebraFile) -> Result<HomAlgebra, Error> {
    let n = file.dim;
    let mut entries = Vec::with_capacity(file.mu.len());
    for (i, j, k, text) in &file.mu {
        for index in [i, j, k] {
            if *index == 0 || *index > n {
                return Err(Error::IndexOutOfRange { index: *index, bound: n });
            }
        }
        if file.bracket && i >= j {
            return Err(Error::BracketEntryOrder { i: *i, j: *j });
        }
        entries.push((i - 1, j - 1, k - 1, parse_rational(text)?));
    }
    if file.alpha.len() != n {
        return Err(Error::Dimension { expected: n, got: file.alpha.len() });
    }
    let mut alpha_rows = Vec::with_capacity(n);
    for row in &file.alpha {
        if row.len() != n {
            return Err(Error::Dimension { expected: n, got: row.len() });
        }
        alpha_rows.push(row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?);
    }
    let alpha = Matrix::from_rows(alpha_rows);
    if file.bracket {
        HomAlgebra::from_bracket_entries(n, &entries, alpha)
    } else {
        HomAlgebra::from_entries(n, &entries, alpha, false)
    }
}

/// Canonical text form: one `mu` entry and one `alpha` row per line. The
/// layout is stable, so saving a loaded file is byte-idempotent.
pub fn algebra_to_json(a: &HomAlgebra) -> String {
    let file = algebra_to_file(a);
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"dim\": {},\n", file.dim));
    out.push_str("  \"mu\": [\n");
    for (pos, (i, j, k, value)) in file.mu.iter().enumerate() {
        let comma = if pos + 1 < file.mu.len() { "," } else { "" };
        out.push_str(&format!("    [{i}, {j}, {k}, \"{value}\"]{comma}\n"));
    }
    out.push_str("  ],\n");
    out.push_str("  \"alpha\": [\n");
    for (pos, row) in file.alpha.iter().enumerate() {
        let comma = if pos + 1 < file.alpha.len() { "," } else { "" };
        let cells = row.iter().map(|v| format!("\"{v}\"")).collect::<Vec<_>>().join(", ");
        out.push_str(&format!("    [{cells}]{comma}\n"));
    }
    out.push_str("  ],\n");
    out.push_str(&format!("  \"bracket\": {}\n", file.bracket));
    out.push('}');
    out
}

pub fn algebra_from_json(text: &str) -> Result<HomAlgebra, Error> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::ParseFile(e.to_string()))?;
    algebra_from_file(&file)
}

pub fn load_algebra(path: &Path) -> Result<HomAlgebra, Error> {
    algebra_from_json(&std::fs::read_to_string(path)?)
}

pub fn save_algebra(a: &HomAlgebra, path: &Path) -> Result<(), Error> {
    std::fs::write(path, algebra_to_json(a) + "\n")?;
    Ok(())
}

/// A matrix file is a bare JSON array of rows of `"p/q"` strings.
pub fn matrix_from_json(text: &str) -> Result<Matrix, Error> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| Error::ParseFile(e.to_string()))?;
    let width = rows.first().map_or(0, Vec::len);
    let mut parsed = Vec::with_capacity(rows.len());
    for row in &rows {
        if row.len() != width {
            return Err(Error::ParseFile("ragged matrix rows".into()));
        }
        parsed.push(row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(parsed))
}

pub fn matrix_to_json(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells = (0..m.cols())
                .map(|j| format!("\"{}\"", format_rational(m.get(i, j))))
                .collect::<Vec<_>>()
                .join(", ");
            format!("  [{cells}]")
        })
        .collect();
    format!("[\n{}\n]", rows.join(",\n"))
}

pub fn load_matrix(path: &Path) -> Result<Matrix, Error> {
    matrix_from_json(&std::fs::read_to_string(path)?)
}

/// Parses `k=v,k=v` parameter assignments with rational values.
pub fn parse_param_list(text: &str) -> Result<Vec<(String, Rational)>, Error> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (name, value) = piece
            .split_once('=')
            .ok_or_else(|| Error::ParseFile(format!("expected `name=value`, got `{piece}`")))?;
        out.push((name.trim().to_string(), parse_rational(value)?));
    }
    Ok(out)
}
