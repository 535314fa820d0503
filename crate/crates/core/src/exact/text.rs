//! Plain-text matrix format.
//!
//! ```text
//! rows cols
//! a11 a12 ...
//! ...
//! ```
//!
//! Entries are `n` or `n/d` with `d` a positive power of two. Blank lines
//! and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::dyadic::Dyadic;
use super::matrix::{DyadicMatrix, DyadicVector};
use crate::error::{Error, Result};

pub fn parse_matrix(text: &str) -> Result<DyadicMatrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad dimension `{t}`"))))
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(Error::Parse(format!("header must be `rows cols`, got `{header}`")));
    };
    let mut values = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {rows} rows, found {r}")))?;
        let row: Vec<Dyadic> = line.split_whitespace().map(str::parse).collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {cols}",
                r + 1,
                row.len()
            )));
        }
        values.extend(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content `{extra}`")));
    }
    DyadicMatrix::from_dyadics(rows, cols, &values)
}

pub fn format_matrix(m: &DyadicMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// A vector is a `1 × n` or `n × 1` matrix in the same format.
pub fn parse_vector(text: &str) -> Result<DyadicVector> {
    let m = parse_matrix(text)?;
    if m.rows() == 1 {
        Ok(m.row(0))
    } else if m.cols() == 1 {
        Ok(m.transpose().row(0))
    } else {
        Err(Error::Parse(format!(
            "expected a 1 x n or n x 1 matrix, got {} x {}",
            m.rows(),
            m.cols()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "2 3\n1 -1/2 0\n3/4 2 -5\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.get(0, 1), Dyadic::new(-1, 1));
        assert_eq!(format_matrix(&m), text);
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn rejects_non_dyadic_denominators() {
        assert!(parse_matrix("1 2\n1/3 1\n").is_err());
        assert!(parse_matrix("1 1\n1/6\n").is_err());
    }

    #[test]
    fn rejects_shape_errors() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2 2\n1 0\n").is_err());
        assert!(parse_matrix("1 2\n1 0 0\n").is_err());
        assert!(parse_matrix("1 1\n1\n2\n").is_err());
        assert!(parse_matrix("1\n1\n").is_err());
    }

    #[test]
    fn vectors_in_either_orientation() {
        let a = parse_vector("1 3\n1 1/2 0").unwrap();
        let b = parse_vector("# column\n3 1\n1\n1/2\n0\n").unwrap();
        assert_eq!(a, b);
        assert!(parse_vector("2 2\n1 0\n0 1").is_err());
    }
}
