//! Integer matrices and row-style Hermite normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// `rows` may be zero (an HNF of the zero matrix has no rows); `cols` may not.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::DimensionMismatch("matrix must have at least one column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    /// Row-style Hermite normal form.
    ///
    /// Rows are returned in pivot order with zero rows dropped. Pivots are
    /// positive and every entry above a pivot lies in `[0, pivot)`. The row
    /// span over Z is unchanged.
    pub fn hnf(&self) -> IntMatrix {
        let mut echelon = Echelon::new(self.cols);
        for r in 0..self.rows {
            echelon.insert(self.row(r).to_vec());
        }
        echelon.into_matrix()
    }

    /// Column index of each row's leading entry (meaningful on echelon forms).
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.rows)
            .filter_map(|r| self.row(r).iter().position(|e| !e.is_zero()))
            .collect()
    }

    /// Integer coefficients `c` with `v = Σ c_i · row_i`, for a matrix in echelon form.
    pub fn solve_echelon(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.cols {
            return None;
        }
        let mut residual = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let row = self.row(r);
            let Some(p) = row.iter().position(|e| !e.is_zero()) else {
                coeffs.push(BigInt::zero());
                continue;
            };
            let (q, rem) = residual[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, y) in residual.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
            coeffs.push(q);
        }
        residual.iter().all(Zero::is_zero).then_some(coeffs)
    }

    /// Determinant by fraction-free (Bareiss) elimination; `None` unless square.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return Some(BigInt::zero());
                };
                for c in 0..n {
                    a.swap(k * n + c, swap * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        Some(if n == 0 { BigInt::one() } else { sign * &a[n * n - 1] })
    }

    /// Determinant of a square echelon matrix (product of the diagonal).
    pub fn echelon_determinant(&self) -> Option<BigInt> {
        (self.rows == self.cols).then(|| (0..self.rows).map(|i| self.get(i, i).clone()).product())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained echelon basis, keyed by pivot column.
struct Echelon {
    cols: usize,
    pivots: Vec<Option<Vec<BigInt>>>,
}

impl Echelon {
    fn new(cols: usize) -> Self {
        Echelon {
            cols,
            pivots: vec![None; cols],
        }
    }

    fn insert(&mut self, mut row: Vec<BigInt>) {
        let mut changed = false;
        for c in 0..self.cols {
            if row[c].is_zero() {
                continue;
            }
            match self.pivots[c].take() {
                None => {
                    if row[c].is_negative() {
                        row.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.pivots[c] = Some(row);
                    changed = true;
                    break;
                }
                Some(p) => {
                    let (a, b) = (p[c].clone(), row[c].clone());
                    if b.is_multiple_of(&a) {
                        let q = &b / &a;
                        for (x, y) in row.iter_mut().zip(&p) {
                            *x -= &q * y;
                        }
                        self.pivots[c] = Some(p);
                    } else {
                        let eg = a.extended_gcd(&b);
                        let (mut g, mut s, mut t) = (eg.gcd, eg.x, eg.y);
                        if g.is_negative() {
                            g = -g;
                            s = -s;
                            t = -t;
                        }
                        let (ag, bg) = (&a / &g, &b / &g);
                        let new_pivot: Vec<BigInt> =
                            p.iter().zip(&row).map(|(x, y)| &s * x + &t * y).collect();
                        row = p.iter().zip(&row).map(|(x, y)| &ag * y - &bg * x).collect();
                        self.pivots[c] = Some(new_pivot);
                        changed = true;
                    }
                }
            }
        }
        if changed {
            self.reduce();
        }
    }

    fn reduce(&mut self) {
        let order: Vec<usize> = (0..self.cols).filter(|&c| self.pivots[c].is_some()).collect();
        for (i, &ci) in order.iter().enumerate() {
            let pivot_row = self.pivots[ci].clone().expect("pivot present");
            let p = &pivot_row[ci];
            for &cj in &order[..i] {
                let row = self.pivots[cj].as_mut().expect("pivot present");
                let q = row[ci].div_floor(p);
                if !q.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }

    fn into_matrix(mut self) -> IntMatrix {
        self.reduce();
        let rows: Vec<Vec<BigInt>> = self.pivots.into_iter().flatten().collect();
        let n = rows.len();
        IntMatrix {
            rows: n,
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }
}
