//! Dense matrices and vectors over Z[1/2].
//!
//! Both types store integer numerators over one shared power-of-two
//! denominator, reduced so that the exponent is zero or some numerator is
//! odd. Structural equality is therefore value equality, and the derived
//! `Hash` is a hash of the canonical form.
//!
//! Matrices act on column vectors: `m.mul_vec(v)` is `m·v`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::dyadic::{two_adic_valuation, Dyadic};
use super::int_matrix::IntMatrix;
use crate::error::{Error, Result};

fn canonicalize(exp: &mut u32, entries: &mut [BigInt]) {
    let mut shift = *exp;
    let mut any = false;
    for e in entries.iter().filter(|e| !e.is_zero()) {
        any = true;
        shift = shift.min(two_adic_valuation(e));
        if shift == 0 {
            break;
        }
    }
    if !any {
        *exp = 0;
        return;
    }
    if shift > 0 {
        for e in entries.iter_mut() {
            *e >>= shift as usize;
        }
        *exp -= shift;
    }
}

/// Numerators of `values` over the common denominator `2^exp`.
fn common_scale(values: &[Dyadic]) -> (u32, Vec<BigInt>) {
    let exp = values.iter().map(Dyadic::exponent).max().unwrap_or(0);
    let entries = values
        .iter()
        .map(|d| d.scaled_to(exp).expect("exp is the maximum"))
        .collect();
    (exp, entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicMatrix {
    rows: usize,
    cols: usize,
    exp: u32,
    entries: Vec<BigInt>,
}

impl DyadicMatrix {
    /// Matrix with entries `entries[r*cols + c] / 2^exp`.
    pub fn from_scaled(rows: usize, cols: usize, entries: Vec<BigInt>, exp: u32) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrix must have at least one row and column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let mut m = DyadicMatrix {
            rows,
            cols,
            exp,
            entries,
        };
        canonicalize(&mut m.exp, &mut m.entries);
        Ok(m)
    }

    pub fn from_dyadics(rows: usize, cols: usize, values: &[Dyadic]) -> Result<Self> {
        let (exp, entries) = common_scale(values);
        Self::from_scaled(rows, cols, entries, exp)
    }

    /// Square or rectangular matrix from integer rows scaled by `2^-exp`.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R], exp: u32) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::from_scaled(rows.len(), cols, entries, exp)
    }

    pub(crate) fn from_table<const N: usize>(table: &[[i8; N]; N], exp: u32) -> Self {
        let entries = table
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::from_scaled(N, N, entries, exp).expect("table is square")
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        DyadicMatrix {
            rows: n,
            cols: n,
            exp: 0,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DyadicMatrix {
            rows,
            cols,
            exp: 0,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Diagonal matrix with integer entries.
    pub fn diagonal(diag: &[i64]) -> Self {
        let n = diag.len();
        let mut entries = vec![BigInt::zero(); n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = BigInt::from(d);
        }
        Self::from_scaled(n, n, entries, 0).expect("square")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exponent of the shared denominator.
    pub fn exponent(&self) -> u32 {
        self.exp
    }

    /// Scaled numerators in row-major order.
    pub fn numerators(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> Dyadic {
        Dyadic::new(self.entries[r * self.cols + c].clone(), self.exp)
    }

    pub fn row(&self, r: usize) -> DyadicVector {
        let entries = self.entries[r * self.cols..(r + 1) * self.cols].to_vec();
        DyadicVector::from_scaled(entries, self.exp)
    }

    pub fn row_vectors(&self) -> Vec<DyadicVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn from_row_vectors(rows: &[DyadicVector]) -> Result<Self> {
        let cols = rows.first().map(DyadicVector::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("rows of different lengths".into()));
        }
        let exp = rows.iter().map(|r| r.exp).max().unwrap_or(0);
        let entries = rows
            .iter()
            .flat_map(|r| r.entries.iter().map(move |e| e << (exp - r.exp) as usize))
            .collect();
        Self::from_scaled(rows.len(), cols, entries, exp)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entries[r * self.cols + c].clone());
            }
        }
        DyadicMatrix {
            rows: self.cols,
            cols: self.rows,
            exp: self.exp,
            entries,
        }
    }

    /// Exact product, rejecting non-conformable operands.
    pub fn checked_mul(&self, rhs: &DyadicMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let (n, m, p) = (self.rows, self.cols, rhs.cols);
        let mut out = vec![BigInt::zero(); n * p];
        for i in 0..n {
            let row = &mut out[i * p..(i + 1) * p];
            for k in 0..m {
                let a = &self.entries[i * m + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &rhs.entries[k * p..(k + 1) * p];
                for (o, b) in row.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        Self::from_scaled(n, p, out, self.exp + rhs.exp)
    }

    /// Kronecker product: block `(p, q)` is `self[p, q] * rhs`.
    pub fn kron(&self, rhs: &DyadicMatrix) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut entries = vec![BigInt::zero(); rows * cols];
        for p in 0..self.rows {
            for q in 0..self.cols {
                let a = &self.entries[p * self.cols + q];
                if a.is_zero() {
                    continue;
                }
                for r in 0..rhs.rows {
                    for s in 0..rhs.cols {
                        let b = &rhs.entries[r * rhs.cols + s];
                        if !b.is_zero() {
                            entries[(p * rhs.rows + r) * cols + q * rhs.cols + s] = a * b;
                        }
                    }
                }
            }
        }
        Self::from_scaled(rows, cols, entries, self.exp + rhs.exp).expect("dimensions are consistent")
    }

    pub fn checked_add(&self, rhs: &DyadicMatrix) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let exp = self.exp.max(rhs.exp);
        let (sa, sb) = ((exp - self.exp) as usize, (exp - rhs.exp) as usize);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (a << sa) + (b << sb))
            .collect();
        Self::from_scaled(self.rows, self.cols, entries, exp)
    }

    pub fn scale(&self, s: &Dyadic) -> Self {
        let entries = self.entries.iter().map(|e| e * s.numerator()).collect();
        Self::from_scaled(self.rows, self.cols, entries, self.exp + s.exponent()).expect("same shape")
    }

    pub fn neg(&self) -> Self {
        DyadicMatrix {
            rows: self.rows,
            cols: self.cols,
            exp: self.exp,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn trace(&self) -> Dyadic {
        let n = self.rows.min(self.cols);
        let sum: BigInt = (0..n).map(|i| &self.entries[i * self.cols + i]).sum();
        Dyadic::new(sum, self.exp)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.exp == 0
            && self.entries.iter().enumerate().all(|(idx, e)| {
                if idx / self.cols == idx % self.cols {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> Result<Dyadic> {
        let (m, exp) = self.to_scaled_int();
        let det = m
            .determinant()
            .ok_or_else(|| Error::DimensionMismatch("determinant of a non-square matrix".into()))?;
        Ok(Dyadic::new(det, exp * self.rows as u32))
    }

    /// `m·mᵀ = I`, checked exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.is_square() && (self * &self.transpose()).is_identity()
    }

    /// Inverse of an orthogonal matrix, i.e. its transpose after checking `m·mᵀ = I`.
    pub fn inverse_orthogonal(&self) -> Result<Self> {
        if self.is_orthogonal() {
            Ok(self.transpose())
        } else {
            Err(Error::NotOrthogonal)
        }
    }

    pub fn mul_vec(&self, v: &DyadicVector) -> Result<DyadicVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let out = (0..self.rows)
            .map(|r| {
                self.entries[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .zip(&v.entries)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        Ok(DyadicVector::from_scaled(out, self.exp + v.exp))
    }

    /// Every entry lies in `allowed`.
    pub fn entries_within(&self, allowed: &[Dyadic]) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| allowed.contains(&self.get(r, c))))
    }

    /// Integer matrix `2^exp · self` together with `exp`.
    pub fn to_scaled_int(&self) -> (IntMatrix, u32) {
        let m = IntMatrix::new(self.rows, self.cols, self.entries.clone()).expect("same shape");
        (m, self.exp)
    }

    /// Positions and values where two equally-shaped matrices differ.
    pub fn differences(&self, other: &DyadicMatrix) -> Vec<(usize, usize, Dyadic, Dyadic)> {
        let mut out = Vec::new();
        if self.rows != other.rows || self.cols != other.cols {
            return out;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let (a, b) = (self.get(r, c), other.get(r, c));
                if a != b {
                    out.push((r, c, a, b));
                }
            }
        }
        out
    }
}

/// Panics on non-conformable operands; use [`DyadicMatrix::checked_mul`] for input validation.
impl Mul for &DyadicMatrix {
    type Output = DyadicMatrix;
    fn mul(self, rhs: &DyadicMatrix) -> DyadicMatrix {
        self.checked_mul(rhs).expect("conformable matrices")
    }
}

impl fmt::Display for DyadicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_matrix(self))
    }
}

/// Column vector over Z[1/2], stored like [`DyadicMatrix`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicVector {
    exp: u32,
    entries: Vec<BigInt>,
}

impl DyadicVector {
    pub fn from_scaled(mut entries: Vec<BigInt>, mut exp: u32) -> Self {
        canonicalize(&mut exp, &mut entries);
        DyadicVector { exp, entries }
    }

    pub fn from_dyadics(values: &[Dyadic]) -> Self {
        let (exp, entries) = common_scale(values);
        Self::from_scaled(entries, exp)
    }

    pub fn from_ints(values: &[i64], exp: u32) -> Self {
        Self::from_scaled(values.iter().map(|&x| BigInt::from(x)).collect(), exp)
    }

    pub fn zero(len: usize) -> Self {
        DyadicVector {
            exp: 0,
            entries: vec![BigInt::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Dyadic {
        Dyadic::new(self.entries[i].clone(), self.exp)
    }

    pub fn to_dyadics(&self) -> Vec<Dyadic> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Numerators over `2^exp`, or `None` if some entry needs a larger denominator.
    pub fn scaled_to(&self, exp: u32) -> Option<Vec<BigInt>> {
        if exp < self.exp {
            return None;
        }
        let s = (exp - self.exp) as usize;
        Some(self.entries.iter().map(|e| e << s).collect())
    }

    pub fn dot(&self, other: &DyadicVector) -> Dyadic {
        let sum: BigInt = self.entries.iter().zip(&other.entries).map(|(a, b)| a * b).sum();
        Dyadic::new(sum, self.exp + other.exp)
    }

    /// Squared Euclidean length.
    pub fn norm(&self) -> Dyadic {
        self.dot(self)
    }

    pub fn neg(&self) -> Self {
        DyadicVector {
            exp: self.exp,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn add(&self, other: &DyadicVector) -> Self {
        let exp = self.exp.max(other.exp);
        let (sa, sb) = ((exp - self.exp) as usize, (exp - other.exp) as usize);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a << sa) + (b << sb))
            .collect();
        Self::from_scaled(entries, exp)
    }

    pub fn scale(&self, s: &Dyadic) -> Self {
        let entries = self.entries.iter().map(|e| e * s.numerator()).collect();
        Self::from_scaled(entries, self.exp + s.exponent())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.get(i).to_f64()).collect()
    }
}

/// Lexicographic order on the exact coordinate tuple.
impl Ord for DyadicVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let (sa, sb) = ((exp - self.exp) as usize, (exp - other.exp) as usize);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            let ord = if sa == 0 && sb == 0 {
                a.cmp(b)
            } else {
                (a << sa).cmp(&(b << sb))
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for DyadicVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]], exp: u32) -> DyadicMatrix {
        DyadicMatrix::from_int_rows(rows, exp).unwrap()
    }

    #[test]
    fn canonical_equality_and_hash() {
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let a = m(&[&[1, 2], &[3, 4]], 1);
        let b = m(&[&[2, 4], &[6, 8]], 2);
        assert_eq!(a, b);
        let h = |x: &DyadicMatrix| {
            let mut s = DefaultHasher::new();
            x.hash(&mut s);
            s.finish()
        };
        assert_eq!(h(&a), h(&b));
        assert_eq!(a.exponent(), 1);
        assert_eq!(m(&[&[2, 4]], 1).exponent(), 0);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(DyadicMatrix::from_scaled(0, 1, vec![], 0).is_err());
        assert!(DyadicMatrix::from_scaled(2, 2, vec![BigInt::one()], 0).is_err());
        let a = DyadicMatrix::identity(2);
        let b = DyadicMatrix::identity(3);
        assert!(a.checked_mul(&b).is_err());
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn kron_with_identity_blocks() {
        let j = m(&[&[0, 1], &[-1, 0]], 0);
        let k = j.kron(&DyadicMatrix::identity(2));
        let expected = m(
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]],
            0,
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn orthogonal_inverse() {
        let r = m(&[&[1, 1], &[1, -1]], 1);
        assert!(!r.is_orthogonal());
        assert_eq!(r.inverse_orthogonal(), Err(Error::NotOrthogonal));
        let rot = m(&[&[0, -1], &[1, 0]], 0);
        assert_eq!(rot.inverse_orthogonal().unwrap(), rot.transpose());
        let id = DyadicMatrix::identity(16);
        assert_eq!(id.inverse_orthogonal().unwrap(), id);
    }

    #[test]
    fn vector_order_is_exact() {
        let a = DyadicVector::from_ints(&[1, 0], 1);
        let b = DyadicVector::from_ints(&[1, 0], 0);
        let c = DyadicVector::from_ints(&[1, 1], 2);
        assert!(a < b);
        assert!(c < a);
        assert_eq!(a.norm(), Dyadic::new(1, 2));
    }

    #[test]
    fn trace_and_mul_vec() {
        let a = m(&[&[1, 2], &[3, 5]], 1);
        assert_eq!(a.trace(), Dyadic::from(3));
        let v = DyadicVector::from_ints(&[1, 1], 0);
        assert_eq!(a.mul_vec(&v).unwrap(), DyadicVector::from_ints(&[3, 8], 1));
        assert!(a.mul_vec(&DyadicVector::zero(3)).is_err());
    }
}
