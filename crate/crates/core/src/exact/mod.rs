//! Exact arithmetic over Z[1/2]: scalars, dense matrices, integer HNF and
//! the plain-text matrix format.

mod dyadic;
mod int_matrix;
mod matrix;
pub mod text;

pub use dyadic::Dyadic;
pub use int_matrix::IntMatrix;
pub use matrix::{DyadicMatrix, DyadicVector};

/// Exact product; errors on a dimension mismatch.
pub fn mat_mul(a: &DyadicMatrix, b: &DyadicMatrix) -> crate::Result<DyadicMatrix> {
    a.checked_mul(b)
}

pub fn kron(a: &DyadicMatrix, b: &DyadicMatrix) -> DyadicMatrix {
    a.kron(b)
}

pub fn hnf(m: &IntMatrix) -> IntMatrix {
    m.hnf()
}

pub fn mat_inverse_orthogonal(m: &DyadicMatrix) -> crate::Result<DyadicMatrix> {
    m.inverse_orthogonal()
}
