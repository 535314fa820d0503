//! Exact computations with Hurwitz quaternions, their tensor powers, the
//! F4 and Barnes–Wall lattices, and the finite groups acting on them.

pub mod error;
pub mod exact;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod quaternion;
pub mod report;
mod tables;
pub mod tensor;

pub use error::{Error, Result};
