//! Exact arithmetic in cyclotomic fields and linear algebra over them.

mod matrix;
mod number;
pub mod poly;
mod root;

pub use matrix::{common_eigenspaces, eigenspaces, rref, simultaneous_eigenbasis, CycloMatrix, CycloVector};
pub use number::CycloNumber;
pub use root::RootOfUnity;
