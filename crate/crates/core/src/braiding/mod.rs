//! Yetter–Drinfeld modules over a conjugacy class, their braiding, abelian
//! subracks and diagonal braided subspaces.

mod module;
mod rack;
mod subrack;

pub use module::{build_yd_module, BasisPair, YDModule};
pub use rack::{rack_decomposition, RackDecomposition};
pub use subrack::{
    abelian_subracks, abelian_subracks_with_bound, diagonal_subspace, is_negative_braiding, QMatrix, Subrack,
    DEFAULT_SUBRACK_BOUND,
};
