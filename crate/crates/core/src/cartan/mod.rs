//! Diagonal braidings of Cartan type, finite-type recognition and bounded
//! Hilbert series of Nichols algebras.

mod hilbert;
mod matrix;

pub use hilbert::{budget_from_env, nichols_hilbert_prefix, HilbertPrefix, DEFAULT_BUDGET};
pub use matrix::{
    cartan_from_q, is_finite_type, principal_minors_positive, CartanMatrix, CartanOutcome, ComponentType, DynkinType,
    FiniteTypeReport,
};
