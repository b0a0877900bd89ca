//! Finite groups: permutations, dihedral and cyclic groups, direct products,
//! conjugacy classes and centralizers. Groups are fully enumerated.

mod class;
mod element;
mod finite;
mod perm;
mod subgroup;

pub use class::ConjugacyClass;
pub use element::GroupElement;
pub use finite::{
    parse_group, parse_group_kind, parse_group_with_bound, FiniteGroup, GroupKind,
    DEFAULT_GROUP_BOUND,
};
pub use perm::{CycleType, Perm};
pub use subgroup::{cyclic_decomposition, StructureLabel, Subgroup};
