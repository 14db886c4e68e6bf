//! Concrete finite groups: realizations, subgroups and automorphism actions.

mod action;
mod bitset;
mod group;
mod perm;
mod subgroup;

pub use action::{check_automorphism, extend_homomorphism, try_extend_homomorphism, AutomorphismAction};
pub use bitset::BitSet;
pub use group::{
    element_cap, mat_det, mat_inv, mat_mul, set_element_cap, vec_mat, ConjugacyClasses, Elem, Group, CAYLEY_MAX,
    DEFAULT_ELEMENT_CAP,
};
pub use perm::Perm;
pub use subgroup::Subgroup;
