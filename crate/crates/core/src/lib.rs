//! Finite C-groups and their profinite truncations.
//!
//! A group is a C-group when every subgroup `H` has a permutable complement:
//! a subgroup `K` with `G = HK` and `H ∩ K = 1`. This crate decides that
//! property by brute force over the subgroup lattice, computes the
//! structural decomposition `G = B ⋉ A` into products of prime-order cyclic
//! groups, and models profinite groups as finite-depth inverse systems.

pub mod action;
pub mod bitset;
pub mod catalog;
pub mod complement;
pub mod desc;
pub mod error;
pub mod group;
pub mod lattice;
pub mod profinite;
pub mod report;
pub mod subgroup;

pub use action::{semidirect_product, GAction};
pub use error::{Error, Result};
pub use group::{Caps, FiniteGroup};
pub use lattice::{all_subgroups, Lattice};
pub use subgroup::{
    center, derived_subgroup, induced_group, is_normal, quotient, subgroup_closure, Homomorphism, Subgroup,
};
