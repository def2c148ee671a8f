//! Permutable complements and the C-group decision.
//!
//! For finite `G`, `H ∩ K = 1` together with `|H||K| = |G|` already forces
//! `HK = G`, so every search here only compares orders and intersections.

mod cernikova;
mod criterion;
mod radical;
mod sc;
mod search;
mod theta;

pub use cernikova::{cernikova_decompose, CernikovaDecomposition, CernikovaFailure, CernikovaStage, PrimeGenerator};
pub use criterion::{semidirect_c_criterion, SemidirectCertificate};
pub use radical::{invariant_complement_greedy, radical, split_abelian_normal, SplitFailure, SplitFailureReason};
pub use sc::is_sc_group;
pub use search::find_complement_within;
pub use theta::{theta_partition, ThetaPartition};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::subgroup::{is_normal, Subgroup};

/// Outcome of [`is_c_group`]. On failure `witness` is the first subgroup in
/// lattice order without a permutable complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CVerdict {
    pub c_group: bool,
    pub witness: Option<Subgroup>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupCounts {
    pub subgroups: usize,
    pub normal: usize,
}

/// All permutable complements of `h`, in lattice order.
pub fn permutable_complements<'a>(lat: &'a Lattice, h: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
    let n = lat.group().order();
    let target = if n % h.order() == 0 { n / h.order() } else { 0 };
    lat.of_order(target).filter(move |k| k.meets_trivially(h))
}

pub fn has_permutable_complement(lat: &Lattice, h: &Subgroup) -> bool {
    permutable_complements(lat, h).next().is_some()
}

pub fn is_c_group(lat: &Lattice) -> CVerdict {
    let witness = lat.subgroups().iter().find(|h| !has_permutable_complement(lat, h)).cloned();
    CVerdict { c_group: witness.is_none(), witness }
}

/// A permutable complement of `h` inside the supplement `s`.
///
/// In a C-group every supplement contains a complement, so
/// [`Error::NoComplementFound`] means `G` was not a C-group.
pub fn refine_supplement(lat: &Lattice, h: &Subgroup, s: &Subgroup) -> Result<Subgroup> {
    let n = lat.group().order();
    if h.product_size(s) != n {
        return Err(Error::NotASupplement);
    }
    lat.of_order(n / h.order())
        .find(|k| k.is_subgroup_of(s) && k.meets_trivially(h))
        .cloned()
        .ok_or(Error::NoComplementFound)
}

/// Given `N ⊴ G` and `S ⊇ N` with `S/N` a permutable complement of `HN/N`
/// in `G/N`, returns a permutable complement `K` of `h` with `KN = S`.
pub fn lift_complement(lat: &Lattice, h: &Subgroup, normal: &Subgroup, s: &Subgroup) -> Result<Subgroup> {
    let g = lat.group();
    if !is_normal(g, normal) {
        return Err(Error::HypothesisViolated("N is not normal in G".into()));
    }
    if !normal.is_subgroup_of(s) {
        return Err(Error::HypothesisViolated("N is not contained in S".into()));
    }
    let hn = h.join(g, normal);
    if hn.intersection_order(s) != normal.order() {
        return Err(Error::HypothesisViolated("S/N meets HN/N nontrivially".into()));
    }
    if hn.order() * s.order() / normal.order() != g.order() {
        return Err(Error::HypothesisViolated("S/N does not supplement HN/N in G/N".into()));
    }
    lat.of_order(g.order() / h.order())
        .find(|k| k.is_subgroup_of(s) && k.meets_trivially(h) && k.product_size(normal) == s.order())
        .cloned()
        .ok_or(Error::NoComplementFound)
}

pub fn subgroup_counts(lat: &Lattice) -> SubgroupCounts {
    SubgroupCounts { subgroups: lat.len(), normal: lat.normal_subgroups().len() }
}
