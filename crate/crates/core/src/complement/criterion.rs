use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::subgroup::{induced_group, is_normal, Subgroup};

use super::is_c_group;

/// Evidence for the semidirect-product sufficient condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectCertificate {
    pub holds: bool,
    pub h_is_c_group: bool,
    /// Each subgroup `E` of `N` with its first `G`-invariant permutable
    /// complement in `N`, if any.
    pub invariant_complements: Vec<(Subgroup, Option<Subgroup>)>,
    /// Independent brute-force verdict on `G` itself.
    pub g_is_c_group: bool,
}

/// For `G = H ⋉ N`: true iff `H` is a C-group and every subgroup of `N` has
/// a `G`-invariant permutable complement in `N`. When it holds, `G` is a
/// C-group; `g_is_c_group` records the brute-force cross-check.
pub fn semidirect_c_criterion(lat: &Lattice, h: &Subgroup, n: &Subgroup) -> Result<SemidirectCertificate> {
    let g = lat.group();
    if !is_normal(g, n) {
        return Err(Error::NotSemidirect("N is not normal".into()));
    }
    if !h.meets_trivially(n) || h.order() * n.order() != g.order() {
        return Err(Error::NotSemidirect("H and N are not permutable complements".into()));
    }
    let (h_group, _) = induced_group(g, h);
    let h_is_c_group = is_c_group(&Lattice::new(&h_group, lat.caps())?).c_group;
    let invariant_complements: Vec<(Subgroup, Option<Subgroup>)> = lat
        .within(n)
        .map(|e| {
            let target = n.order() / e.order();
            let c = lat
                .of_order(target)
                .find(|c| c.is_subgroup_of(n) && c.meets_trivially(e) && is_normal(g, c))
                .cloned();
            (e.clone(), c)
        })
        .collect();
    let holds = h_is_c_group && invariant_complements.iter().all(|(_, c)| c.is_some());
    let g_is_c_group = is_c_group(lat).c_group;
    Ok(SemidirectCertificate { holds, h_is_c_group, invariant_complements, g_is_c_group })
}
