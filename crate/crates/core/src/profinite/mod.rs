//! Profinite groups modeled as finite-depth truncations of inverse systems
//! `G_0 ← G_1 ← ... ← G_d` with surjective bonding maps.
//!
//! Only countable towers cut off at a finite depth are represented; the
//! limit-ordinal intersection step of a transfinite construction has no
//! counterpart here.

mod desc;
mod families;
mod torsion_index;

pub use desc::{SystemFile, SystemSpec};
pub use families::{coordinate_a_part, example_system, normal_cyclics_in, Family};
pub use torsion_index::{torsion_index_report, LevelIndexRecord, LimitVerdict, TorsionIndexReport, Trend};

use serde::{Deserialize, Serialize};

use crate::complement::{find_complement_within, is_c_group};
use crate::error::{Error, Result};
use crate::group::{Caps, FiniteGroup};
use crate::lattice::Lattice;
use crate::subgroup::{subgroup_closure, Homomorphism, Subgroup};

#[derive(Debug, Clone)]
pub struct InverseSystem {
    levels: Vec<FiniteGroup>,
    /// `bonds[k] : levels[k + 1] → levels[k]`.
    bonds: Vec<Homomorphism>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondCheck {
    pub bond: usize,
    pub homomorphism: bool,
    pub surjective: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemValidation {
    pub valid: bool,
    pub bonds: Vec<BondCheck>,
}

impl InverseSystem {
    /// Builds and fully validates a system.
    pub fn new(levels: Vec<FiniteGroup>, bonds: Vec<Homomorphism>) -> Result<Self> {
        let sys = Self::from_parts_unchecked(levels, bonds)?;
        let report = validate_system(&sys);
        if let Some(bad) = report.bonds.iter().find(|b| !b.homomorphism || !b.surjective) {
            let why = bad.detail.clone().unwrap_or_else(|| "not surjective".into());
            return Err(Error::InvalidSystem(format!("bond {}: {why}", bad.bond)));
        }
        Ok(sys)
    }

    /// Checks only the shape (counts and map sizes); bond validity is left
    /// to [`validate_system`].
    pub fn from_parts_unchecked(levels: Vec<FiniteGroup>, bonds: Vec<Homomorphism>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidSystem("a system needs at least one level".into()));
        }
        if bonds.len() + 1 != levels.len() {
            return Err(Error::InvalidSystem(format!("{} levels need {} bonds, got {}", levels.len(), levels.len() - 1, bonds.len())));
        }
        for (k, b) in bonds.iter().enumerate() {
            if b.source_order() != levels[k + 1].order() || b.target_order() != levels[k].order() {
                return Err(Error::InvalidSystem(format!("bond {k} has the wrong shape")));
            }
        }
        Ok(InverseSystem { levels, bonds })
    }

    /// `G ← G ← ... ← G` with identity bonds.
    pub fn constant(g: &FiniteGroup, depth: usize) -> Self {
        InverseSystem { levels: vec![g.clone(); depth + 1], bonds: vec![Homomorphism::identity(g); depth] }
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }

    pub fn level(&self, k: usize) -> &FiniteGroup {
        &self.levels[k]
    }

    /// The bond `G_{k+1} → G_k`.
    pub fn bond(&self, k: usize) -> &Homomorphism {
        &self.bonds[k]
    }

    pub fn top(&self) -> &FiniteGroup {
        &self.levels[self.depth()]
    }
}

/// Per-bond homomorphism and surjectivity verdicts.
pub fn validate_system(sys: &InverseSystem) -> SystemValidation {
    let bonds: Vec<BondCheck> = sys
        .bonds
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let hom = b.check(&sys.levels[k + 1], &sys.levels[k]);
            let surjective = b.is_surjective();
            let detail = match (&hom, surjective) {
                (Err(e), _) => Some(e.to_string()),
                (Ok(()), false) => Some("not surjective".into()),
                _ => None,
            };
            BondCheck { bond: k, homomorphism: hom.is_ok(), surjective, detail }
        })
        .collect();
    SystemValidation { valid: bonds.iter().all(|b| b.homomorphism && b.surjective), bonds }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelwiseVerdict {
    pub c_group: bool,
    pub levels: Vec<bool>,
    /// First failing level and its witness subgroup.
    pub witness: Option<(usize, Subgroup)>,
}

/// True iff every level is a finite C-group.
pub fn is_profinite_c_truncated(sys: &InverseSystem, caps: &Caps) -> Result<LevelwiseVerdict> {
    let mut levels = Vec::with_capacity(sys.levels.len());
    let mut witness = None;
    for (k, g) in sys.levels.iter().enumerate() {
        let lat = Lattice::new(g, caps).map_err(Error::at_level(k))?;
        let v = is_c_group(&lat);
        if witness.is_none() {
            witness = v.witness.map(|w| (k, w));
        }
        levels.push(v.c_group);
    }
    Ok(LevelwiseVerdict { c_group: witness.is_none(), levels, witness })
}

/// Levelwise images of one closed subgroup: `φ_k(H_{k+1}) = H_k` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleSubgroup {
    levels: Vec<Subgroup>,
}

impl CompatibleSubgroup {
    pub fn new(sys: &InverseSystem, levels: Vec<Subgroup>) -> Result<Self> {
        if levels.len() != sys.levels.len() {
            return Err(Error::NotCompatible { level: levels.len(), reason: "wrong number of levels".into() });
        }
        for (k, h) in levels.iter().enumerate() {
            if h.members().capacity() != sys.levels[k].order() {
                return Err(Error::NotCompatible { level: k, reason: "subgroup of a different group".into() });
            }
        }
        for k in 0..sys.depth() {
            if sys.bonds[k].image(&levels[k + 1]) != levels[k] {
                return Err(Error::NotCompatible { level: k, reason: "image of the next level differs".into() });
            }
        }
        Ok(CompatibleSubgroup { levels })
    }

    /// The family determined by a subgroup of the top level.
    pub fn from_top(sys: &InverseSystem, top: Subgroup) -> Self {
        let mut levels = vec![top];
        for k in (0..sys.depth()).rev() {
            let below = sys.bonds[k].image(levels.last().expect("nonempty"));
            levels.push(below);
        }
        levels.reverse();
        CompatibleSubgroup { levels }
    }

    pub fn generated_at_top(sys: &InverseSystem, generators: &[usize]) -> Result<Self> {
        for &x in generators {
            sys.top().check_element(x)?;
        }
        Ok(Self::from_top(sys, subgroup_closure(sys.top(), generators.iter().copied())))
    }

    pub fn levels(&self) -> &[Subgroup] {
        &self.levels
    }
}

/// Permutable complements `K_k` of `H_k`, descending under the bonds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementChain {
    levels: Vec<Subgroup>,
}

impl ComplementChain {
    pub fn levels(&self) -> &[Subgroup] {
        &self.levels
    }

    /// `H_k ∩ K_k = 1`, `H_k K_k = G_k`, `φ_k(K_{k+1}) ⊆ K_k`.
    pub fn verify(&self, sys: &InverseSystem, h: &CompatibleSubgroup) -> std::result::Result<(), String> {
        if self.levels.len() != sys.levels.len() {
            return Err("chain length differs from system depth".into());
        }
        for (k, (kk, hk)) in self.levels.iter().zip(&h.levels).enumerate() {
            if !kk.meets_trivially(hk) {
                return Err(format!("level {k}: H ∩ K ≠ 1"));
            }
            if hk.product_set(&sys.levels[k], kk).len() != sys.levels[k].order() {
                return Err(format!("level {k}: HK ≠ G"));
            }
        }
        for k in 0..sys.depth() {
            if !sys.bonds[k].image(&self.levels[k + 1]).is_subgroup_of(&self.levels[k]) {
                return Err(format!("bond {k}: φ(K_{}) ⊄ K_{k}", k + 1));
            }
        }
        Ok(())
    }
}

/// Builds a descending complement chain level by level.
///
/// `K_0` is any complement of `H_0`. At level `k + 1` the preimage of `K_k`
/// supplements `H_{k+1}`, and a complement is searched inside it, so the
/// chain descends by construction. Requires every level to be a C-group;
/// [`Error::NoChainFound`] signals that this failed.
pub fn lift_complement_chain(sys: &InverseSystem, h: &CompatibleSubgroup) -> Result<ComplementChain> {
    let g0 = sys.level(0);
    let k0 = find_complement_within(g0, &h.levels[0], &Subgroup::whole(g0)).ok_or(Error::NoChainFound { level: 0 })?;
    let mut levels = vec![k0];
    for k in 0..sys.depth() {
        let s = sys.bonds[k].preimage(&levels[k]);
        let next = find_complement_within(sys.level(k + 1), &h.levels[k + 1], &s)
            .ok_or(Error::NoChainFound { level: k + 1 })?;
        levels.push(next);
    }
    let chain = ComplementChain { levels };
    if let Err(why) = chain.verify(sys, h) {
        unreachable!("constructed chain violates its invariants: {why}");
    }
    Ok(chain)
}
