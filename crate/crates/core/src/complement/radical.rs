//! Abelian normal subgroups viewed as modules under conjugation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{prime_factors, Caps, FiniteGroup};
use crate::lattice::Lattice;
use crate::subgroup::{cyclic_subgroup, induced_group, is_normal, Closure, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitFailureReason {
    /// Some maximal-submodule intersection survives.
    RadicalNontrivial,
    /// The radical is trivial but a simple constituent is not of prime order.
    NonPrimeCompositionFactor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitFailure {
    /// Prime whose Sylow part could not be spanned by invariant lines.
    pub prime: usize,
    pub reason: SplitFailureReason,
    pub radical: Subgroup,
}

fn check_abelian_normal(g: &FiniteGroup, a: &Subgroup) -> Result<()> {
    if a.is_abelian(g) && is_normal(g, a) {
        Ok(())
    } else {
        Err(Error::NotAbelianNormal)
    }
}

/// Intersection of the maximal proper `G`-invariant subgroups of `a`.
///
/// The trivial subgroup has no maximal submodules; by convention its radical
/// is itself.
pub fn radical(g: &FiniteGroup, a: &Subgroup, caps: &Caps) -> Result<Subgroup> {
    check_abelian_normal(g, a)?;
    if a.is_trivial() {
        return Ok(a.clone());
    }
    let (sub, embed) = induced_group(g, a);
    let lat = Lattice::new(&sub, caps)?;
    let proper: Vec<Subgroup> = lat
        .subgroups()
        .iter()
        .filter(|s| s.order() < a.order())
        .map(|s| embed.image(s))
        .filter(|s| is_normal(g, s))
        .collect();
    let maximal = proper
        .iter()
        .filter(|m| !proper.iter().any(|n| n.order() > m.order() && m.is_subgroup_of(n)));
    Ok(maximal.fold(a.clone(), |acc, m| acc.intersection(m)))
}

/// Elements of the abelian subgroup `a` whose order is a power of `p`.
fn sylow_part(g: &FiniteGroup, a: &Subgroup, p: usize) -> Subgroup {
    let is_p_power = |mut n: usize| {
        while n % p == 0 {
            n /= p;
        }
        n == 1
    };
    Subgroup::from_set_unchecked(crate::bitset::ElementSet::from_indices(
        g.order(),
        a.elements().filter(|&x| is_p_power(g.element_order(x))),
    ))
}

/// Decomposes the abelian normal subgroup `a` as an internal direct product
/// of `G`-invariant subgroups of prime order.
///
/// Per prime, the Sylow part must be elementary abelian; its invariant lines
/// are scanned in lattice order and kept whenever they leave the span of the
/// lines already kept. Lines spanning one vector space form a matroid, so the
/// greedy pass spans the Sylow part exactly when some invariant basis exists.
pub fn split_abelian_normal(
    g: &FiniteGroup,
    a: &Subgroup,
    caps: &Caps,
) -> Result<std::result::Result<Vec<Subgroup>, SplitFailure>> {
    check_abelian_normal(g, a)?;
    let mut lines = Vec::new();
    for p in prime_factors(a.order()) {
        let sylow = sylow_part(g, a, p);
        let mut invariant: Vec<Subgroup> = sylow
            .elements()
            .filter(|&x| g.element_order(x) == p)
            .map(|x| cyclic_subgroup(g, x))
            .collect();
        invariant.sort();
        invariant.dedup();
        invariant.retain(|l| is_normal(g, l));
        let mut span = Closure::new(g);
        for l in invariant {
            let x = l.first_nontrivial().expect("line of prime order");
            if !span.contains(x) {
                span.adjoin(x);
                lines.push(l);
            }
        }
        if span.len() != sylow.order() {
            let rad = radical(g, a, caps)?;
            let reason = if rad.is_trivial() {
                SplitFailureReason::NonPrimeCompositionFactor
            } else {
                SplitFailureReason::RadicalNontrivial
            };
            return Ok(Err(SplitFailure { prime: p, reason, radical: rad }));
        }
    }
    Ok(Ok(lines))
}

/// A `G`-invariant permutable complement of `h` inside `A = ∏ lines`,
/// built by adjoining each line that meets `HL` trivially.
///
/// `lines` must be normal subgroups of prime order whose internal direct
/// product is `A`, and `h ≤ A`.
pub fn invariant_complement_greedy(g: &FiniteGroup, lines: &[Subgroup], h: &Subgroup) -> Result<Subgroup> {
    let mut l = Subgroup::trivial(g);
    let mut a_order = 1;
    for line in lines {
        a_order *= line.order();
        let hl = h.join(g, &l);
        if line.meets_trivially(&hl) {
            l = l.join(g, line);
        }
    }
    if h.product_size(&l) == a_order && h.meets_trivially(&l) {
        Ok(l)
    } else {
        Err(Error::NoComplementFound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{semidirect_product, GAction};
    use crate::subgroup::{derived_subgroup, subgroup_closure};

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 512).unwrap()
    }

    #[test]
    fn radical_of_cyclic_and_klein() {
        let caps = Caps::default();
        let c4 = FiniteGroup::cyclic(4);
        assert_eq!(radical(&c4, &Subgroup::whole(&c4), &caps).unwrap(), subgroup_closure(&c4, [2]));
        let v4 = FiniteGroup::direct_power(&FiniteGroup::cyclic(2), 2);
        assert!(radical(&v4, &Subgroup::whole(&v4), &caps).unwrap().is_trivial());
        let t = Subgroup::trivial(&v4);
        assert_eq!(radical(&v4, &t, &caps).unwrap(), t);
    }

    #[test]
    fn radical_of_s3_times_c3_module() {
        let g = FiniteGroup::direct_product(&s3(), &FiniteGroup::cyclic(3));
        let a3 = derived_subgroup(&s3());
        let gens: Vec<usize> = a3.elements().map(|x| x * 3).chain([1]).collect();
        let a = subgroup_closure(&g, gens);
        assert_eq!(a.order(), 9);
        // oracle: enumerate all subsets-closed invariant subgroups of A by brute force
        let invariant: Vec<Subgroup> = crate::lattice::all_subgroups(&g, &Caps::default())
            .unwrap()
            .into_iter()
            .filter(|s| s.is_subgroup_of(&a) && s.order() < 9 && is_normal(&g, s))
            .collect();
        // only the two coordinate C3's and the trivial subgroup
        assert_eq!(invariant.len(), 3);
        assert!(radical(&g, &a, &Caps::default()).unwrap().is_trivial());
    }

    #[test]
    fn radical_rejects_non_abelian_or_non_normal() {
        let g = s3();
        assert_eq!(radical(&g, &Subgroup::whole(&g), &Caps::default()), Err(Error::NotAbelianNormal));
        let t = crate::subgroup::cyclic_subgroup(&g, g.elements().find(|&x| g.element_order(x) == 2).unwrap());
        assert_eq!(radical(&g, &t, &Caps::default()), Err(Error::NotAbelianNormal));
    }

    #[test]
    fn split_examples() {
        let caps = Caps::default();
        let g = s3();
        let a3 = derived_subgroup(&g);
        assert_eq!(split_abelian_normal(&g, &a3, &caps).unwrap(), Ok(vec![a3.clone()]));

        let c4 = FiniteGroup::cyclic(4);
        let fail = split_abelian_normal(&c4, &Subgroup::whole(&c4), &caps).unwrap().unwrap_err();
        assert_eq!(fail.reason, SplitFailureReason::RadicalNontrivial);
        assert_eq!(fail.radical, subgroup_closure(&c4, [2]));
    }

    #[test]
    fn split_s3_squared_finds_the_coordinate_lines() {
        let caps = Caps::default();
        let g = FiniteGroup::direct_product(&s3(), &s3());
        let a = derived_subgroup(&g);
        assert_eq!(a.order(), 9);
        let lines = split_abelian_normal(&g, &a, &caps).unwrap().unwrap();
        assert_eq!(lines.len(), 2);
        // oracle: of the four order-3 subgroups of A, exactly two are normal
        let normal_lines: Vec<Subgroup> = a
            .elements()
            .filter(|&x| x != 0)
            .map(|x| crate::subgroup::cyclic_subgroup(&g, x))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .filter(|l| is_normal(&g, l))
            .collect();
        assert_eq!(normal_lines.len(), 2);
        for l in &lines {
            assert!(normal_lines.contains(l));
        }
    }

    #[test]
    fn split_a4_klein_is_a_non_prime_factor() {
        let g = FiniteGroup::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], 512).unwrap();
        assert_eq!(g.order(), 12);
        let v = derived_subgroup(&g);
        let fail = split_abelian_normal(&g, &v, &Caps::default()).unwrap().unwrap_err();
        assert_eq!(fail.reason, SplitFailureReason::NonPrimeCompositionFactor);
        assert!(fail.radical.is_trivial());
    }

    #[test]
    fn greedy_invariant_complements_exist_for_every_subgroup() {
        // C2 inverting C3 x C3: every line is invariant
        let space = FiniteGroup::direct_power(&FiniteGroup::cyclic(3), 2);
        let inv: Vec<usize> = space.elements().map(|x| space.inv(x)).collect();
        let act = GAction::new(FiniteGroup::cyclic(2), space.clone(), vec![space.elements().collect(), inv]).unwrap();
        let g = semidirect_product(&act);
        let a = derived_subgroup(&g);
        let lines = split_abelian_normal(&g, &a, &Caps::default()).unwrap().unwrap();
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        for h in lat.subgroups().iter().filter(|h| h.is_subgroup_of(&a)) {
            let l = invariant_complement_greedy(&g, &lines, h).unwrap();
            assert!(is_normal(&g, &l));
            assert!(l.meets_trivially(h));
            assert_eq!(l.order() * h.order(), a.order());
        }
    }
}
