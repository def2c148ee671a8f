use std::collections::HashSet;

use crate::bitset::ElementSet;
use crate::group::FiniteGroup;
use crate::subgroup::{cyclic_subgroup, Subgroup};

/// Finds a permutable complement of `h` contained in `s` without enumerating
/// the subgroup lattice of `g`.
///
/// Depth-first search over subgroups of `s` meeting `h` trivially, grown by
/// adjoining cyclic subgroups of `s` (smallest first, then by member list).
/// Visited subgroups are memoized, so the search is exhaustive: `None` means
/// no complement of `h` lies inside `s`.
pub fn find_complement_within(g: &FiniteGroup, h: &Subgroup, s: &Subgroup) -> Option<Subgroup> {
    if h.product_size(s) != g.order() {
        return None;
    }
    let target = g.order() / h.order();
    let mut seen_cyclic = HashSet::new();
    let mut candidates: Vec<Subgroup> = s
        .elements()
        .filter(|&x| x != 0 && !h.contains(x))
        .map(|x| cyclic_subgroup(g, x))
        .filter(|c| c.meets_trivially(h) && seen_cyclic.insert(c.clone()))
        .collect();
    candidates.sort();
    let mut visited = HashSet::new();
    dfs(g, h, &candidates, Subgroup::trivial(g), target, &mut visited)
}

fn dfs(
    g: &FiniteGroup,
    h: &Subgroup,
    candidates: &[Subgroup],
    k: Subgroup,
    target: usize,
    visited: &mut HashSet<ElementSet>,
) -> Option<Subgroup> {
    if k.order() == target {
        return Some(k);
    }
    if !visited.insert(k.members().clone()) {
        return None;
    }
    for c in candidates {
        if c.is_subgroup_of(&k) {
            continue;
        }
        let next = k.join(g, c);
        if next.meets_trivially(h) && !visited.contains(next.members()) {
            if let Some(found) = dfs(g, h, candidates, next, target, visited) {
                return Some(found);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::permutable_complements;
    use crate::group::Caps;
    use crate::lattice::Lattice;
    use crate::subgroup::subgroup_closure;

    #[test]
    fn agrees_with_lattice_search() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 512).unwrap();
        let g = FiniteGroup::direct_product(&s3, &FiniteGroup::cyclic(2));
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        let whole = Subgroup::whole(&g);
        for h in lat.subgroups() {
            let lattice_has = permutable_complements(&lat, h).next().is_some();
            let found = find_complement_within(&g, h, &whole);
            assert_eq!(found.is_some(), lattice_has);
            if let Some(k) = found {
                assert!(lat.position(&k).is_some());
                assert_eq!(k.order() * h.order(), g.order());
                assert!(k.meets_trivially(h));
            }
        }
    }

    #[test]
    fn respects_the_supplement() {
        let g = FiniteGroup::cyclic(6);
        let h = subgroup_closure(&g, [3]);
        let s = subgroup_closure(&g, [2]);
        assert_eq!(find_complement_within(&g, &h, &s), Some(s.clone()));
        // C4: the C2 has no complement anywhere
        let c4 = FiniteGroup::cyclic(4);
        assert_eq!(find_complement_within(&c4, &subgroup_closure(&c4, [2]), &Subgroup::whole(&c4)), None);
        // not a supplement
        assert_eq!(find_complement_within(&g, &h, &h), None);
    }
}
