//! Full subgroup lattice enumeration.
//!
//! Seeds with every cyclic subgroup, then joins known subgroups with cyclic
//! ones until nothing new appears. The result is sorted by size and then by
//! member list.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::group::{Caps, FiniteGroup};
use crate::subgroup::{cyclic_subgroups, is_normal, Subgroup};

pub struct Lattice<'g> {
    group: &'g FiniteGroup,
    caps: Caps,
    subgroups: Vec<Subgroup>,
    index: HashMap<Subgroup, usize>,
    by_order: BTreeMap<usize, Vec<usize>>,
}

impl<'g> Lattice<'g> {
    pub fn new(group: &'g FiniteGroup, caps: &Caps) -> Result<Self> {
        if group.order() > caps.max_lattice_order {
            return Err(Error::LatticeCapExceeded { order: group.order(), cap: caps.max_lattice_order });
        }
        let cyclics = cyclic_subgroups(group);
        let mut index: HashMap<Subgroup, usize> = HashMap::new();
        let mut subgroups: Vec<Subgroup> = Vec::new();
        let mut push = |s: Subgroup, subgroups: &mut Vec<Subgroup>| -> Result<()> {
            if !index.contains_key(&s) {
                if subgroups.len() >= caps.max_subgroups {
                    return Err(Error::SubgroupLimitExceeded { count: subgroups.len(), cap: caps.max_subgroups });
                }
                index.insert(s.clone(), subgroups.len());
                subgroups.push(s);
            }
            Ok(())
        };
        for c in &cyclics {
            push(c.clone(), &mut subgroups)?;
        }
        let mut next = 0;
        while next < subgroups.len() {
            let s = subgroups[next].clone();
            for c in &cyclics {
                if !c.is_subgroup_of(&s) {
                    push(s.join(group, c), &mut subgroups)?;
                }
            }
            next += 1;
        }
        subgroups.sort();
        let index: HashMap<Subgroup, usize> =
            subgroups.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, s) in subgroups.iter().enumerate() {
            by_order.entry(s.order()).or_default().push(i);
        }
        Ok(Lattice { group, caps: *caps, subgroups, index, by_order })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// The caps this lattice was built under, reused by derived computations.
    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h).copied()
    }

    /// Subgroups of exactly the given order, in lattice order.
    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &Subgroup> + '_ {
        self.by_order.get(&order).into_iter().flatten().map(move |&i| &self.subgroups[i])
    }

    pub fn normal_subgroups(&self) -> Vec<&Subgroup> {
        self.subgroups.iter().filter(|h| is_normal(self.group, h)).collect()
    }

    /// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
    pub fn minimal_normal_subgroups(&self) -> Vec<&Subgroup> {
        let normal: Vec<&Subgroup> = self.normal_subgroups().into_iter().filter(|n| !n.is_trivial()).collect();
        normal
            .iter()
            .filter(|n| !normal.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n)))
            .copied()
            .collect()
    }

    /// Subgroups contained in `s`, in lattice order.
    pub fn within<'a>(&'a self, s: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups.iter().filter(move |k| k.is_subgroup_of(s))
    }
}

/// The complete, duplicate-free subgroup list of `g` in lattice order.
pub fn all_subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    Ok(Lattice::new(g, caps)?.subgroups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::ElementSet;
    use crate::subgroup::Subgroup;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 512).unwrap()
    }

    /// Independent oracle: test every subset containing 0 for closure.
    fn brute_force_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
        let n = g.order();
        assert!(n <= 12);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let closed = set.iter().all(|&a| set.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1));
            if closed {
                out.push(Subgroup::from_set_unchecked(ElementSet::from_indices(n, set)));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn lattice_sizes() {
        let caps = Caps::default();
        assert_eq!(all_subgroups(&FiniteGroup::cyclic(4), &caps).unwrap().len(), 3);
        assert_eq!(all_subgroups(&s3(), &caps).unwrap().len(), 6);
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(all_subgroups(&v4, &caps).unwrap().len(), 5);
    }

    #[test]
    fn lattice_matches_subset_oracle() {
        let caps = Caps::default();
        let d6 = FiniteGroup::from_permutations(6, &[vec![1, 2, 3, 4, 5, 0], vec![0, 5, 4, 3, 2, 1]], 512).unwrap();
        for g in [s3(), FiniteGroup::cyclic(12), d6] {
            assert_eq!(all_subgroups(&g, &caps).unwrap(), brute_force_subgroups(&g));
        }
    }

    #[test]
    fn lattice_order_is_by_size_then_members() {
        let subs = all_subgroups(&s3(), &Caps::default()).unwrap();
        let sizes: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps { max_subgroups: 4, ..Caps::default() };
        assert!(matches!(all_subgroups(&s3(), &caps), Err(Error::SubgroupLimitExceeded { cap: 4, .. })));
        let caps = Caps { max_lattice_order: 5, ..Caps::default() };
        assert!(matches!(all_subgroups(&s3(), &caps), Err(Error::LatticeCapExceeded { order: 6, .. })));
    }

    #[test]
    fn minimal_normal_of_s3_is_a3() {
        let g = s3();
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        let mins = lat.minimal_normal_subgroups();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 3);
    }
}
