//! Subgroups, homomorphisms and the elementary structural queries built on them.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A subgroup of some parent [`FiniteGroup`], stored as a member bitset.
///
/// The parent is not borrowed; every operation takes it explicitly. Ordering
/// is by size, then lexicographic on the sorted member list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: ElementSet,
    order: usize,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    /// Wraps a set already known to be a subgroup.
    pub(crate) fn from_set_unchecked(members: ElementSet) -> Self {
        let order = members.len();
        debug_assert!(members.contains(0));
        Subgroup { members, order }
    }

    /// Checks closure under multiplication and inversion.
    pub fn from_elements(g: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = ElementSet::new(g.order());
        for x in elements {
            g.check_element(x)?;
            members.insert(x);
        }
        let closed = members.contains(0)
            && members.iter().all(|a| {
                members.contains(g.inv(a)) && members.iter().all(|b| members.contains(g.mul(a, b)))
            });
        if !closed {
            return Err(Error::HypothesisViolated("element set is not a subgroup".into()));
        }
        let s = Self::from_set_unchecked(members);
        assert_eq!(g.order() % s.order, 0, "Lagrange violated");
        Ok(s)
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_set_unchecked(ElementSet::from_indices(g.order(), [0]))
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_set_unchecked(ElementSet::full(g.order()))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_set_unchecked(self.members.intersection(&other.members))
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.members.intersection_len(&other.members)
    }

    pub fn meets_trivially(&self, other: &Subgroup) -> bool {
        self.intersection_order(other) == 1
    }

    /// `|AB| = |A||B| / |A ∩ B|`, valid whether or not `AB` is a subgroup.
    pub fn product_size(&self, other: &Subgroup) -> usize {
        self.order * other.order / self.intersection_order(other)
    }

    /// The set `AB`.
    pub fn product_set(&self, g: &FiniteGroup, other: &Subgroup) -> ElementSet {
        let mut out = ElementSet::new(g.order());
        for a in self.elements() {
            for b in other.elements() {
                out.insert(g.mul(a, b));
            }
        }
        out
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let elems = self.to_vec();
        elems.iter().enumerate().all(|(i, &a)| elems[..i].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// `x H x^-1`.
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        Subgroup::from_set_unchecked(ElementSet::from_indices(
            g.order(),
            self.elements().map(|h| g.conj(x, h)),
        ))
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        let mut c = Closure::from_subgroup(g, self);
        for x in other.elements() {
            c.adjoin(x);
        }
        c.finish()
    }

    /// Smallest non-identity member, used as the canonical generator of a
    /// cyclic subgroup of prime order.
    pub fn first_nontrivial(&self) -> Option<usize> {
        self.elements().find(|&x| x != 0)
    }
}

/// Incremental subgroup generation: keeps a short generator list and
/// regenerates only when an element outside the current subgroup arrives.
pub(crate) struct Closure<'g> {
    g: &'g FiniteGroup,
    gens: Vec<usize>,
    members: ElementSet,
    list: Vec<usize>,
}

impl<'g> Closure<'g> {
    pub(crate) fn new(g: &'g FiniteGroup) -> Self {
        Closure { g, gens: Vec::new(), members: ElementSet::from_indices(g.order(), [0]), list: vec![0] }
    }

    pub(crate) fn from_subgroup(g: &'g FiniteGroup, h: &Subgroup) -> Self {
        let mut c = Self::new(g);
        for x in h.elements() {
            c.adjoin(x);
        }
        c
    }

    pub(crate) fn adjoin(&mut self, x: usize) {
        if self.members.contains(x) {
            return;
        }
        self.gens.push(x);
        // Everything already present stays; multiply the whole list by all
        // generators until nothing new appears.
        let mut i = 0;
        while i < self.list.len() {
            let a = self.list[i];
            for &s in &self.gens {
                let y = self.g.mul(a, s);
                if self.members.insert(y) {
                    self.list.push(y);
                }
            }
            i += 1;
        }
    }

    pub(crate) fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub(crate) fn len(&self) -> usize {
        self.list.len()
    }

    pub(crate) fn finish(self) -> Subgroup {
        Subgroup::from_set_unchecked(self.members)
    }
}

/// Smallest subgroup containing `seeds`.
pub fn subgroup_closure(g: &FiniteGroup, seeds: impl IntoIterator<Item = usize>) -> Subgroup {
    let mut c = Closure::new(g);
    for s in seeds {
        c.adjoin(s);
    }
    c.finish()
}

pub fn cyclic_subgroup(g: &FiniteGroup, x: usize) -> Subgroup {
    let mut members = ElementSet::new(g.order());
    let mut y = 0;
    loop {
        members.insert(y);
        y = g.mul(y, x);
        if y == 0 {
            break;
        }
    }
    Subgroup::from_set_unchecked(members)
}

/// All distinct cyclic subgroups, in first-generator order.
pub fn cyclic_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    g.elements()
        .map(|x| cyclic_subgroup(g, x))
        .filter(|c| seen.insert(c.clone()))
        .collect()
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let members = ElementSet::from_indices(
        g.order(),
        g.elements().filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z))),
    );
    Subgroup::from_set_unchecked(members)
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let mut commutators = ElementSet::new(g.order());
    for a in g.elements() {
        for b in g.elements() {
            commutators.insert(g.commutator(a, b));
        }
    }
    subgroup_closure(g, commutators.iter())
}

/// Derived subgroup of a subgroup `h`, as a subgroup of `g`.
pub fn derived_of(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let elems = h.to_vec();
    let mut c = Closure::new(g);
    for &a in &elems {
        for &b in &elems {
            c.adjoin(g.commutator(a, b));
        }
    }
    c.finish()
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    if h.order() == 1 || h.order() == g.order() {
        return true;
    }
    g.elements().all(|x| h.elements().all(|y| h.contains(g.conj(x, y))))
}

/// Whether conjugation by every element of `by` maps `h` into itself.
pub fn is_invariant_under(g: &FiniteGroup, h: &Subgroup, by: &Subgroup) -> bool {
    by.elements().all(|x| h.elements().all(|y| h.contains(g.conj(x, y))))
}

/// Normal closure of `h` in `g`.
pub fn normal_closure(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut c = Closure::new(g);
    for x in g.elements() {
        for y in h.elements() {
            c.adjoin(g.conj(x, y));
        }
    }
    c.finish()
}

/// `G / N`. Cosets are represented by their smallest element index and
/// ordered by representative, so the identity coset is index 0.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, Homomorphism)> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for y in n.elements() {
            coset_of[g.mul(x, y)] = id;
        }
    }
    let m = reps.len();
    let mut mul = vec![0u32; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * m + j] = coset_of[g.mul(a, b)] as u32;
        }
    }
    let labels = g.labels().map(|_| reps.iter().map(|&r| format!("{}N", g.label(r))).collect());
    let q = FiniteGroup::from_trusted_table(m, mul, labels);
    let proj = Homomorphism::from_map_unchecked(g.order(), m, coset_of);
    Ok((q, proj))
}

/// The subgroup `h` as a group in its own right. Elements keep the parent's
/// relative order, so the identity stays at index 0. Returns the group and
/// its embedding into `g`.
pub fn induced_group(g: &FiniteGroup, h: &Subgroup) -> (FiniteGroup, Homomorphism) {
    let elems = h.to_vec();
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i;
    }
    let m = elems.len();
    let mut mul = vec![0u32; m * m];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            mul[i * m + j] = pos[g.mul(a, b)] as u32;
        }
    }
    let labels = g.labels().map(|l| elems.iter().map(|&x| l[x].clone()).collect());
    let sub = FiniteGroup::from_trusted_table(m, mul, labels);
    let embed = Homomorphism::from_map_unchecked(m, g.order(), elems);
    (sub, embed)
}

/// A map between two finite groups, given as a table of target indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source_order: usize,
    target_order: usize,
    map: Vec<usize>,
}

impl Homomorphism {
    /// Validates the map against both groups.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        let h = Self::from_map_unchecked(source.order(), target.order(), map);
        h.check(source, target)?;
        Ok(h)
    }

    pub fn from_map_unchecked(source_order: usize, target_order: usize, map: Vec<usize>) -> Self {
        Homomorphism { source_order, target_order, map }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self::from_map_unchecked(g.order(), g.order(), g.elements().collect())
    }

    /// Verifies shape, `map[0] = 0` and `map[xy] = map[x] map[y]` on all pairs.
    pub fn check(&self, source: &FiniteGroup, target: &FiniteGroup) -> Result<()> {
        if self.map.len() != source.order() {
            return Err(Error::InvalidHomomorphism(format!(
                "map has length {}, source has order {}",
                self.map.len(),
                source.order()
            )));
        }
        if let Some((x, &y)) = self.map.iter().enumerate().find(|(_, &y)| y >= target.order()) {
            return Err(Error::InvalidHomomorphism(format!(
                "image {y} of {x} is outside the target of order {}",
                target.order()
            )));
        }
        if self.map[0] != 0 {
            return Err(Error::InvalidHomomorphism("identity is not mapped to identity".into()));
        }
        for x in source.elements() {
            for y in source.elements() {
                if self.map[source.mul(x, y)] != target.mul(self.map[x], self.map[y]) {
                    return Err(Error::InvalidHomomorphism(format!(
                        "multiplication not preserved on ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = ElementSet::new(self.target_order);
        for &y in &self.map {
            if y < self.target_order {
                hit.insert(y);
            }
        }
        hit.len() == self.target_order
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = ElementSet::new(self.target_order);
        self.map.iter().all(|&y| y < self.target_order && hit.insert(y))
    }

    /// Image of a subgroup of the source. Assumes a valid homomorphism.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set_unchecked(ElementSet::from_indices(
            self.target_order,
            h.elements().map(|x| self.map[x]),
        ))
    }

    /// Preimage of a subgroup of the target. Assumes a valid homomorphism.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set_unchecked(ElementSet::from_indices(
            self.source_order,
            (0..self.source_order).filter(|&x| h.contains(self.map[x])),
        ))
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_set_unchecked(ElementSet::from_indices(
            self.source_order,
            (0..self.source_order).filter(|&x| self.map[x] == 0),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 512).unwrap()
    }

    fn find(g: &FiniteGroup, label: &str) -> usize {
        g.elements().find(|&x| g.label(x) == label).unwrap()
    }

    #[test]
    fn closure_examples() {
        let c6 = FiniteGroup::cyclic(6);
        assert!(subgroup_closure(&c6, []).is_trivial());
        assert_eq!(subgroup_closure(&c6, [2]).order(), 3);
        let g = s3();
        let full = subgroup_closure(&g, [find(&g, "(0 1)"), find(&g, "(1 2)")]);
        assert_eq!(full.order(), 6);
    }

    #[test]
    fn center_and_derived_of_s3() {
        let g = s3();
        assert!(center(&g).is_trivial());
        let d = derived_subgroup(&g);
        assert_eq!(d.order(), 3);
        // brute force: the commutators of S3 are exactly the even permutations
        let even: Vec<usize> = ["()", "(0 1 2)", "(0 2 1)"].iter().map(|l| find(&g, l)).collect();
        assert!(even.iter().all(|&x| d.contains(x)));
        assert!(is_normal(&g, &d));
    }

    #[test]
    fn quotient_c6_by_c3() {
        let c6 = FiniteGroup::cyclic(6);
        let n = subgroup_closure(&c6, [2]);
        let (q, proj) = quotient(&c6, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.map(), &[0, 1, 0, 1, 0, 1]);
        proj.check(&c6, &q).unwrap();
        assert_eq!(proj.kernel(), n);
    }

    #[test]
    fn quotient_needs_normality() {
        let g = s3();
        let t = cyclic_subgroup(&g, find(&g, "(0 1)"));
        assert_eq!(quotient(&g, &t).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn induced_group_keeps_structure() {
        let g = s3();
        let d = derived_subgroup(&g);
        let (sub, embed) = induced_group(&g, &d);
        assert_eq!(sub.order(), 3);
        embed.check(&sub, &g).unwrap();
        assert!(embed.is_injective());
        assert_eq!(embed.image(&Subgroup::whole(&sub)), d);
    }

    #[test]
    fn from_elements_rejects_non_subgroups() {
        let c4 = FiniteGroup::cyclic(4);
        assert!(Subgroup::from_elements(&c4, [0, 2]).is_ok());
        assert!(Subgroup::from_elements(&c4, [0, 1]).is_err());
        assert!(Subgroup::from_elements(&c4, [0, 9]).is_err());
    }

    #[test]
    fn homomorphism_validation() {
        let c4 = FiniteGroup::cyclic(4);
        let c2 = FiniteGroup::cyclic(2);
        let proj = Homomorphism::new(&c4, &c2, vec![0, 1, 0, 1]).unwrap();
        assert!(proj.is_surjective());
        assert!(Homomorphism::new(&c4, &c2, vec![0, 1, 1, 0]).is_err());
        assert!(Homomorphism::new(&c4, &c2, vec![1, 0, 1, 0]).is_err());
        let zero = Homomorphism::new(&c4, &c2, vec![0; 4]).unwrap();
        assert!(!zero.is_surjective());
    }
}
