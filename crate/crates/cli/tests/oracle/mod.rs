//! Naive reference computations on sets of element indices. Nothing here
//! touches the library's lattice, bitsets or complement searches.

#![allow(dead_code)]

use std::collections::BTreeSet;

use permutable::FiniteGroup;

pub type Set = BTreeSet<usize>;

pub fn closure(g: &FiniteGroup, seeds: impl IntoIterator<Item = usize>) -> Set {
    let mut s: Set = seeds.into_iter().collect();
    s.insert(0);
    loop {
        let next: Set = s.iter().flat_map(|&a| s.iter().map(move |&b| g.mul(a, b))).collect();
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

/// Every subgroup, sorted by size and then lexicographically.
pub fn subgroups(g: &FiniteGroup) -> Vec<Set> {
    let mut found: BTreeSet<Set> = BTreeSet::new();
    let mut work = vec![closure(g, [])];
    while let Some(s) = work.pop() {
        if !found.insert(s.clone()) {
            continue;
        }
        for x in 0..g.order() {
            if !s.contains(&x) {
                let t = closure(g, s.iter().copied().chain([x]));
                if !found.contains(&t) {
                    work.push(t);
                }
            }
        }
    }
    let mut out: Vec<Set> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn product(g: &FiniteGroup, h: &Set, k: &Set) -> Set {
    h.iter().flat_map(|&a| k.iter().map(move |&b| g.mul(a, b))).collect()
}

pub fn is_complement(g: &FiniteGroup, h: &Set, k: &Set) -> bool {
    h.intersection(k).count() == 1 && product(g, h, k).len() == g.order()
}

/// C-group verdict with the first subgroup lacking a permutable complement.
pub fn c_group(g: &FiniteGroup) -> (bool, Option<Set>) {
    let subs = subgroups(g);
    for h in &subs {
        if !subs.iter().any(|k| is_complement(g, h, k)) {
            return (false, Some(h.clone()));
        }
    }
    (true, None)
}

pub fn center(g: &FiniteGroup) -> Set {
    (0..g.order()).filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z))).collect()
}

pub fn derived(g: &FiniteGroup) -> Set {
    let comms = (0..g.order()).flat_map(|a| (0..g.order()).map(move |b| (a, b)));
    closure(g, comms.map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b))).collect::<Vec<_>>())
}

pub fn is_normal(g: &FiniteGroup, h: &Set) -> bool {
    (0..g.order()).all(|x| h.iter().all(|&y| h.contains(&g.mul(g.mul(x, y), g.inv(x)))))
}

pub fn exponent(g: &FiniteGroup) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (0..g.order()).fold(1, |acc, x| {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = g.mul(y, x);
            k += 1;
        }
        acc / gcd(acc, k) * k
    })
}

pub fn squarefree(n: usize) -> bool {
    (2..=n).all(|p| n % (p * p) != 0)
}
