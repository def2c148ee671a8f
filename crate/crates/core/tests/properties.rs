use std::collections::BTreeSet;

use permutable::bitset::ElementSet;
use permutable::catalog::catalog;
use permutable::complement::{cernikova_decompose, is_c_group, permutable_complements};
use permutable::desc::GroupDesc;
use permutable::profinite::{
    example_system, lift_complement_chain, CompatibleSubgroup, Family, InverseSystem,
};
use permutable::{quotient, Caps, FiniteGroup, Lattice, Subgroup};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

fn perm_group() -> impl Strategy<Value = FiniteGroup> {
    (3usize..=5)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(perm(d), 1..=2)))
        .prop_map(|(d, gens)| FiniteGroup::from_permutations(d, &gens, 512).unwrap())
}

fn catalog_group() -> impl Strategy<Value = FiniteGroup> {
    let entries = catalog();
    (0..entries.len()).prop_map(move |i| entries[i].group.build(&Caps::default()).unwrap())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn lattice_is_closed_under_meet_and_join(g in perm_group()) {
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        let subs = lat.subgroups();
        for (i, a) in subs.iter().enumerate().step_by(3) {
            prop_assert_eq!(g.order() % a.order(), 0);
            for b in subs.iter().skip(i).step_by(5) {
                prop_assert!(lat.position(&a.intersection(b)).is_some());
                prop_assert!(lat.position(&a.join(&g, b)).is_some());
            }
        }
        // sorted by order, then members
        prop_assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn decomposition_exists_iff_c_group(g in perm_group()) {
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        let c = is_c_group(&lat).c_group;
        let d = cernikova_decompose(&lat).unwrap();
        prop_assert_eq!(d.is_ok(), c);
        if let Ok(d) = d {
            prop_assert!(d.verify(&g).is_ok());
            prop_assert!(d.rebuild(&g).is_ok());
        }
    }

    #[test]
    fn quotients_of_c_groups_are_c_groups(g in perm_group()) {
        let caps = Caps::default();
        let lat = Lattice::new(&g, &caps).unwrap();
        if is_c_group(&lat).c_group {
            for n in lat.normal_subgroups() {
                let (q, proj) = quotient(&g, n).unwrap();
                prop_assert_eq!(q.order() * n.order(), g.order());
                prop_assert_eq!(&proj.kernel(), n);
                prop_assert!(proj.is_surjective());
                prop_assert!(is_c_group(&Lattice::new(&q, &caps).unwrap()).c_group);
            }
        }
    }

    #[test]
    fn table_round_trip(g in perm_group()) {
        let t = g.table();
        let h = FiniteGroup::from_table(&t).unwrap();
        prop_assert_eq!(h.table(), t);
    }

    #[test]
    fn conjugation_permutes_complements(g in catalog_group(), seed in any::<u64>()) {
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        let subs = lat.subgroups();
        let h = &subs[(seed as usize) % subs.len()];
        let x = (seed as usize / 7) % g.order();
        let mut moved: Vec<Subgroup> = permutable_complements(&lat, h).map(|k| k.conjugate(&g, x)).collect();
        moved.sort();
        let hx = h.conjugate(&g, x);
        let direct: Vec<Subgroup> = permutable_complements(&lat, &hx).cloned().collect();
        prop_assert_eq!(moved, direct);
    }

    #[test]
    fn abelian_c_iff_squarefree_exponent(ns in prop::collection::vec(1usize..=12, 1..=3)) {
        let n: usize = ns.iter().product();
        prop_assume!(n <= 150);
        let g = GroupDesc::product(ns.iter().map(|&n| GroupDesc::cyclic(n)).collect()).build(&Caps::default()).unwrap();
        let exponent = ns.iter().fold(1, |acc, &n| acc / gcd(acc, n) * n);
        prop_assert_eq!(g.exponent(), exponent);
        let squarefree = (2..=exponent).all(|p| exponent % (p * p) != 0);
        prop_assert_eq!(is_c_group(&Lattice::new(&g, &Caps::default()).unwrap()).c_group, squarefree);
    }

    #[test]
    fn descriptions_round_trip(ns in prop::collection::vec(1usize..=6, 0..=3)) {
        let d = GroupDesc::product(ns.into_iter().map(GroupDesc::cyclic).collect());
        let text = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<GroupDesc>(&text).unwrap(), d);
    }

    #[test]
    fn element_sets_match_btreesets(a in prop::collection::btree_set(0usize..130, 0..40), b in prop::collection::btree_set(0usize..130, 0..40)) {
        let (sa, sb) = (ElementSet::from_indices(130, a.iter().copied()), ElementSet::from_indices(130, b.iter().copied()));
        prop_assert_eq!(sa.to_vec(), a.iter().copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.intersection(&sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.intersection_len(&sb), a.intersection(&b).count());
        prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        prop_assert_eq!(sa.cmp(&sb), a.iter().cmp(b.iter()));
    }
}

fn systems() -> Vec<InverseSystem> {
    let caps = Caps::default();
    let s3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 512).unwrap();
    vec![
        example_system(Family::Elementary { p: 2 }, 4, &caps).unwrap(),
        example_system(Family::PrimeColumn, 4, &caps).unwrap(),
        example_system(Family::PqPower { p: 7, q: 3 }, 2, &caps).unwrap(),
        example_system(Family::PqPower { p: 3, q: 2 }, 3, &caps).unwrap(),
        InverseSystem::constant(&s3, 3),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn chains_lift_for_compatible_subgroups(which in 0usize..5, raw in prop::collection::vec(any::<usize>(), 0..=3)) {
        let sys = &systems()[which];
        let top = sys.top().order();
        let gens: Vec<usize> = raw.iter().map(|x| x % top).collect();
        let h = CompatibleSubgroup::generated_at_top(sys, &gens).unwrap();
        prop_assert!(CompatibleSubgroup::new(sys, h.levels().to_vec()).is_ok());
        let chain = lift_complement_chain(sys, &h).unwrap();
        prop_assert!(chain.verify(sys, &h).is_ok());
        for (k, (kk, hk)) in chain.levels().iter().zip(h.levels()).enumerate() {
            prop_assert_eq!(kk.order() * hk.order(), sys.level(k).order());
            prop_assert!(kk.meets_trivially(hk));
        }
    }

    #[test]
    fn images_under_bonds_are_exact(which in 0usize..5, raw in prop::collection::vec(any::<usize>(), 1..=2)) {
        let sys = &systems()[which];
        let top = sys.top().order();
        let h = CompatibleSubgroup::generated_at_top(sys, &raw.iter().map(|x| x % top).collect::<Vec<_>>()).unwrap();
        for k in 0..sys.depth() {
            let image: BTreeSet<usize> = h.levels()[k + 1].elements().map(|x| sys.bond(k).apply(x)).collect();
            prop_assert_eq!(image, h.levels()[k].elements().collect::<BTreeSet<_>>());
        }
    }
}
