use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// True iff for every `H` there is one `K` such that, for every `J ⊇ H`,
/// `J ∩ K` complements `H` in `J`: `⟨H, J ∩ K⟩ = J` and `H ∩ J ∩ K = 1`.
///
/// Cubic in the lattice size; refused above `caps.max_sc_order`.
pub fn is_sc_group(lat: &Lattice) -> Result<bool> {
    let g = lat.group();
    if g.order() > lat.caps().max_sc_order {
        return Err(Error::OrderCapExceeded { cap: lat.caps().max_sc_order });
    }
    let subs = lat.subgroups();
    let mut joins: HashMap<(usize, usize), usize> = HashMap::new();
    let mut join = |a: usize, b: usize| -> usize {
        *joins.entry((a, b)).or_insert_with(|| {
            let j = subs[a].join(g, &subs[b]);
            lat.position(&j).expect("join is in the lattice")
        })
    };
    for (hi, h) in subs.iter().enumerate() {
        let over: Vec<usize> = (0..subs.len()).filter(|&j| h.is_subgroup_of(&subs[j])).collect();
        let ok = subs.iter().any(|k| {
            // H ∩ (J ∩ K) = H ∩ K for every J ⊇ H
            k.meets_trivially(h)
                && over.iter().all(|&ji| {
                    let m = subs[ji].intersection(k);
                    let mi = lat.position(&m).expect("intersection is in the lattice");
                    join(hi, mi) == ji
                })
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Caps, FiniteGroup};

    #[test]
    fn small_cases() {
        let caps = Caps::default();
        for (g, expect) in [
            (FiniteGroup::trivial(), true),
            (FiniteGroup::cyclic(4), false),
            (FiniteGroup::cyclic(6), true),
            (FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 512).unwrap(), true),
        ] {
            let lat = Lattice::new(&g, &caps).unwrap();
            assert_eq!(is_sc_group(&lat).unwrap(), expect, "order {}", g.order());
        }
    }

    #[test]
    fn order_cap() {
        let g = FiniteGroup::cyclic(30);
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        assert!(matches!(is_sc_group(&lat), Err(Error::OrderCapExceeded { cap: 24 })));
    }
}
