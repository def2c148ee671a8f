use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::action::{semidirect_product, GAction};
use crate::error::{Error, Result};
use crate::group::{is_prime, Caps, FiniteGroup};
use crate::subgroup::{cyclic_subgroup, is_normal, Homomorphism, Subgroup};

use super::InverseSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Levels `(C_p ⋊ C_q)^k` with `C_q` acting faithfully.
    PqPower { p: usize, q: usize },
    /// Levels `C_2 × C_3 × ... × C_{p_k}` over the first `k` primes.
    PrimeColumn,
    /// Levels `C_p^k`.
    Elementary { p: usize },
}

impl Family {
    /// Parses a family name with its optional parameters.
    pub fn from_name(name: &str, p: Option<usize>, q: Option<usize>) -> Result<Self> {
        let need = |x: Option<usize>, what: &str| x.ok_or_else(|| Error::BadParams(format!("{name} needs --{what}")));
        match name {
            "pq-power" => Ok(Family::PqPower { p: need(p, "p")?, q: need(q, "q")? }),
            "prime-column" => Ok(Family::PrimeColumn),
            "elementary" => Ok(Family::Elementary { p: need(p, "p")? }),
            other => Err(Error::BadParams(format!("unknown family {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::PqPower { .. } => "pq-power",
            Family::PrimeColumn => "prime-column",
            Family::Elementary { .. } => "elementary",
        }
    }

    /// The factor adjoined when passing from level `k` to level `k + 1`.
    fn factor(&self, k: usize) -> FiniteGroup {
        match *self {
            Family::PqPower { p, q } => pq_group(p, q),
            Family::PrimeColumn => FiniteGroup::cyclic(nth_prime(k)),
            Family::Elementary { p } => FiniteGroup::cyclic(p),
        }
    }
}

fn nth_prime(k: usize) -> usize {
    (2..).filter(|&n| is_prime(n)).nth(k).expect("infinitely many primes")
}

/// `C_p ⋊ C_q` with the generator of `C_q` acting as multiplication by the
/// least `r > 1` of multiplicative order `q` mod `p`. Element `(b, a)` has
/// index `b·p + a`.
fn pq_group(p: usize, q: usize) -> FiniteGroup {
    let r = (2..p).find(|&r| (0..q).fold(1, |acc, _| acc * r % p) == 1).expect("p ≡ 1 mod q");
    let act = (0..q)
        .map(|b| {
            let scale = (0..b).fold(1, |acc, _| acc * r % p);
            (0..p).map(|a| a * scale % p).collect()
        })
        .collect();
    semidirect_product(&GAction::new(FiniteGroup::cyclic(q), FiniteGroup::cyclic(p), act).expect("valid action"))
}

/// Levels `G_0 = 1, G_1, ..., G_depth`; each bond drops the last coordinate.
pub fn example_system(family: Family, depth: usize, caps: &Caps) -> Result<InverseSystem> {
    match family {
        Family::PqPower { p, q } => {
            if !is_prime(p) || !is_prime(q) {
                return Err(Error::BadParams(format!("p = {p} and q = {q} must both be prime")));
            }
            if p % q != 1 {
                return Err(Error::BadParams(format!("{p} ≢ 1 mod {q}")));
            }
        }
        Family::Elementary { p } if !is_prime(p) => {
            return Err(Error::BadParams(format!("p = {p} must be prime")));
        }
        _ => {}
    }
    let mut order = 1usize;
    for k in 0..depth {
        let size = match family {
            Family::PqPower { p, q } => p * q,
            Family::PrimeColumn => nth_prime(k),
            Family::Elementary { p } => p,
        };
        order = order.checked_mul(size).filter(|&o| o <= caps.max_level_order).ok_or_else(|| {
            Error::BadParams(format!("level {} exceeds the level cap {}", k + 1, caps.max_level_order))
        })?;
    }

    let mut levels = vec![FiniteGroup::trivial()];
    let mut bonds = Vec::with_capacity(depth);
    for k in 0..depth {
        let factor = family.factor(k);
        let below = levels.last().expect("nonempty");
        let next = if k == 0 { factor.clone() } else { FiniteGroup::direct_product(below, &factor) };
        let n = factor.order();
        bonds.push(Homomorphism::from_map_unchecked(next.order(), below.order(), (0..next.order()).map(|x| x / n).collect()));
        levels.push(next);
    }
    InverseSystem::new(levels, bonds)
}

/// The `C_p^k` part of level `k` of the pq-power family: elements whose
/// every coordinate lies in `C_p`.
pub fn coordinate_a_part(g: &FiniteGroup, k: usize, p: usize, q: usize) -> Result<Subgroup> {
    if g.order() != (p * q).pow(k as u32) {
        return Err(Error::BadParams(format!("group of order {} is not level {k} for p = {p}, q = {q}", g.order())));
    }
    let in_a = |mut x: usize| {
        (0..k).all(|_| {
            let ok = x % (p * q) < p;
            x /= p * q;
            ok
        })
    };
    Subgroup::from_elements(g, g.elements().filter(|&x| in_a(x)))
}

/// Nontrivial cyclic subgroups of `a` that are normal in `g`, in lattice order.
pub fn normal_cyclics_in(g: &FiniteGroup, a: &Subgroup) -> Vec<Subgroup> {
    a.elements()
        .filter(|&x| x != 0)
        .map(|x| cyclic_subgroup(g, x))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|c| is_normal(g, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::derived_subgroup;

    #[test]
    fn pq_power_orders() {
        let sys = example_system(Family::PqPower { p: 3, q: 2 }, 3, &Caps::default()).unwrap();
        let orders: Vec<usize> = sys.levels().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 6, 36, 216]);
        for g in &sys.levels()[1..] {
            assert_eq!(g.exponent(), 6);
        }
    }

    #[test]
    fn prime_column_levels() {
        let sys = example_system(Family::PrimeColumn, 3, &Caps::default()).unwrap();
        let orders: Vec<usize> = sys.levels().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 6, 30]);
        assert!(sys.levels().iter().all(|g| g.is_abelian()));
    }

    #[test]
    fn bad_params() {
        let caps = Caps::default();
        for fam in [
            Family::PqPower { p: 5, q: 3 },
            Family::PqPower { p: 9, q: 2 },
            Family::PqPower { p: 7, q: 6 },
            Family::Elementary { p: 4 },
        ] {
            assert!(matches!(example_system(fam, 2, &caps), Err(Error::BadParams(_))), "{fam:?}");
        }
        assert!(matches!(example_system(Family::PqPower { p: 7, q: 3 }, 3, &caps), Err(Error::BadParams(_))));
        assert!(Family::from_name("pq-power", Some(3), None).is_err());
        assert!(Family::from_name("nope", None, None).is_err());
    }

    #[test]
    fn a_part_is_the_derived_subgroup() {
        let sys = example_system(Family::PqPower { p: 3, q: 2 }, 3, &Caps::default()).unwrap();
        for (k, g) in sys.levels().iter().enumerate() {
            assert_eq!(coordinate_a_part(g, k, 3, 2).unwrap(), derived_subgroup(g));
        }
    }

    #[test]
    fn normal_lines_in_a() {
        let sys = example_system(Family::PqPower { p: 3, q: 2 }, 2, &Caps::default()).unwrap();
        let g = sys.level(2);
        let a = coordinate_a_part(g, 2, 3, 2).unwrap();
        // four order-3 lines, two of them normal
        let lines: BTreeSet<_> = a.elements().filter(|&x| x != 0).map(|x| cyclic_subgroup(g, x)).collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(normal_cyclics_in(g, &a).len(), 2);
        let g1 = sys.level(1);
        assert_eq!(normal_cyclics_in(g1, &coordinate_a_part(g1, 1, 3, 2).unwrap()).len(), 1);
        let g0 = sys.level(0);
        assert!(normal_cyclics_in(g0, &coordinate_a_part(g0, 0, 3, 2).unwrap()).is_empty());
    }
}
