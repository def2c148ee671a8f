//! A bundled catalog of small groups and the invariant suite run over it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complement::{
    cernikova_decompose, is_c_group, is_sc_group, radical, refine_supplement, split_abelian_normal,
};
use crate::desc::GroupDesc;
use crate::error::Result;
use crate::group::{is_squarefree, Caps, FiniteGroup};
use crate::lattice::Lattice;
use crate::subgroup::{derived_subgroup, induced_group, quotient};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub group: GroupDesc,
}

fn entry(name: impl Into<String>, group: GroupDesc) -> CatalogEntry {
    CatalogEntry { name: name.into(), group }
}

/// `C_n ⋊ C_m`, the generator of `C_m` acting as `a ↦ a·r`. Needs `r^m ≡ 1 mod n`.
pub fn metacyclic(n: usize, m: usize, r: usize) -> GroupDesc {
    let action = (0..m)
        .map(|b| {
            let scale = (0..b).fold(1 % n, |acc, _| acc * r % n);
            (0..n).map(|a| a * scale % n).collect()
        })
        .collect();
    GroupDesc::Semidirect { actor: Box::new(GroupDesc::cyclic(m)), space: Box::new(GroupDesc::cyclic(n)), action }
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> GroupDesc {
    metacyclic(n, 2, n - 1)
}

pub fn symmetric3() -> GroupDesc {
    GroupDesc::perm(3, vec![vec![1, 2, 0], vec![1, 0, 2]])
}

pub fn alternating4() -> GroupDesc {
    GroupDesc::perm(4, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

pub fn symmetric4() -> GroupDesc {
    GroupDesc::perm(4, vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]])
}

/// Quaternion group as permutations of 8 points.
pub fn quaternion() -> GroupDesc {
    GroupDesc::perm(8, vec![vec![1, 3, 5, 6, 2, 7, 0, 4], vec![2, 4, 3, 7, 6, 1, 5, 0]])
}

/// Heisenberg group mod 3: `C3 ⋉ C3²` with `b·(x, y) = (x, y + bx)`.
pub fn extraspecial27() -> GroupDesc {
    let action = (0..3).map(|b| (0..9).map(|a| (a / 3) * 3 + (a % 3 + b * (a / 3)) % 3).collect()).collect();
    GroupDesc::Semidirect {
        actor: Box::new(GroupDesc::cyclic(3)),
        space: Box::new(power(GroupDesc::cyclic(3), 2)),
        action,
    }
}

/// `C3 ⋉ C3²` acting by inversion through `C2`: the generalized dihedral group of order 18.
pub fn generalized_dihedral9() -> GroupDesc {
    let action = (0..2)
        .map(|b| (0..9).map(|a| if b == 0 { a } else { ((3 - a / 3) % 3) * 3 + (3 - a % 3) % 3 }).collect())
        .collect();
    GroupDesc::Semidirect {
        actor: Box::new(GroupDesc::cyclic(2)),
        space: Box::new(power(GroupDesc::cyclic(3), 2)),
        action,
    }
}

pub fn power(g: GroupDesc, k: usize) -> GroupDesc {
    GroupDesc::product(vec![g; k])
}

fn prod(a: GroupDesc, b: GroupDesc) -> GroupDesc {
    GroupDesc::product(vec![a, b])
}

/// The bundled groups, all of order at most 48.
pub fn catalog() -> Vec<CatalogEntry> {
    let c = GroupDesc::cyclic;
    let mut out = Vec::new();
    for n in (1..=16).chain([18, 20, 21, 24, 27, 30, 42]) {
        out.push(entry(format!("C{n}"), c(n)));
    }
    for (p, k) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)] {
        out.push(entry(format!("C{p}^{k}"), power(c(p), k)));
    }
    out.extend([
        entry("C2xC4", prod(c(2), c(4))),
        entry("C4xC4", prod(c(4), c(4))),
        entry("C2xC8", prod(c(2), c(8))),
        entry("C2xC6", prod(c(2), c(6))),
        entry("C3xC6", prod(c(3), c(6))),
        entry("C6xC6", prod(c(6), c(6))),
        entry("C2^3xC3", prod(power(c(2), 3), c(3))),
        entry("C2^4xC3", prod(power(c(2), 4), c(3))),
    ]);
    for n in 3..=12 {
        out.push(entry(format!("D{n}"), dihedral(n)));
    }
    out.extend([
        entry("D15", dihedral(15)),
        entry("D21", dihedral(21)),
        entry("D24", dihedral(24)),
        entry("S3", symmetric3()),
        entry("A4", alternating4()),
        entry("S4", symmetric4()),
        entry("Q8", quaternion()),
        entry("Q8xC2", prod(quaternion(), c(2))),
        entry("Q8xC3", prod(quaternion(), c(3))),
        entry("C3:C4", metacyclic(3, 4, 2)),
        entry("C5:C4 dicyclic", metacyclic(5, 4, 4)),
        entry("F20", metacyclic(5, 4, 2)),
        entry("F21", metacyclic(7, 3, 2)),
        entry("F42", metacyclic(7, 6, 3)),
        entry("C9:C3", metacyclic(9, 3, 4)),
        entry("extraspecial27", extraspecial27()),
        entry("C3^2:C2", generalized_dihedral9()),
        entry("S3xC2^2", prod(symmetric3(), power(c(2), 2))),
        entry("S3xC3", prod(symmetric3(), c(3))),
        entry("S3xC4", prod(symmetric3(), c(4))),
        entry("S3xC5", prod(symmetric3(), c(5))),
        entry("S3xC7", prod(symmetric3(), c(7))),
        entry("S3xS3", prod(symmetric3(), symmetric3())),
        entry("D5xC3", prod(dihedral(5), c(3))),
        entry("D4xC3", prod(dihedral(4), c(3))),
        entry("D7xC3", prod(dihedral(7), c(3))),
        entry("F21xC2", prod(metacyclic(7, 3, 2), c(2))),
        entry("A4xC2", prod(alternating4(), c(2))),
        entry("S4xC2", prod(symmetric4(), c(2))),
        entry("C3^2:C2xC2", prod(generalized_dihedral9(), c(2))),
        entry("F20xC2", prod(metacyclic(5, 4, 2), c(2))),
    ]);
    out
}

/// Factors whose pairwise products exercise closure under direct products.
pub fn product_factors() -> Vec<CatalogEntry> {
    let c = GroupDesc::cyclic;
    vec![
        entry("C2", c(2)),
        entry("C3", c(3)),
        entry("C4", c(4)),
        entry("C5", c(5)),
        entry("C6", c(6)),
        entry("C2^2", power(c(2), 2)),
        entry("S3", symmetric3()),
        entry("D5", dihedral(5)),
        entry("Q8", quaternion()),
        entry("F21", metacyclic(7, 3, 2)),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cell {
    Pass,
    Fail,
    NotApplicable,
}

impl From<bool> for Cell {
    fn from(ok: bool) -> Self {
        if ok {
            Cell::Pass
        } else {
            Cell::Fail
        }
    }
}

/// Column names of the invariant matrix, in display order.
pub const CHECKS: [&str; 12] = [
    "decomposition_agrees",
    "round_trip",
    "sc_agrees",
    "subgroup_heredity",
    "quotient_heredity",
    "supplement_refinement",
    "metabelian",
    "minimal_normal_prime",
    "squarefree_exponent",
    "abelian_squarefree",
    "radical_split",
    "complement_conjugation",
];

/// Largest order for the exhaustive supplement and SC checks.
pub const EXHAUSTIVE_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub name: String,
    pub order: usize,
    pub c_group: bool,
    pub checks: BTreeMap<String, Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRow {
    pub left: String,
    pub right: String,
    pub order: usize,
    pub left_c: bool,
    pub right_c: bool,
    pub product_c: bool,
    /// `product_c == left_c && right_c`.
    pub result: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogMatrix {
    pub rows: Vec<CatalogRow>,
    pub products: Vec<ProductRow>,
    pub failures: usize,
    pub all_pass: bool,
}

fn c_verdict(g: &FiniteGroup, caps: &Caps) -> Result<bool> {
    Ok(is_c_group(&Lattice::new(g, caps)?).c_group)
}

/// Runs every invariant check on one group.
pub fn check_group(g: &FiniteGroup, caps: &Caps) -> Result<(bool, BTreeMap<String, Cell>)> {
    let lat = Lattice::new(g, caps)?;
    let c = is_c_group(&lat).c_group;
    let mut cells: BTreeMap<String, Cell> = CHECKS.iter().map(|k| (k.to_string(), Cell::NotApplicable)).collect();
    let mut set = |k: &str, v: Cell| {
        cells.insert(k.to_string(), v);
    };

    let decomp = cernikova_decompose(&lat)?;
    set("decomposition_agrees", (decomp.is_ok() == c).into());
    if let Ok(d) = &decomp {
        set("round_trip", (d.verify(g).is_ok() && d.rebuild(g).is_ok()).into());
    }
    if g.order() <= caps.max_sc_order.min(EXHAUSTIVE_ORDER) {
        set("sc_agrees", (is_sc_group(&lat)? == c).into());
    }
    if g.is_abelian() {
        set("abelian_squarefree", (c == is_squarefree(g.exponent())).into());
    }

    // conjugate subgroups have conjugate complement sets
    let mut conj_ok = true;
    for h in lat.subgroups() {
        let ks: Vec<_> = crate::complement::permutable_complements(&lat, h).collect();
        for x in g.elements() {
            let hx = h.conjugate(g, x);
            let mut want: Vec<_> = ks.iter().map(|k| k.conjugate(g, x)).collect();
            want.sort();
            let got: Vec<_> = crate::complement::permutable_complements(&lat, &hx).cloned().collect();
            if want != got {
                conj_ok = false;
            }
        }
    }
    set("complement_conjugation", conj_ok.into());

    if c {
        let mut sub_ok = true;
        for h in lat.subgroups() {
            let (hg, _) = induced_group(g, h);
            sub_ok &= c_verdict(&hg, caps)?;
        }
        set("subgroup_heredity", sub_ok.into());

        let mut quo_ok = true;
        for n in lat.normal_subgroups() {
            let (q, _) = quotient(g, n)?;
            quo_ok &= c_verdict(&q, caps)?;
        }
        set("quotient_heredity", quo_ok.into());

        if g.order() <= EXHAUSTIVE_ORDER {
            let mut ok = true;
            for h in lat.subgroups() {
                for s in lat.subgroups() {
                    if h.product_size(s) == g.order() {
                        ok &= refine_supplement(&lat, h, s).is_ok();
                    }
                }
            }
            set("supplement_refinement", ok.into());
        }

        let d = derived_subgroup(g);
        set("metabelian", d.is_abelian(g).into());
        set(
            "minimal_normal_prime",
            lat.minimal_normal_subgroups().iter().all(|m| crate::group::is_prime(m.order())).into(),
        );
        set("squarefree_exponent", is_squarefree(g.exponent()).into());
        let split = radical(g, &d, caps)?.is_trivial() && split_abelian_normal(g, &d, caps)?.is_ok();
        set("radical_split", split.into());
    }
    Ok((c, cells))
}

/// The full matrix over [`catalog`] and the pairwise products of [`product_factors`].
pub fn invariant_suite(caps: &Caps) -> Result<CatalogMatrix> {
    let mut rows = Vec::new();
    for e in catalog() {
        let g = e.group.build(caps)?;
        let (c_group, checks) = check_group(&g, caps)?;
        rows.push(CatalogRow { name: e.name, order: g.order(), c_group, checks });
    }
    let factors: Vec<(CatalogEntry, FiniteGroup, bool)> = product_factors()
        .into_iter()
        .map(|e| {
            let g = e.group.build(caps)?;
            let c = c_verdict(&g, caps)?;
            Ok((e, g, c))
        })
        .collect::<Result<_>>()?;
    let mut products = Vec::new();
    for (i, (l, lg, lc)) in factors.iter().enumerate() {
        for (r, rg, rc) in &factors[i..] {
            if lg.order() * rg.order() > 48 {
                continue;
            }
            let pg = FiniteGroup::direct_product(lg, rg);
            let pc = c_verdict(&pg, caps)?;
            products.push(ProductRow {
                left: l.name.clone(),
                right: r.name.clone(),
                order: pg.order(),
                left_c: *lc,
                right_c: *rc,
                product_c: pc,
                result: (pc == (*lc && *rc)).into(),
            });
        }
    }
    let failures = rows.iter().flat_map(|r| r.checks.values()).filter(|&&c| c == Cell::Fail).count()
        + products.iter().filter(|p| p.result == Cell::Fail).count();
    Ok(CatalogMatrix { rows, products, failures, all_pass: failures == 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds_within_48() {
        let caps = Caps::default();
        let entries = catalog();
        assert!(entries.len() >= 30);
        let mut names = std::collections::BTreeSet::new();
        for e in &entries {
            let g = e.group.build(&caps).unwrap();
            assert!(g.order() <= 48, "{}", e.name);
            assert!(names.insert(e.name.clone()), "duplicate {}", e.name);
        }
    }

    #[test]
    fn named_orders() {
        let caps = Caps::default();
        for (d, n, abelian) in [
            (quaternion(), 8, false),
            (extraspecial27(), 27, false),
            (generalized_dihedral9(), 18, false),
            (symmetric4(), 24, false),
            (alternating4(), 12, false),
            (dihedral(6), 12, false),
            (metacyclic(7, 6, 3), 42, false),
        ] {
            let g = d.build(&caps).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(g.is_abelian(), abelian);
        }
        let q8 = quaternion().build(&caps).unwrap();
        // one involution
        assert_eq!(q8.elements().filter(|&x| q8.element_order(x) == 2).count(), 1);
        let e27 = extraspecial27().build(&caps).unwrap();
        assert_eq!(e27.exponent(), 3);
    }
}
