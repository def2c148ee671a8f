//! The decomposition `G = B ⋉ A` with `A = G'` and both factors internal
//! direct products of prime-order cyclic subgroups, every `A`-factor normal.

use serde::{Deserialize, Serialize};

use crate::action::{semidirect_product, GAction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::Lattice;
use crate::subgroup::{derived_subgroup, induced_group, is_normal, subgroup_closure, Homomorphism, Subgroup};

use super::permutable_complements;
use super::radical::{split_abelian_normal, SplitFailure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeGenerator {
    pub element: usize,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CernikovaDecomposition {
    pub a_generators: Vec<PrimeGenerator>,
    pub b_generators: Vec<PrimeGenerator>,
    pub a_subgroup: Subgroup,
    pub b_subgroup: Subgroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CernikovaStage {
    DerivedAbelian,
    SplitDerived,
    ComplementOfDerived,
    SplitComplement,
}

impl CernikovaStage {
    pub const ALL: [CernikovaStage; 4] = [
        CernikovaStage::DerivedAbelian,
        CernikovaStage::SplitDerived,
        CernikovaStage::ComplementOfDerived,
        CernikovaStage::SplitComplement,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CernikovaFailure {
    pub stage: CernikovaStage,
    pub split: Option<SplitFailure>,
}

/// Attempts the decomposition. The inner result is `Err` exactly when `G`
/// is not a C-group; the outer one carries cap errors.
///
/// Stages: `A = G'` must be abelian; `A` must split into `G`-invariant
/// prime-order lines; `A` needs a permutable complement `B` (first in
/// lattice order); `B` must split into prime-order cyclic factors.
pub fn cernikova_decompose(lat: &Lattice) -> Result<std::result::Result<CernikovaDecomposition, CernikovaFailure>> {
    let g = lat.group();
    let caps = lat.caps();
    let fail = |stage, split| Ok(Err(CernikovaFailure { stage, split }));

    let a = derived_subgroup(g);
    if !a.is_abelian(g) {
        return fail(CernikovaStage::DerivedAbelian, None);
    }
    let a_lines = match split_abelian_normal(g, &a, caps)? {
        Ok(lines) => lines,
        Err(f) => return fail(CernikovaStage::SplitDerived, Some(f)),
    };
    let Some(b) = permutable_complements(lat, &a).next().cloned() else {
        return fail(CernikovaStage::ComplementOfDerived, None);
    };
    // B ≅ G/G' is abelian; split it as a module over itself
    let (b_group, embed) = induced_group(g, &b);
    let b_lines = match split_abelian_normal(&b_group, &Subgroup::whole(&b_group), caps)? {
        Ok(lines) => lines.iter().map(|l| embed.image(l)).collect::<Vec<_>>(),
        Err(f) => {
            let lift = SplitFailure { radical: embed.image(&f.radical), ..f };
            return fail(CernikovaStage::SplitComplement, Some(lift));
        }
    };
    let gens = |lines: &[Subgroup]| {
        lines
            .iter()
            .map(|l| PrimeGenerator { element: l.first_nontrivial().expect("prime-order line"), order: l.order() })
            .collect()
    };
    Ok(Ok(CernikovaDecomposition { a_generators: gens(&a_lines), b_generators: gens(&b_lines), a_subgroup: a, b_subgroup: b }))
}

impl CernikovaDecomposition {
    /// Checks every structural invariant against `g`.
    pub fn verify(&self, g: &FiniteGroup) -> std::result::Result<(), String> {
        let cyclic = |x: &PrimeGenerator| subgroup_closure(g, [x.element]);
        for x in self.a_generators.iter().chain(&self.b_generators) {
            if !crate::group::is_prime(x.order) || g.element_order(x.element) != x.order {
                return Err(format!("generator {} is not of prime order {}", x.element, x.order));
            }
        }
        for x in &self.a_generators {
            if !is_normal(g, &cyclic(x)) {
                return Err(format!("<{}> is not normal", x.element));
            }
        }
        for (name, gens, sub) in
            [("A", &self.a_generators, &self.a_subgroup), ("B", &self.b_generators, &self.b_subgroup)]
        {
            let product: usize = gens.iter().map(|x| x.order).product();
            if product != sub.order() || subgroup_closure(g, gens.iter().map(|x| x.element)) != *sub {
                return Err(format!("{name} is not the internal direct product of its generators"));
            }
            if !sub.is_abelian(g) {
                return Err(format!("{name} is not abelian"));
            }
        }
        if !is_normal(g, &self.a_subgroup) {
            return Err("A is not normal".into());
        }
        if !self.a_subgroup.meets_trivially(&self.b_subgroup)
            || self.a_subgroup.product_set(g, &self.b_subgroup).len() != g.order()
        {
            return Err("A and B are not permutable complements".into());
        }
        Ok(())
    }

    /// Rebuilds `B ⋉ A` abstractly from the generator orders and the
    /// exponents by which each `b_j` acts on each `a_i`, and returns it with
    /// the generator-induced isomorphism onto `g`.
    ///
    /// The abstract group is `(C_{q_1} x ... ) ⋉ (C_{p_1} x ...)`; the pair
    /// `(e, f)` of exponent vectors maps to `∏ b_j^{e_j} · ∏ a_i^{f_i}`.
    pub fn rebuild(&self, g: &FiniteGroup) -> Result<(FiniteGroup, Homomorphism)> {
        let a_radix: Vec<usize> = self.a_generators.iter().map(|x| x.order).collect();
        let b_radix: Vec<usize> = self.b_generators.iter().map(|x| x.order).collect();
        let a_abs = cyclic_product(&a_radix);
        let b_abs = cyclic_product(&b_radix);

        // twist[j][i] = t with b_j a_i b_j^-1 = a_i^t
        let mut twist = vec![vec![0usize; a_radix.len()]; b_radix.len()];
        for (j, b) in self.b_generators.iter().enumerate() {
            for (i, a) in self.a_generators.iter().enumerate() {
                let image = g.conj(b.element, a.element);
                twist[j][i] = (1..a.order)
                    .find(|&t| g.pow(a.element, t) == image)
                    .ok_or_else(|| Error::InvalidAction(format!("<a_{i}> is not normalized by b_{j}")))?;
            }
        }
        let act: Vec<Vec<usize>> = b_abs
            .elements()
            .map(|bi| {
                let e = digits(bi, &b_radix);
                a_abs
                    .elements()
                    .map(|ai| {
                        let f = digits(ai, &a_radix);
                        let image: Vec<usize> = f
                            .iter()
                            .enumerate()
                            .map(|(i, &fi)| {
                                let scale = e.iter().enumerate().fold(1, |acc, (j, &ej)| {
                                    acc * mod_pow(twist[j][i], ej, a_radix[i]) % a_radix[i]
                                });
                                fi * scale % a_radix[i]
                            })
                            .collect();
                        undigits(&image, &a_radix)
                    })
                    .collect()
            })
            .collect();
        let rebuilt = semidirect_product(&GAction::new(b_abs, a_abs.clone(), act)?);

        let word = |gens: &[PrimeGenerator], exps: &[usize]| {
            gens.iter().zip(exps).fold(0, |acc, (x, &k)| g.mul(acc, g.pow(x.element, k)))
        };
        let na = a_abs.order();
        let map: Vec<usize> = rebuilt
            .elements()
            .map(|x| {
                let b = word(&self.b_generators, &digits(x / na, &b_radix));
                let a = word(&self.a_generators, &digits(x % na, &a_radix));
                g.mul(b, a)
            })
            .collect();
        let hom = Homomorphism::new(&rebuilt, g, map)?;
        if rebuilt.order() != g.order() || !hom.is_injective() {
            return Err(Error::InvalidHomomorphism("generator map is not a bijection".into()));
        }
        Ok((rebuilt, hom))
    }
}

fn cyclic_product(radix: &[usize]) -> FiniteGroup {
    radix.iter().fold(FiniteGroup::trivial(), |acc, &p| {
        if acc.order() == 1 {
            FiniteGroup::cyclic(p)
        } else {
            FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(p))
        }
    })
}

/// Mixed-radix digits, most significant first (matches `direct_product`).
fn digits(mut x: usize, radix: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radix.len()];
    for (d, &r) in out.iter_mut().zip(radix).rev() {
        *d = x % r;
        x /= r;
    }
    out
}

fn undigits(d: &[usize], radix: &[usize]) -> usize {
    d.iter().zip(radix).fold(0, |acc, (&x, &r)| acc * r + x)
}

fn mod_pow(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::is_c_group;
    use crate::group::Caps;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 512).unwrap()
    }

    #[test]
    fn s3_decomposes() {
        let g = s3();
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        let d = cernikova_decompose(&lat).unwrap().unwrap();
        assert_eq!(d.a_generators.iter().map(|x| x.order).collect::<Vec<_>>(), vec![3]);
        assert_eq!(d.b_generators.iter().map(|x| x.order).collect::<Vec<_>>(), vec![2]);
        assert_eq!(d.a_subgroup, derived_subgroup(&g));
        d.verify(&g).unwrap();
        let (rebuilt, iso) = d.rebuild(&g).unwrap();
        assert_eq!(rebuilt.order(), 6);
        assert!(iso.is_surjective());
    }

    #[test]
    fn c4_fails_at_the_split_stage() {
        let g = FiniteGroup::cyclic(4);
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        // G' = 1 splits trivially; B = G then fails to split
        let f = cernikova_decompose(&lat).unwrap().unwrap_err();
        assert_eq!(f.stage, CernikovaStage::SplitComplement);
        assert!(f.split.is_some());
    }

    #[test]
    fn order_30_decomposes_and_agrees_with_brute_force() {
        let g = FiniteGroup::direct_product(&s3(), &FiniteGroup::cyclic(5));
        let lat = Lattice::new(&g, &Caps::default()).unwrap();
        let d = cernikova_decompose(&lat).unwrap().unwrap();
        assert_eq!(d.a_generators.iter().map(|x| x.order).collect::<Vec<_>>(), vec![3]);
        let mut b: Vec<usize> = d.b_generators.iter().map(|x| x.order).collect();
        b.sort();
        assert_eq!(b, vec![2, 5]);
        d.verify(&g).unwrap();
        assert!(is_c_group(&lat).c_group);
        d.rebuild(&g).unwrap();
    }

    #[test]
    fn digits_round_trip() {
        let radix = [2, 3, 5];
        for x in 0..30 {
            assert_eq!(undigits(&digits(x, &radix), &radix), x);
        }
        assert_eq!(digits(7, &radix), vec![0, 1, 2]);
    }
}
