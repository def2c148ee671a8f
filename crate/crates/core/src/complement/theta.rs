//! Characters `θ_i : K → (Z/p)^×` of `K` acting on invariant lines of an
//! elementary abelian `p`-subgroup, and the classes of equal characters.

use crate::error::{Error, Result};
use crate::group::{prime_factors, FiniteGroup};
use crate::subgroup::{is_normal, subgroup_closure, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    pub prime: usize,
    pub lines: Vec<Subgroup>,
    /// Canonical generator `x_i` of each line.
    pub generators: Vec<usize>,
    /// `characters[i][j] = t` with `k_j^-1 x_i k_j = x_i^t`, where `k_j` is
    /// the `j`-th element of `K` in index order.
    pub characters: Vec<Vec<usize>>,
    /// Line indices grouped by identical character, in first-seen order.
    pub classes: Vec<Vec<usize>>,
    /// `P_C`: the product of the lines in each class.
    pub class_products: Vec<Subgroup>,
}

pub fn theta_partition(g: &FiniteGroup, k: &Subgroup, p_sub: &Subgroup, lines: &[Subgroup]) -> Result<ThetaPartition> {
    let primes = prime_factors(p_sub.order());
    let [p] = primes[..] else {
        return Err(Error::BadParams("P must be a nontrivial p-group".into()));
    };
    if !p_sub.is_abelian(g) || !is_normal(g, p_sub) || p_sub.elements().any(|x| g.pow(x, p) != 0) {
        return Err(Error::NotAbelianNormal);
    }
    let k_elems = k.to_vec();
    let mut generators = Vec::with_capacity(lines.len());
    let mut characters = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        if line.order() != p || !line.is_subgroup_of(p_sub) {
            return Err(Error::LineNotInvariant { line: i });
        }
        let x = line.first_nontrivial().expect("order p > 1");
        let mut chi = Vec::with_capacity(k_elems.len());
        for &kk in &k_elems {
            let y = g.conj(g.inv(kk), x);
            let t = (1..p).find(|&t| g.pow(x, t) == y).ok_or(Error::LineNotInvariant { line: i })?;
            chi.push(t);
        }
        generators.push(x);
        characters.push(chi);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..lines.len() {
        match classes.iter_mut().find(|c| characters[c[0]] == characters[i]) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let class_products =
        classes.iter().map(|c| subgroup_closure(g, c.iter().map(|&i| generators[i]))).collect();
    Ok(ThetaPartition { prime: p, lines: lines.to_vec(), generators, characters, classes, class_products })
}

impl ThetaPartition {
    /// The common character of class `c`: how each `k` scales every element of `P_C`.
    pub fn class_scalar(&self, c: usize) -> &[usize] {
        &self.characters[self.classes[c][0]]
    }

    /// `N`: the product of all lines except the first of each class.
    /// Factoring it out leaves one line per class.
    pub fn collapsing_subgroup(&self, g: &FiniteGroup) -> Subgroup {
        subgroup_closure(g, self.classes.iter().flat_map(|c| c[1..].iter().map(|&i| self.generators[i])))
    }
}
