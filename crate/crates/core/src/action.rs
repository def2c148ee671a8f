//! Group actions by automorphisms and the semidirect products they define.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// An action of `actor` on `space` by automorphisms. Row `b` of the table is
/// the automorphism induced by `b`, composed so that `act[b1 b2] = act[b1] ∘ act[b2]`.
#[derive(Debug, Clone)]
pub struct GAction {
    actor: FiniteGroup,
    space: FiniteGroup,
    act: Vec<Vec<usize>>,
}

impl GAction {
    pub fn new(actor: FiniteGroup, space: FiniteGroup, act: Vec<Vec<usize>>) -> Result<Self> {
        let a = GAction { actor, space, act };
        a.validate()?;
        Ok(a)
    }

    pub fn trivial(actor: FiniteGroup, space: FiniteGroup) -> Self {
        let act = vec![space.elements().collect(); actor.order()];
        GAction { actor, space, act }
    }

    fn validate(&self) -> Result<()> {
        let (b, a) = (&self.actor, &self.space);
        if self.act.len() != b.order() {
            return Err(Error::InvalidAction(format!("{} rows for an actor of order {}", self.act.len(), b.order())));
        }
        for (r, row) in self.act.iter().enumerate() {
            if row.len() != a.order() || row.iter().any(|&y| y >= a.order()) {
                return Err(Error::InvalidAction(format!("row {r} is not a map on the space")));
            }
            let mut seen = vec![false; a.order()];
            if row.iter().any(|&y| std::mem::replace(&mut seen[y], true)) {
                return Err(Error::InvalidAction(format!("row {r} is not a bijection")));
            }
            for x in a.elements() {
                for y in a.elements() {
                    if row[a.mul(x, y)] != a.mul(row[x], row[y]) {
                        return Err(Error::InvalidAction(format!("row {r} does not preserve ({x}, {y})")));
                    }
                }
            }
        }
        if self.act[0].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::InvalidAction("the identity does not act trivially".into()));
        }
        for b1 in b.elements() {
            for b2 in b.elements() {
                let lhs = &self.act[b.mul(b1, b2)];
                if a.elements().any(|x| lhs[x] != self.act[b1][self.act[b2][x]]) {
                    return Err(Error::InvalidAction(format!("act[{b1}*{b2}] != act[{b1}] ∘ act[{b2}]")));
                }
            }
        }
        Ok(())
    }

    pub fn actor(&self) -> &FiniteGroup {
        &self.actor
    }

    pub fn space(&self) -> &FiniteGroup {
        &self.space
    }

    #[inline]
    pub fn apply(&self, b: usize, a: usize) -> usize {
        self.act[b][a]
    }
}

/// `B ⋉ A`. The pair `(b, a)` sits at index `b * |A| + a` and
/// `(b1, a1)(b2, a2) = (b1 b2, act[b2^-1](a1) a2)`.
///
/// Reading `(b, a)` as the product `b·a` with `act[c](x) = c x c^-1`, this is
/// ordinary multiplication in the internal semidirect product.
pub fn semidirect_product(action: &GAction) -> FiniteGroup {
    let (b, a) = (&action.actor, &action.space);
    let (nb, na) = (b.order(), a.order());
    let n = nb * na;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let (b1, a1) = (x / na, x % na);
        for y in 0..n {
            let (b2, a2) = (y / na, y % na);
            let twisted = action.apply(b.inv(b2), a1);
            mul[x * n + y] = (b.mul(b1, b2) * na + a.mul(twisted, a2)) as u32;
        }
    }
    let labels = match (b.labels(), a.labels()) {
        (None, None) => None,
        _ => Some((0..n).map(|x| format!("({}, {})", b.label(x / na), a.label(x % na))).collect()),
    };
    FiniteGroup::from_trusted_table(n, mul, labels)
}
