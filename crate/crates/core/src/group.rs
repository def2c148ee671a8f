//! Concrete finite groups stored as full multiplication tables.
//!
//! Elements are indices `0..order`, and index 0 is always the identity.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Tables up to this order get the full O(n^3) associativity scan.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
/// Number of random triples sampled above [`FULL_ASSOCIATIVITY_LIMIT`].
pub const SAMPLED_TRIPLES: usize = 10_000;

/// Size limits shared by every brute-force routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Largest group built from a description or a permutation closure.
    pub max_order: usize,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub max_lattice_order: usize,
    /// Largest number of subgroups a lattice may hold.
    pub max_subgroups: usize,
    /// Largest group handed to the SC-group check.
    pub max_sc_order: usize,
    /// Largest single level of an inverse system.
    pub max_level_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 512,
            max_lattice_order: 200,
            max_subgroups: 20_000,
            max_sc_order: 24,
            max_level_order: 2000,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a table already known to satisfy the axioms with
    /// identity 0. Inverses are recomputed from the table.
    pub(crate) fn from_trusted_table(order: usize, mul: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            inv[a] = row.iter().position(|&x| x == 0).expect("row without identity") as u32;
        }
        FiniteGroup { order, mul, inv, labels }
    }

    /// Validates an arbitrary multiplication table.
    ///
    /// The identity is relabeled to index 0 if it sits elsewhere. Checks run
    /// in the order: shape and range, associativity, identity, inverses,
    /// row/column bijectivity.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedTable { row: r, len: row.len(), expected: n });
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::EntryOutOfRange { row: r, col: c, value: v, order: n });
            }
        }
        let m = |a: usize, b: usize| table[a][b];
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            let left = m(m(a, b), c);
            let right = m(a, m(b, c));
            if left != right {
                return Err(Error::NotAssociative { a, b, c, left, right });
            }
            Ok(())
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| m(x, y) == e && m(y, x) == e) {
                return Err(Error::NoInverse { element: x });
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row_seen[m(i, j)], true)
                    || std::mem::replace(&mut col_seen[m(j, i)], true)
                {
                    return Err(Error::NotBijectiveRows { index: i });
                }
            }
        }
        // swap e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(m(a, b)) as u32;
            }
        }
        Ok(Self::from_trusted_table(n, mul, None))
    }

    /// Closure of a set of permutations of `0..degree`.
    ///
    /// Elements are enumerated breadth-first: the identity first, then each
    /// discovered element multiplied by the generators in input order.
    /// Products compose left to right: `x * y` applies `x` first.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], max_order: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(Error::InvalidPermutation { index: i, degree });
            }
        }
        let compose = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().map(|&p| y[p as usize]).collect() };
        let gens: Vec<Vec<u32>> =
            generators.iter().map(|g| g.iter().map(|&x| x as u32).collect()).collect();
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(identity, 0)]);
        let mut next = 0;
        while next < elements.len() {
            for g in &gens {
                let p = compose(&elements[next], g);
                if !index.contains_key(&p) {
                    if elements.len() >= max_order {
                        return Err(Error::OrderCapExceeded { cap: max_order });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            next += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&compose(&elements[a], &elements[b])] as u32;
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::from_trusted_table(n, mul, Some(labels)))
    }

    /// Cyclic group of order `n`; element `k` is the `k`-th power of the generator 1.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = ((a + b) % n) as u32;
            }
        }
        Self::from_trusted_table(n, mul, None)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `G x H` with `(g, h)` stored at index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (ng, nh) = (g.order, h.order);
        let n = ng * nh;
        let mut mul = vec![0u32; n * n];
        for x in 0..n {
            let (xg, xh) = (x / nh, x % nh);
            for y in 0..n {
                let (yg, yh) = (y / nh, y % nh);
                mul[x * n + y] = (g.mul(xg, yg) * nh + h.mul(xh, yh)) as u32;
            }
        }
        let labels = match (&g.labels, &h.labels) {
            (None, None) => None,
            _ => Some((0..n).map(|x| format!("({}, {})", g.label(x / nh), h.label(x % nh))).collect()),
        };
        Self::from_trusted_table(n, mul, labels)
    }

    /// `factor^k`, most significant coordinate first. `k = 0` gives the trivial group.
    pub fn direct_power(factor: &FiniteGroup, k: usize) -> Self {
        (0..k).fold(Self::trivial(), |acc, _| {
            if acc.order == 1 {
                factor.clone()
            } else {
                Self::direct_product(&acc, factor)
            }
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g * x * g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let (mut acc, mut base, mut k) = (0, x, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The prime divisors of the order.
    pub fn prime_set(&self) -> Vec<usize> {
        prime_factors(self.order)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// The table as nested rows, for serialization.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.elements().map(|b| self.mul(a, b)).collect()).collect()
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: x, order: self.order })
        }
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_squarefree(n: usize) -> bool {
    prime_factors(n).iter().all(|p| n % (p * p) != 0)
}

fn cycle_notation(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
