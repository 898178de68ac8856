//! Finite abelian groups in invariant-factor form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::snf::{smith_normal_form_uncapped, IntMatrix};

/// `Z/d1 + Z/d2 + ... + Z/dk` with `d1 | d2 | ... | dk`, every `di >= 2`.
/// Elements are residue tuples; the mixed-radix index puts the first factor
/// in the least significant position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteAbelian {
    factors: Vec<u64>,
}

impl TryFrom<Vec<u64>> for FiniteAbelian {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        FiniteAbelian::new(v)
    }
}

impl From<FiniteAbelian> for Vec<u64> {
    fn from(a: FiniteAbelian) -> Self {
        a.factors
    }
}

impl fmt::Display for FiniteAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl FiniteAbelian {
    /// Validates an invariant-factor list.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::InvalidCoefficients(format!(
                "invariant factors must be >= 2, got {factors:?}"
            )));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidCoefficients(format!(
                "invariant factors must form a divisibility chain, got {factors:?}"
            )));
        }
        Ok(Self { factors })
    }

    pub fn trivial() -> Self {
        Self { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(&[n])
    }

    /// Normalises an arbitrary direct sum of cyclic groups `Z/n1 + Z/n2 + ...`
    /// (orders `>= 1`) into invariant-factor form.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &n in orders {
            for (p, k) in factorize(n) {
                by_prime.entry(p).or_default().push(p.pow(k));
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for mut parts in by_prime.into_values() {
            parts.sort_unstable();
            let off = len - parts.len();
            for (i, x) in parts.into_iter().enumerate() {
                factors[off + i] *= x;
            }
        }
        Self { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.factors
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&d, (&x, &y))| (x + y) % d)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        self.factors
            .iter()
            .zip(a)
            .map(|(&d, &x)| (d - x % d) % d)
            .collect()
    }

    pub fn scale(&self, a: &[u64], k: u64) -> Vec<u64> {
        self.factors
            .iter()
            .zip(a)
            .map(|(&d, &x)| (x % d) * (k % d) % d)
            .collect()
    }

    /// Reduces an integer vector into canonical residues.
    pub fn reduce(&self, a: &[i64]) -> Vec<u64> {
        self.factors
            .iter()
            .zip(a)
            .map(|(&d, &x)| x.rem_euclid(d as i64) as u64)
            .collect()
    }

    pub fn index_of(&self, a: &[u64]) -> usize {
        let mut idx = 0u64;
        for (&d, &x) in self.factors.iter().zip(a).rev() {
            idx = idx * d + x % d;
        }
        idx as usize
    }

    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&d| {
                let x = idx as u64 % d;
                idx /= d as usize;
                x
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order() as usize).map(|i| self.element(i))
    }

    pub fn element_order(&self, a: &[u64]) -> u64 {
        self.factors
            .iter()
            .zip(a)
            .map(|(&d, &x)| d / gcd(d, x % d))
            .fold(1, lcm)
    }

    /// `|Hom(self, other)| = prod gcd(di, ej)`.
    pub fn hom_count(&self, other: &FiniteAbelian) -> u64 {
        let mut n = 1;
        for &d in &self.factors {
            for &e in &other.factors {
                n *= gcd(d, e);
            }
        }
        n
    }

    /// Whether `self` embeds in `other` (prime-wise partition dominance).
    pub fn embeds_in(&self, other: &FiniteAbelian) -> bool {
        let primes: std::collections::BTreeSet<u64> = self
            .factors
            .iter()
            .flat_map(|&d| factorize(d).into_iter().map(|(p, _)| p))
            .collect();
        primes.into_iter().all(|p| {
            let part = |a: &FiniteAbelian| -> Vec<u32> {
                let mut v: Vec<u32> = a
                    .factors
                    .iter()
                    .map(|&d| factorize(d).into_iter().find(|&(q, _)| q == p).map_or(0, |x| x.1))
                    .filter(|&k| k > 0)
                    .collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            };
            let (mine, theirs) = (part(self), part(other));
            mine.len() <= theirs.len() && mine.iter().zip(&theirs).all(|(a, b)| a <= b)
        })
    }

    /// All abelian groups of order `n` in invariant-factor form, ordered by
    /// number of factors and then lexicographically.
    pub fn all_of_order(n: u64) -> Vec<FiniteAbelian> {
        fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=k.min(max)).rev() {
                for mut rest in partitions(k - first, first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        let mut groups: Vec<FiniteAbelian> = vec![FiniteAbelian::trivial()];
        for (p, k) in factorize(n) {
            let mut next = Vec::new();
            for g in &groups {
                for part in partitions(k, k) {
                    let mut orders: Vec<u64> = g.factors.clone();
                    orders.extend(part.iter().map(|&e| p.pow(e)));
                    next.push(FiniteAbelian::from_cyclic_orders(&orders));
                }
            }
            groups = next;
        }
        groups.sort_by(|a, b| a.rank().cmp(&b.rank()).then(a.factors.cmp(&b.factors)));
        groups
    }
}

/// Result of `source / <relations>`: the quotient in invariant-factor form with
/// explicit maps in both directions.
#[derive(Debug, Clone)]
pub struct AbelianQuotient {
    pub quotient: FiniteAbelian,
    /// `quotient_coords = source_coords * proj` reduced per factor (`source.rank() x quotient.rank()`).
    proj: IntMatrix,
    /// Source coordinates of the quotient's generators.
    pub section: Vec<Vec<u64>>,
}

impl AbelianQuotient {
    pub fn project(&self, x: &[u64]) -> Vec<u64> {
        let r = self.quotient.rank();
        let mut out = vec![0i64; r];
        for (i, &xi) in x.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                let d = self.quotient.factors()[j] as i64;
                *o = (*o + (xi as i64 % d) * self.proj[i][j].rem_euclid(d)).rem_euclid(d);
            }
        }
        out.into_iter().map(|v| v as u64).collect()
    }
}

/// Quotient of `source` by the subgroup generated by `relations` (given as
/// coordinate vectors).
pub fn quotient(source: &FiniteAbelian, relations: &[Vec<i64>]) -> Result<AbelianQuotient> {
    let r = source.rank();
    let mut m: IntMatrix = relations.to_vec();
    for (i, &d) in source.factors().iter().enumerate() {
        let mut row = vec![0; r];
        row[i] = d as i64;
        m.push(row);
    }
    if r == 0 {
        return Ok(AbelianQuotient {
            quotient: FiniteAbelian::trivial(),
            proj: vec![],
            section: vec![],
        });
    }
    let snf = smith_normal_form_uncapped(&m)?;
    let keep: Vec<usize> = (0..r).filter(|&j| snf.diagonal[j] != 1).collect();
    let factors: Vec<u64> = keep.iter().map(|&j| snf.diagonal[j] as u64).collect();
    let quotient = FiniteAbelian::new(factors)?;
    let proj = (0..r)
        .map(|i| keep.iter().map(|&j| snf.right[i][j]).collect())
        .collect();
    let section = keep
        .iter()
        .map(|&j| source.reduce(&snf.right_inv[j]))
        .collect();
    Ok(AbelianQuotient {
        quotient,
        proj,
        section,
    })
}

/// Subgroup of `ambient` generated by `gens`, with a basis in invariant-factor
/// form (`basis[j]` has order `subgroup.factors()[j]`).
#[derive(Debug, Clone)]
pub struct AbelianSubgroup {
    pub subgroup: FiniteAbelian,
    pub basis: Vec<Vec<u64>>,
}

pub fn subgroup_generated(ambient: &FiniteAbelian, gens: &[Vec<u64>]) -> Result<AbelianSubgroup> {
    let k = gens.len();
    let r = ambient.rank();
    if k == 0 || r == 0 {
        return Ok(AbelianSubgroup {
            subgroup: FiniteAbelian::trivial(),
            basis: vec![],
        });
    }
    // left kernel of [gens; diag(ambient)] restricted to the first k coordinates
    let mut m: IntMatrix = gens
        .iter()
        .map(|g| g.iter().map(|&x| x as i64).collect())
        .collect();
    for (i, &d) in ambient.factors().iter().enumerate() {
        let mut row = vec![0; r];
        row[i] = d as i64;
        m.push(row);
    }
    let snf = smith_normal_form_uncapped(&m)?;
    let rank = snf.diagonal.iter().filter(|&&d| d != 0).count();
    let mut kernel: IntMatrix = snf.left[rank..]
        .iter()
        .map(|row| row[..k].to_vec())
        .collect();
    let exp = ambient.exponent() as i64;
    for i in 0..k {
        let mut row = vec![0; k];
        row[i] = exp;
        kernel.push(row);
    }
    let ksnf = smith_normal_form_uncapped(&kernel)?;
    let mut subgroup_factors = Vec::new();
    let mut basis = Vec::new();
    for j in 0..k {
        let d = ksnf.diagonal[j];
        if d == 1 {
            continue;
        }
        subgroup_factors.push(d as u64);
        let coeffs = &ksnf.right_inv[j];
        let mut v = vec![0i64; r];
        for (c, g) in coeffs.iter().zip(gens) {
            for (vi, &gi) in v.iter_mut().zip(g) {
                *vi = (*vi + c * gi as i64).rem_euclid(exp);
            }
        }
        basis.push(ambient.reduce(&v));
    }
    Ok(AbelianSubgroup {
        subgroup: FiniteAbelian::new(subgroup_factors)?,
        basis,
    })
}
