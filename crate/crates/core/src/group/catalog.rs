//! Named groups with fixed element orderings.
//!
//! | name | order | element `i` |
//! |------|-------|-------------|
//! | `trivial` | 1 | identity |
//! | `cyclic n` | n | `i` (mod n) |
//! | `dihedral n` | 2n | `r^(i mod n) s^(i div n)` with `s r s = r^-1` |
//! | `symmetric n` | n! | `i`-th permutation in lexicographic one-line order |
//! | `alternating n` | n!/2 | `i`-th even permutation in lexicographic order |
//! | `quaternion8` | 8 | `(-1)^(i mod 2)` times the unit `1, i, j, k` at position `i div 2` |
//! | `heisenberg p` | p^3 | `(a, b, c)` with `i = a + p b + p^2 c` |
//! | `sl2 p` | p(p^2-1) | identity, then the other matrices `[[a,b],[c,d]]` by `(a,b,c,d)` |
//! | `klein4` | 4 | alias for `cyclic 2 x cyclic 2` |
//! | `G x H` | \|G\|\|H\| | `(g, h)` at `g + \|G\| h` |

use std::collections::HashMap;

use super::perm::{from_permutations, Permutation};
use super::{FiniteGroup, Limits};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Catalog {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    Heisenberg(usize),
    Sl2(usize),
    Product(Box<Catalog>, Box<Catalog>),
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Catalog {
    /// Parses names such as `cyclic 4`, `SL2 5` or `dihedral 3 x cyclic 2`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(" x ").collect();
        if parts.len() > 1 {
            let mut it = parts.into_iter().map(Self::parse);
            let first = it.next().unwrap()?;
            return it.try_fold(first, |acc, g| Ok(Catalog::Product(Box::new(acc), Box::new(g?))));
        }
        let words: Vec<&str> = s.split_whitespace().collect();
        let Some((name, args)) = words.split_first() else {
            return Err(Error::UnknownCatalog(s.to_string()));
        };
        let params = args
            .iter()
            .map(|a| a.parse::<usize>().map_err(|_| Error::InvalidSpec(format!("bad parameter `{a}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_name(name, &params)
    }

    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        let one = |what: &str| -> Result<usize> {
            match params {
                [n] => Ok(*n),
                _ => Err(Error::InvalidSpec(format!("`{what}` takes exactly one parameter"))),
            }
        };
        let none = |g: Catalog| -> Result<Catalog> {
            if params.is_empty() {
                Ok(g)
            } else {
                Err(Error::InvalidSpec(format!("`{name}` takes no parameters")))
            }
        };
        let g = match lower.as_str() {
            "trivial" => none(Catalog::Trivial)?,
            "cyclic" => Catalog::Cyclic(one("cyclic")?),
            "dihedral" => Catalog::Dihedral(one("dihedral")?),
            "symmetric" => Catalog::Symmetric(one("symmetric")?),
            "alternating" => Catalog::Alternating(one("alternating")?),
            "quaternion8" => none(Catalog::Quaternion8)?,
            "klein4" => none(Catalog::Product(
                Box::new(Catalog::Cyclic(2)),
                Box::new(Catalog::Cyclic(2)),
            ))?,
            "heisenberg" => Catalog::Heisenberg(one("heisenberg")?),
            "sl2" => Catalog::Sl2(one("sl2")?),
            _ => return Err(Error::UnknownCatalog(name.to_string())),
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidSpec(m.to_string()));
        match *self {
            Catalog::Cyclic(0) => bad("cyclic order must be positive"),
            Catalog::Dihedral(n) if n < 1 => bad("dihedral parameter must be positive"),
            Catalog::Symmetric(0) | Catalog::Alternating(0) => bad("need at least one point"),
            Catalog::Heisenberg(p) if !is_prime(p) => bad("heisenberg parameter must be prime"),
            Catalog::Sl2(p) if !is_prime(p) || p > 5 => bad("sl2 is available for p in {2, 3, 5}"),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> u128 {
        match self {
            Catalog::Trivial => 1,
            Catalog::Cyclic(n) => *n as u128,
            Catalog::Dihedral(n) => 2 * *n as u128,
            Catalog::Symmetric(n) => (1..=*n as u128).product(),
            Catalog::Alternating(n) => ((1..=*n as u128).product::<u128>()).div_ceil(2),
            Catalog::Quaternion8 => 8,
            Catalog::Heisenberg(p) => (*p as u128).pow(3),
            Catalog::Sl2(p) => {
                let p = *p as u128;
                p * (p * p - 1)
            }
            Catalog::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        let order = self.order();
        if order > limits.max_order as u128 {
            return Err(Error::OrderCap {
                order: usize::try_from(order).unwrap_or(usize::MAX),
                cap: limits.max_order,
            });
        }
        Ok(match self {
            Catalog::Trivial => FiniteGroup::trivial(),
            Catalog::Cyclic(n) => {
                let n = *n;
                FiniteGroup::from_fn(n, |a, b| (a + b) % n, None)
            }
            Catalog::Dihedral(n) => {
                let n = *n;
                FiniteGroup::from_fn(
                    2 * n,
                    |x, y| {
                        let (i, j) = (x % n, x / n);
                        let (k, l) = (y % n, y / n);
                        let r = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                        r + n * ((j + l) % 2)
                    },
                    None,
                )
            }
            Catalog::Symmetric(n) => permutation_list(*n, false),
            Catalog::Alternating(n) => permutation_list(*n, true),
            Catalog::Quaternion8 => quaternion8(),
            Catalog::Heisenberg(p) => {
                let p = *p;
                let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
                FiniteGroup::from_fn(
                    p * p * p,
                    |x, y| {
                        let (a, b, c) = split(x);
                        let (a2, b2, c2) = split(y);
                        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
                    },
                    None,
                )
            }
            Catalog::Sl2(p) => sl2(*p),
            Catalog::Product(a, b) => FiniteGroup::direct_product(&a.build(limits)?, &b.build(limits)?),
        })
    }
}

fn permutation_list(n: usize, even_only: bool) -> FiniteGroup {
    let mut elems = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        let p = Permutation(cur.clone());
        if !even_only || p.is_even() {
            elems.push(p);
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let index: HashMap<Permutation, usize> = elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    from_permutations(&elems, &index)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn quaternion8() -> FiniteGroup {
    // unit products: e_a e_b = sign * e_c over 1, i, j, k
    const PROD: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_fn(
        8,
        |x, y| {
            let (c, neg) = PROD[x / 2][y / 2];
            let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
            2 * c + sign
        },
        Some(labels),
    )
}

fn sl2(p: usize) -> FiniteGroup {
    let mut mats = vec![[1, 0, 0, 1]];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    if (a * d + p * p - b * c) % p == 1 && m != [1, 0, 0, 1] {
                        mats.push(m);
                    }
                }
            }
        }
    }
    let index: HashMap<[usize; 4], usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let labels = mats
        .iter()
        .map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]))
        .collect();
    FiniteGroup::from_fn(
        mats.len(),
        |x, y| {
            let [a, b, c, d] = mats[x];
            let [e, f, g, h] = mats[y];
            index[&[(a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p]]
        },
        Some(labels),
    )
}
