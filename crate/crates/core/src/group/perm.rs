use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::{FiniteGroup, Limits};
use crate::error::{Error, Result};

/// A permutation of `0..m` in one-line notation. Products apply the left factor
/// first: `(p * q)(x) = q(p(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self((0..m).collect())
    }

    /// Parses disjoint cycle notation such as `(0 1)(2 3)` or `()`.
    pub fn parse_cycles(s: &str, points: usize) -> Result<Self> {
        let mut img: Vec<usize> = (0..points).collect();
        let mut moved = vec![false; points];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in `{s}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in `{s}`")))?;
            let cycle: Vec<usize> = open[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point `{t}`")))
                })
                .collect::<Result<_>>()?;
            for &x in &cycle {
                if x >= points {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} outside 0..{points}"
                    )));
                }
                if std::mem::replace(&mut moved[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears twice in `{s}`"
                    )));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                img[x] = cycle[(i + 1) % cycle.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Self(img))
    }

    pub fn compose(&self, then: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| then.0[x]).collect())
    }

    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.0[x];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Group generated by permutations, elements listed breadth-first over words
/// in the generators.
pub(crate) fn permutation_closure(gens: &[Permutation], points: usize, limits: &Limits) -> Result<FiniteGroup> {
    let id = Permutation::identity(points);
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in gens {
            let y = elems[i].compose(s);
            if !index.contains_key(&y) {
                if elems.len() >= limits.max_order {
                    return Err(Error::OrderCap {
                        order: elems.len() + 1,
                        cap: limits.max_order,
                    });
                }
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
            }
        }
    }
    Ok(from_permutations(&elems, &index))
}

pub(crate) fn from_permutations(elems: &[Permutation], index: &HashMap<Permutation, usize>) -> FiniteGroup {
    let labels = elems.iter().map(ToString::to_string).collect();
    FiniteGroup::from_fn(
        elems.len(),
        |a, b| index[&elems[a].compose(&elems[b])],
        Some(labels),
    )
}
