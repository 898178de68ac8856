//! Finite groups given by Cayley tables over element indices `0..n`, with the
//! identity pinned at index 0.

mod catalog;
mod iso;
mod perm;
mod spec;

use std::collections::VecDeque;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::FiniteAbelian;
use crate::error::{Error, Result};
use crate::snf::{smith_normal_form_uncapped, LatticeBuilder};

pub use catalog::Catalog;
pub use iso::{extend_to_hom, find_isomorphism, find_isomorphism_with};
pub use perm::Permutation;
pub use spec::GroupSpec;

pub type GroupRef = Arc<FiniteGroup>;

/// Size caps for the brute-force machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group built from tables, generators or the catalog.
    pub max_order: usize,
    /// Largest group handed to the cohomology solver.
    pub cohomology_max_order: usize,
    /// Tables up to this order get an exhaustive associativity check.
    pub full_associativity_check: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: 512,
            cohomology_max_order: 128,
            full_associativity_check: 256,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds a group from a Cayley table. If the identity is not element 0 the
    /// table is relabelled by swapping it into position 0.
    pub fn from_table(rows: Vec<Vec<usize>>, limits: &Limits) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > limits.max_order {
            return Err(Error::OrderCap {
                order: n,
                cap: limits.max_order,
            });
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        if let Some(&x) = rows.iter().flatten().find(|&&x| x >= n) {
            return Err(Error::InvalidTable(format!("entry {x} out of range")));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| rows[e][g] == g && rows[g][e] == g))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let relabel = |x: usize| -> usize {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]);
            }
        }
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let x = table[a * n + b];
                if seen[x] {
                    return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        let g = Self::from_flat(n, table, None)?;
        g.check_associativity(limits)?;
        Ok(g)
    }

    /// Table with identity at 0 and a right inverse for every element. No
    /// associativity check; callers guarantee it by construction.
    pub(crate) fn from_flat(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
        }
        if inverse.contains(&usize::MAX) {
            return Err(Error::InvalidTable("element without inverse".into()));
        }
        Ok(Self {
            order,
            table,
            inverse,
            labels,
        })
    }

    /// Builds a group from a closed multiplication function on `0..order`.
    pub(crate) fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize, labels: Option<Vec<String>>) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(f(a, b));
            }
        }
        Self::from_flat(order, table, labels).expect("constructed group has inverses")
    }

    fn check_associativity(&self, limits: &Limits) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::NotAssociative(a, b, c))
            } else {
                Ok(())
            }
        };
        if n <= limits.full_associativity_check {
            for a in 1..n {
                for b in 1..n {
                    for c in 1..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..10_000 {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::from_flat(1, vec![0], None).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `[a, b] = a^-1 b^-1 a b`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `h^g = g^-1 h g`
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Equality of multiplication tables, ignoring labels.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Greedy generating set: repeatedly adds the element of largest order
    /// (smallest index on ties) outside the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut size = 1;
        for g in by_order {
            if size == self.order {
                break;
            }
            if !span[g] {
                gens.push(g);
                let members = closure(self, &gens);
                size = members.len();
                span = vec![false; self.order];
                for m in members {
                    span[m] = true;
                }
            }
        }
        gens
    }

    /// Direct product; `(g, h)` has index `g + |G| * h`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.order;
        FiniteGroup::from_fn(
            n * b.order,
            |x, y| a.mul(x % n, y % n) + n * b.mul(x / n, y / n),
            match (&a.labels, &b.labels) {
                (None, None) => None,
                _ => Some(
                    (0..n * b.order)
                        .map(|x| format!("({},{})", a.label(x % n), b.label(x / n)))
                        .collect(),
                ),
            },
        )
    }
}

/// Closure of `gens` under multiplication, in breadth-first order over words in
/// the generators (generator index breaks ties).
pub fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut order = vec![0];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    order
}

/// A subgroup as a sorted member list of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: GroupRef,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    /// Validates closure under multiplication and inverses.
    pub fn new(parent: GroupRef, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            if m >= parent.order() {
                return Err(Error::NotSubgroup(format!("element {m} out of range")));
            }
            mask[m] = true;
        }
        if !mask[0] {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for &a in &members {
            if !mask[parent.inv(a)] {
                return Err(Error::NotSubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in &members {
                if !mask[parent.mul(a, b)] {
                    return Err(Error::NotSubgroup(format!("not closed: {a}*{b}")));
                }
            }
        }
        Ok(Self {
            parent,
            members,
            mask,
        })
    }

    pub fn generated_by(parent: &GroupRef, gens: &[usize]) -> Self {
        let mut members = closure(parent, gens);
        members.sort_unstable();
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        Self {
            parent: parent.clone(),
            members,
            mask,
        }
    }

    pub fn whole(parent: &GroupRef) -> Self {
        Self::generated_by(parent, &(0..parent.order()).collect::<Vec<_>>())
    }

    pub fn trivial(parent: &GroupRef) -> Self {
        Self::generated_by(parent, &[])
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.elements()
            .all(|x| self.members.iter().all(|&n| self.mask[g.conj(n, x)]))
    }

    /// The subgroup as a group in its own right (member `i` of the sorted list
    /// becomes element `i`), with the inclusion homomorphism.
    pub fn to_group(&self) -> (GroupRef, GroupHom) {
        let g = &self.parent;
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &m) in self.members.iter().enumerate() {
            pos[m] = i;
        }
        let labels = g
            .labels()
            .map(|l| self.members.iter().map(|&m| l[m].clone()).collect());
        let n = self.members.len();
        let sub = Arc::new(FiniteGroup::from_fn(
            n,
            |a, b| pos[g.mul(self.members[a], self.members[b])],
            labels,
        ));
        let hom = GroupHom {
            source: sub.clone(),
            target: g.clone(),
            image: self.members.clone(),
        };
        (sub, hom)
    }
}

/// A homomorphism given by its image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: GroupRef,
    target: GroupRef,
    image: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: GroupRef, target: GroupRef, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::InvalidSpec("image length differs from source order".into()));
        }
        if image.iter().any(|&x| x >= target.order()) {
            return Err(Error::InvalidSpec("image entry out of range".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        Ok(Self {
            source,
            target,
            image,
        })
    }

    pub(crate) fn new_unchecked(source: GroupRef, target: GroupRef, image: Vec<usize>) -> Self {
        debug_assert_eq!(image.len(), source.order());
        Self {
            source,
            target,
            image,
        }
    }

    pub fn identity(g: &GroupRef) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), g.elements().collect())
    }

    pub fn trivial(source: &GroupRef, target: &GroupRef) -> Self {
        Self::new_unchecked(source.clone(), target.clone(), vec![0; source.order()])
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn compose(&self, then: &GroupHom) -> GroupHom {
        assert_eq!(self.target.order(), then.source.order());
        Self::new_unchecked(
            self.source.clone(),
            then.target.clone(),
            self.image.iter().map(|&x| then.apply(x)).collect(),
        )
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> = self.source.elements().filter(|&x| self.image[x] == 0).collect();
        Subgroup::generated_by(&self.source, &members)
    }

    pub fn image_subgroup(&self) -> Subgroup {
        Subgroup::generated_by(&self.target, &self.image)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        self.image.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    /// Exhaustive check of the homomorphism property.
    pub fn is_homomorphism(&self) -> bool {
        self.image[0] == 0
            && self.source.elements().all(|a| {
                self.source
                    .elements()
                    .all(|b| self.image[self.source.mul(a, b)] == self.target.mul(self.image[a], self.image[b]))
            })
    }
}

pub fn commutator_subgroup(g: &GroupRef) -> Subgroup {
    let mut comms: Vec<usize> = Vec::new();
    let mut seen = vec![false; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            let c = g.commutator(a, b);
            if !seen[c] {
                seen[c] = true;
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    Subgroup::generated_by(g, &comms)
}

pub fn center(g: &GroupRef) -> Subgroup {
    let members: Vec<usize> = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup::generated_by(g, &members)
}

pub fn is_perfect(g: &GroupRef) -> bool {
    commutator_subgroup(g).is_whole()
}

/// Quotient by a normal subgroup. Cosets are ordered by their minimal element
/// index, which is also the coset representative.
pub fn quotient(n: &Subgroup) -> Result<(GroupRef, GroupHom)> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = n.parent().clone();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == usize::MAX {
            let id = reps.len();
            reps.push(x);
            for &m in n.members() {
                coset_of[g.mul(x, m)] = id;
            }
        }
    }
    let labels = g.labels().map(|l| reps.iter().map(|&r| format!("{}N", l[r])).collect());
    let q = Arc::new(FiniteGroup::from_fn(
        reps.len(),
        |a, b| coset_of[g.mul(reps[a], reps[b])],
        labels,
    ));
    let proj = GroupHom::new_unchecked(g, q.clone(), coset_of);
    Ok((q, proj))
}

/// Explicit isomorphism between an abelian group given by a table and its
/// invariant-factor form.
#[derive(Debug, Clone)]
pub struct AbelianDecomposition {
    pub group: FiniteAbelian,
    /// Element index -> residue tuple.
    pub coords: Vec<Vec<u64>>,
    /// `FiniteAbelian` index -> element index.
    pub element_of: Vec<usize>,
}

/// Decomposes an abelian group through the Smith form of its relation
/// lattice: relations come from a breadth-first spanning tree over a
/// generating set.
pub fn decompose_abelian(g: &FiniteGroup) -> Result<AbelianDecomposition> {
    debug_assert!(g.is_abelian());
    let n = g.order();
    let gens = g.generators();
    let k = gens.len();
    if k == 0 {
        return Ok(AbelianDecomposition {
            group: FiniteAbelian::trivial(),
            coords: vec![vec![]],
            element_of: vec![0],
        });
    }
    let mut word: Vec<Option<Vec<i64>>> = vec![None; n];
    word[0] = Some(vec![0; k]);
    let mut queue = VecDeque::from([0]);
    let mut lattice = LatticeBuilder::new(k, n as i64);
    while let Some(x) = queue.pop_front() {
        let wx = word[x].clone().unwrap();
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let mut wy = wx.clone();
            wy[i] += 1;
            match &word[y] {
                None => {
                    word[y] = Some(wy);
                    queue.push_back(y);
                }
                Some(existing) => {
                    let rel: Vec<i64> = wy.iter().zip(existing).map(|(a, b)| a - b).collect();
                    lattice.insert(&rel);
                }
            }
        }
    }
    let snf = smith_normal_form_uncapped(&lattice.generators())?;
    let keep: Vec<usize> = (0..k).filter(|&j| snf.diagonal[j] != 1).collect();
    let group = FiniteAbelian::new(keep.iter().map(|&j| snf.diagonal[j] as u64).collect())?;
    let coords: Vec<Vec<u64>> = word
        .iter()
        .map(|w| {
            let w = w.as_ref().unwrap();
            keep.iter()
                .map(|&j| {
                    let d = snf.diagonal[j];
                    let s: i64 = w
                        .iter()
                        .enumerate()
                        .map(|(i, &wi)| (wi * snf.right[i][j].rem_euclid(d)).rem_euclid(d))
                        .sum();
                    s.rem_euclid(d) as u64
                })
                .collect()
        })
        .collect();
    let mut element_of = vec![usize::MAX; n];
    for (x, c) in coords.iter().enumerate() {
        element_of[group.index_of(c)] = x;
    }
    if element_of.contains(&usize::MAX) || group.order() as usize != n {
        return Err(Error::Inconsistency("abelian decomposition is not bijective".into()));
    }
    Ok(AbelianDecomposition {
        group,
        coords,
        element_of,
    })
}

/// Abelianisation `G -> G/[G,G]` in invariant-factor form. The returned
/// homomorphism lands in [`FiniteAbelian::to_group`] of the result.
pub fn abelianization(g: &GroupRef) -> Result<(FiniteAbelian, GroupHom)> {
    let derived = commutator_subgroup(g);
    let (q, proj) = quotient(&derived)?;
    let dec = decompose_abelian(&q)?;
    let target = Arc::new(dec.group.to_group());
    let image = g
        .elements()
        .map(|x| dec.group.index_of(&dec.coords[proj.apply(x)]))
        .collect();
    Ok((dec.group.clone(), GroupHom::new_unchecked(g.clone(), target, image)))
}

/// Smallest `n` with every element of `[G,G]` a product of `n` commutators.
pub fn commutator_width(g: &GroupRef) -> usize {
    let n = g.order();
    let mut comm = vec![false; n];
    for a in g.elements() {
        for b in g.elements() {
            comm[g.commutator(a, b)] = true;
        }
    }
    let derived = commutator_subgroup(g).order();
    if derived == 1 {
        return 0;
    }
    let comm_list: Vec<usize> = (0..n).filter(|&x| comm[x]).collect();
    let mut current = comm.clone();
    let mut width = 1;
    while current.iter().filter(|&&b| b).count() < derived {
        let mut next = current.clone();
        for x in (0..n).filter(|&x| current[x]) {
            for &c in &comm_list {
                next[g.mul(x, c)] = true;
            }
        }
        current = next;
        width += 1;
    }
    width
}

impl FiniteAbelian {
    /// Table of the group with elements indexed as in [`FiniteAbelian::index_of`].
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order() as usize;
        FiniteGroup::from_fn(
            n,
            |a, b| self.index_of(&self.add(&self.element(a), &self.element(b))),
            None,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(s: &str) -> GroupRef {
        Arc::new(Catalog::parse(s).unwrap().build(&Limits::default()).unwrap())
    }

    #[test]
    fn cyclic_convention() {
        let g = cat("cyclic 4");
        assert_eq!(g.order(), 4);
        assert_eq!(g.mul(1, 1), 2);
    }

    #[test]
    fn relabels_identity() {
        // Z/2 with identity at index 1
        let g = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]], &Limits::default()).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn rejects_non_associative() {
        // a Latin square with identity that is not associative (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(t, &Limits::default()),
            Err(Error::NotAssociative(..))
        ));
    }

    #[test]
    fn derived_and_center() {
        assert_eq!(commutator_subgroup(&cat("cyclic 6")).order(), 1);
        assert_eq!(commutator_subgroup(&cat("symmetric 3")).order(), 3);
        assert_eq!(commutator_subgroup(&cat("quaternion8")).order(), 2);
        assert_eq!(center(&cat("cyclic 5")).order(), 5);
        assert_eq!(center(&cat("symmetric 3")).order(), 1);
        assert_eq!(center(&cat("quaternion8")).order(), 2);
    }

    #[test]
    fn quotients() {
        let s3 = cat("symmetric 3");
        let (q, p) = quotient(&Subgroup::trivial(&s3)).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(p.images(), &[0, 1, 2, 3, 4, 5]);
        let (q, _) = quotient(&commutator_subgroup(&s3)).unwrap();
        assert_eq!(q.order(), 2);
        let q8 = cat("quaternion8");
        let (q, _) = quotient(&center(&q8)).unwrap();
        assert_eq!(q.order(), 4);
        assert!((1..4).all(|x| q.element_order(x) == 2));
        // a non-normal subgroup
        let h = Subgroup::generated_by(&s3, &[s3.generators().into_iter().find(|&x| s3.element_order(x) == 2).unwrap()]);
        assert_eq!(quotient(&h).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelianization(&cat("cyclic 6")).unwrap().0.factors(), &[6]);
        assert_eq!(abelianization(&cat("symmetric 4")).unwrap().0.factors(), &[2]);
        assert_eq!(abelianization(&cat("quaternion8")).unwrap().0.factors(), &[2, 2]);
        assert!(abelianization(&cat("alternating 5")).unwrap().0.is_trivial());
        let (a, hom) = abelianization(&cat("cyclic 2 x cyclic 4")).unwrap();
        assert_eq!(a.factors(), &[2, 4]);
        assert!(hom.is_homomorphism());
        assert!(hom.is_bijective());
    }

    #[test]
    fn widths_and_perfection() {
        assert_eq!(commutator_width(&cat("cyclic 4")), 0);
        assert_eq!(commutator_width(&cat("symmetric 3")), 1);
        assert_eq!(commutator_width(&cat("alternating 5")), 1);
        assert!(is_perfect(&cat("alternating 5")));
        assert!(!is_perfect(&cat("cyclic 2")));
        assert!(!is_perfect(&cat("symmetric 5")));
        assert!(is_perfect(&cat("trivial")));
    }

    #[test]
    fn subgroup_validation() {
        let g = cat("cyclic 4");
        assert!(Subgroup::new(g.clone(), vec![0, 2]).is_ok());
        assert!(Subgroup::new(g.clone(), vec![0, 1]).is_err());
        assert!(Subgroup::new(g, vec![2]).is_err());
    }
}
