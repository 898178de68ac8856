//! Second cohomology with trivial coefficients, central extensions and the
//! Schur multiplier.
//!
//! Cochains are normalized and cocycles satisfy
//! `f(g, h) + f(gh, k) = f(h, k) + f(g, hk)`. The solver works prime power by
//! prime power in spanning-tree gauge coordinates (see `gauge`), and the
//! components are glued with CRT idempotents.

mod extension;
mod gauge;
mod qz;
mod solver;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::abelian::{factorize, FiniteAbelian};
use crate::error::{Error, Result};
use crate::group::{GroupRef, GroupSpec, Limits, Subgroup};
use crate::modular::{ext_gcd, PrimePowerRing};
use gauge::Gauge;
use solver::PrimeSolve;

pub use extension::{cocycle_from_extension, extension_from_cocycle, CentralExtension};
pub use qz::{
    perfect_duality_check, qz_cohomology, qz_cohomology_with_modulus, schur_multiplier, DualityReport, QzCohomology,
};

/// A normalized 2-cocycle with values in a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    group: GroupRef,
    coefficients: FiniteAbelian,
    /// Row-major `n x n` table of coefficient tuples.
    values: Vec<Vec<u64>>,
}

impl Cocycle2 {
    /// Validates normalization and the cocycle identity on every triple.
    pub fn new(group: GroupRef, coefficients: FiniteAbelian, values: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        let n = group.order();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCocycle("table shape does not match the group order".into()));
        }
        let rank = coefficients.rank();
        let mut flat = Vec::with_capacity(n * n);
        for row in values {
            for v in row {
                if v.len() != rank {
                    return Err(Error::InvalidCocycle("value tuple has the wrong length".into()));
                }
                let reduced = coefficients.reduce(&v.iter().map(|&x| x as i64).collect::<Vec<_>>());
                flat.push(reduced);
            }
        }
        let c = Self {
            group,
            coefficients,
            values: flat,
        };
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn from_flat(group: GroupRef, coefficients: FiniteAbelian, values: Vec<Vec<u64>>) -> Self {
        debug_assert_eq!(values.len(), group.order() * group.order());
        Self {
            group,
            coefficients,
            values,
        }
    }

    pub fn zero(group: &GroupRef, coefficients: &FiniteAbelian) -> Self {
        let n = group.order();
        Self::from_flat(group.clone(), coefficients.clone(), vec![coefficients.zero(); n * n])
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let a = &self.coefficients;
        let zero = a.zero();
        for x in g.elements() {
            if self.value(0, x) != zero.as_slice() || self.value(x, 0) != zero.as_slice() {
                return Err(Error::InvalidCocycle(format!("not normalized at element {x}")));
            }
        }
        for x in 1..g.order() {
            for y in 1..g.order() {
                let xy = g.mul(x, y);
                let fxy = self.value(x, y);
                for z in 1..g.order() {
                    let lhs = a.add(fxy, self.value(xy, z));
                    let rhs = a.add(self.value(y, z), self.value(x, g.mul(y, z)));
                    if lhs != rhs {
                        return Err(Error::InvalidCocycle(format!("identity fails at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn coefficients(&self) -> &FiniteAbelian {
        &self.coefficients
    }

    #[inline]
    pub fn value(&self, g: usize, h: usize) -> &[u64] {
        &self.values[g * self.group.order() + h]
    }

    pub fn table(&self) -> Vec<Vec<Vec<u64>>> {
        self.values
            .chunks(self.group.order())
            .map(<[Vec<u64>]>::to_vec)
            .collect()
    }

    pub fn add(&self, other: &Cocycle2) -> Cocycle2 {
        let a = &self.coefficients;
        let values = self.values.iter().zip(&other.values).map(|(x, y)| a.add(x, y)).collect();
        Self::from_flat(self.group.clone(), a.clone(), values)
    }

    pub fn scale(&self, k: u64) -> Cocycle2 {
        let a = &self.coefficients;
        let values = self.values.iter().map(|x| a.scale(x, k)).collect();
        Self::from_flat(self.group.clone(), a.clone(), values)
    }

    /// Pullback along the inclusion of a subgroup.
    pub fn restrict(&self, s: &Subgroup) -> Cocycle2 {
        let (sub, incl) = s.to_group();
        self.pullback(&sub, incl.images())
    }

    /// `f'(a, b) = f(phi(a), phi(b))` for a homomorphism `phi: source -> G`
    /// given by its image array.
    pub fn pullback(&self, source: &GroupRef, phi: &[usize]) -> Cocycle2 {
        let n = source.order();
        let mut values = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                values.push(self.value(phi[a], phi[b]).to_vec());
            }
        }
        Self::from_flat(source.clone(), self.coefficients.clone(), values)
    }

    /// Pushforward along a homomorphism of coefficient groups, given as the
    /// images of the generators of the source factors.
    pub fn pushforward(&self, target: &FiniteAbelian, gen_images: &[Vec<u64>]) -> Cocycle2 {
        let values = self
            .values
            .iter()
            .map(|v| {
                v.iter().zip(gen_images).fold(target.zero(), |acc, (&c, img)| target.add(&acc, &target.scale(img, c)))
            })
            .collect();
        Self::from_flat(self.group.clone(), target.clone(), values)
    }

    /// `dt(x, y) = t(x) + t(y) - t(xy)`
    pub fn coboundary(group: &GroupRef, coefficients: &FiniteAbelian, t: &[Vec<u64>]) -> Cocycle2 {
        let a = coefficients;
        let n = group.order();
        let mut values = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                values.push(a.add(&a.add(&t[x], &t[y]), &a.neg(&t[group.mul(x, y)])));
            }
        }
        Self::from_flat(group.clone(), a.clone(), values)
    }

    /// Values of factor `i` reduced modulo `q`.
    fn component(&self, i: usize, q: u64) -> Vec<u64> {
        self.values.iter().map(|v| v[i] % q).collect()
    }

    pub fn to_document(&self) -> CocycleDocument {
        CocycleDocument {
            group: GroupSpec::Cayley {
                cayley: self.group.table_rows(),
            },
            coefficients: self.coefficients.factors().to_vec(),
            values: self.table(),
        }
    }
}

/// Interchange format for cocycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleDocument {
    pub group: GroupSpec,
    pub coefficients: Vec<u64>,
    pub values: Vec<Vec<Vec<u64>>>,
}

impl CocycleDocument {
    pub fn into_cocycle(self, limits: &Limits) -> Result<Cocycle2> {
        let group = Arc::new(self.group.build(limits)?);
        let coefficients = FiniteAbelian::new(self.coefficients)?;
        Cocycle2::new(group, coefficients, self.values)
    }
}

/// One `Z/p^k` summand of one coefficient factor.
#[derive(Debug, Clone)]
struct Component {
    factor: usize,
    p: u64,
    /// Idempotent of `Z/d` (d the factor) projecting onto the `p`-part.
    idempotent: u64,
    solve: PrimeSolve,
}

/// `H^2(G, A)` in invariant-factor form with canonical basis cocycles.
#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    group: GroupRef,
    coefficients: FiniteAbelian,
    invariants: FiniteAbelian,
    basis: Vec<Cocycle2>,
    gauge: Gauge,
    components: Vec<Component>,
    /// For each invariant factor, the `(component, local index)` pairs whose
    /// generators add up to its basis class.
    assembly: Vec<Vec<(usize, usize)>>,
}

pub fn second_cohomology(g: &GroupRef, a: &FiniteAbelian) -> Result<CohomologyGroup> {
    second_cohomology_with_limits(g, a, &Limits::default())
}

pub fn second_cohomology_with_limits(g: &GroupRef, a: &FiniteAbelian, limits: &Limits) -> Result<CohomologyGroup> {
    if g.order() > limits.cohomology_max_order {
        return Err(Error::OrderCap {
            order: g.order(),
            cap: limits.cohomology_max_order,
        });
    }
    let gauge = Gauge::new(g);
    let mut components = Vec::new();
    for (i, &d) in a.factors().iter().enumerate() {
        for (p, k) in factorize(d) {
            let ring = PrimePowerRing::new(p, k);
            let cofactor = d / ring.q;
            let (_, inv, _) = ext_gcd((cofactor % ring.q) as i64, ring.q as i64);
            let idempotent = (cofactor as u128 * inv.rem_euclid(ring.q as i64) as u128 % d as u128) as u64;
            components.push(Component {
                factor: i,
                p,
                idempotent,
                solve: PrimeSolve::new(g, &gauge, ring)?,
            });
        }
    }

    // Invariant factor j (largest first) takes the j-th largest p-power
    // summand for every prime p.
    let mut primes: Vec<u64> = components.iter().map(|c| c.p).collect();
    primes.sort_unstable();
    primes.dedup();
    let mut by_prime: Vec<Vec<(u32, usize, usize)>> = Vec::new();
    for &p in &primes {
        let mut parts: Vec<(u32, usize, usize)> = components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.p == p)
            .flat_map(|(ci, c)| c.solve.exps.iter().enumerate().map(move |(j, &e)| (e, ci, j)))
            .collect();
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        by_prime.push(parts);
    }
    let rank = by_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut assembly: Vec<Vec<(usize, usize)>> = Vec::with_capacity(rank);
    let mut factors = Vec::with_capacity(rank);
    for j in 0..rank {
        let mut parts = Vec::new();
        let mut order = 1u64;
        for (pi, list) in by_prime.iter().enumerate() {
            if let Some(&(e, ci, lj)) = list.get(j) {
                order *= primes[pi].pow(e);
                parts.push((ci, lj));
            }
        }
        assembly.push(parts);
        factors.push(order);
    }
    assembly.reverse();
    factors.reverse();
    let invariants = FiniteAbelian::new(factors)?;
    let mut h = CohomologyGroup {
        group: g.clone(),
        coefficients: a.clone(),
        invariants,
        basis: Vec::new(),
        gauge,
        components,
        assembly,
    };
    h.basis = (0..h.invariants.rank())
        .map(|j| {
            let mut e = vec![0; h.invariants.rank()];
            e[j] = 1;
            h.representative(&e)
        })
        .collect();
    Ok(h)
}

impl CohomologyGroup {
    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn coefficients(&self) -> &FiniteAbelian {
        &self.coefficients
    }

    pub fn invariants(&self) -> &FiniteAbelian {
        &self.invariants
    }

    pub fn order(&self) -> u64 {
        self.invariants.order()
    }

    pub fn basis(&self) -> &[Cocycle2] {
        &self.basis
    }

    fn check_same_setting(&self, f: &Cocycle2) -> Result<()> {
        if !f.group.same_table(&self.group) {
            return Err(Error::InvalidCocycle("cocycle lives on a different group".into()));
        }
        if f.coefficients != self.coefficients {
            return Err(Error::InvalidCocycle("cocycle has different coefficients".into()));
        }
        Ok(())
    }

    /// Per-component `(t0, z)` gauge split of a cocycle.
    fn split(&self, f: &Cocycle2) -> Vec<(Vec<u64>, Vec<u64>)> {
        self.components
            .iter()
            .map(|c| {
                let ring = &c.solve.ring;
                let table = f.component(c.factor, ring.q);
                self.gauge.fix(&self.group, ring, &table)
            })
            .collect()
    }

    /// Coordinates of the class of `f` in the basis.
    pub fn class_of(&self, f: &Cocycle2) -> Result<Vec<u64>> {
        self.check_same_setting(f)?;
        let local: Vec<Vec<u64>> = self
            .split(f)
            .iter()
            .zip(&self.components)
            .map(|((_, z), c)| c.solve.class_of(z))
            .collect::<Result<_>>()?;
        Ok(self
            .assembly
            .iter()
            .zip(self.invariants.factors())
            .map(|(parts, &d)| {
                // CRT over the prime-power parts of d
                let mut x = 0u128;
                let mut m = 1u128;
                for &(ci, lj) in parts {
                    let c = &self.components[ci];
                    let pe = c.solve.ring.p.pow(c.solve.exps[lj]) as u128;
                    let r = local[ci][lj] as u128 % pe;
                    // solve x + m t = r mod pe
                    let (_, inv, _) = ext_gcd((m % pe) as i64, pe as i64);
                    let t = ((r + pe - x % pe) % pe) * (inv.rem_euclid(pe as i64) as u128) % pe;
                    x += m * t;
                    m *= pe;
                }
                debug_assert_eq!(m, d as u128);
                (x % d as u128) as u64
            })
            .collect())
    }

    pub fn is_coboundary(&self, f: &Cocycle2) -> Result<bool> {
        Ok(self.class_of(f)?.iter().all(|&c| c == 0))
    }

    /// A normalized cochain `t` with `f = dt`, if `f` is a coboundary.
    pub fn coboundary_witness(&self, f: &Cocycle2) -> Result<Option<Vec<Vec<u64>>>> {
        self.check_same_setting(f)?;
        let n = self.group.order();
        let a = &self.coefficients;
        let mut t = vec![a.zero(); n];
        for ((t0, z), c) in self.split(f).iter().zip(&self.components) {
            let ring = &c.solve.ring;
            let Some(combo) = c.solve.coboundary_combination(z) else {
                return Ok(None);
            };
            let d = a.factors()[c.factor];
            for (x, tx) in t.iter_mut().enumerate() {
                let mut v = t0[x] as i64;
                for (s, &l) in combo.iter().enumerate() {
                    v += l as i64 * self.gauge.words[x][s];
                }
                let v = ring.reduce(v) as u128;
                tx[c.factor] = ((tx[c.factor] as u128 + v * c.idempotent as u128) % d as u128) as u64;
            }
        }
        Ok(Some(t))
    }

    /// Canonical cocycle of the class with the given coordinates: on every
    /// prime-power component it is the lexicographically minimal gauge-fixed
    /// representative.
    pub fn representative(&self, coords: &[u64]) -> Cocycle2 {
        let n = self.group.order();
        let a = &self.coefficients;
        let mut local: Vec<Vec<u64>> = self.components.iter().map(|c| vec![0; c.solve.exps.len()]).collect();
        for (parts, &x) in self.assembly.iter().zip(coords) {
            for &(ci, lj) in parts {
                let c = &self.components[ci];
                local[ci][lj] = x % c.solve.ring.p.pow(c.solve.exps[lj]);
            }
        }
        let mut values = vec![a.zero(); n * n];
        for (c, coords) in self.components.iter().zip(&local) {
            let ring = &c.solve.ring;
            let z = c.solve.representative(coords);
            let table = self.gauge.expand(&self.group, ring, &z);
            let d = a.factors()[c.factor] as u128;
            for (v, &x) in values.iter_mut().zip(&table) {
                if x != 0 {
                    v[c.factor] = ((v[c.factor] as u128 + x as u128 * c.idempotent as u128) % d) as u64;
                }
            }
        }
        Cocycle2::from_flat(self.group.clone(), a.clone(), values)
    }

    /// Every class, in the order of [`FiniteAbelian::elements`].
    pub fn classes(&self) -> impl Iterator<Item = (Vec<u64>, Cocycle2)> + '_ {
        self.invariants.elements().map(|c| {
            let f = self.representative(&c);
            (c, f)
        })
    }
}

/// Matrix of the restriction `H^2(G, A) -> H^2(S, A)` in the two bases: row `i`
/// holds the coordinates of the restricted `i`-th basis class.
#[derive(Debug, Clone)]
pub struct RestrictionMap {
    pub target: CohomologyGroup,
    pub rows: Vec<Vec<u64>>,
}

impl RestrictionMap {
    /// Image of a class given in source coordinates.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        let inv = self.target.invariants();
        let mut out = inv.zero();
        for (&c, row) in x.iter().zip(&self.rows) {
            out = inv.add(&out, &inv.scale(row, c));
        }
        out
    }

    pub fn image_order(&self) -> Result<u64> {
        let sub = crate::abelian::subgroup_generated(self.target.invariants(), &self.rows)?;
        Ok(sub.subgroup.order())
    }
}

pub fn restriction_map(h2: &CohomologyGroup, s: &Subgroup) -> Result<RestrictionMap> {
    if !s.parent().same_table(&h2.group) {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    let (sub, _) = s.to_group();
    let target = second_cohomology(&sub, &h2.coefficients)?;
    let rows = h2
        .basis
        .iter()
        .map(|f| target.class_of(&f.restrict(s)))
        .collect::<Result<_>>()?;
    Ok(RestrictionMap { target, rows })
}

#[cfg(test)]
mod tests;
