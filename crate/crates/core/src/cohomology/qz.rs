//! `H^2(G, Q/Z)` as `H^2(G, Z/N)` modulo the image of the Bockstein of
//! `0 -> Z/N -> Z/N^2 -> Z/N -> 0`, for `N` a multiple of `|G|`.

use serde::Serialize;

use super::{second_cohomology, Cocycle2, CohomologyGroup};
use crate::abelian::{quotient, AbelianQuotient, FiniteAbelian};
use crate::error::{Error, Result};
use crate::group::{abelianization, is_perfect, GroupRef};

#[derive(Debug, Clone)]
pub struct QzCohomology {
    modulus: u64,
    h2: CohomologyGroup,
    quotient: AbelianQuotient,
    basis: Vec<Cocycle2>,
}

impl QzCohomology {
    /// The group `H^2(G, Q/Z)`, isomorphic to the Schur multiplier.
    pub fn invariants(&self) -> &FiniteAbelian {
        &self.quotient.quotient
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn h2(&self) -> &CohomologyGroup {
        &self.h2
    }

    /// `Z/N`-valued cocycles representing the generators.
    pub fn basis(&self) -> &[Cocycle2] {
        &self.basis
    }

    /// `Z/N`-valued cocycle of the class with the given coordinates.
    pub fn representative(&self, coords: &[u64]) -> Cocycle2 {
        let inv = self.h2.invariants();
        let mut acc = inv.zero();
        for (&c, sec) in coords.iter().zip(&self.quotient.section) {
            acc = inv.add(&acc, &inv.scale(sec, c));
        }
        self.h2.representative(&acc)
    }

    pub fn class_of(&self, f: &Cocycle2) -> Result<Vec<u64>> {
        Ok(self.quotient.project(&self.h2.class_of(f)?))
    }
}

pub fn qz_cohomology(g: &GroupRef) -> Result<QzCohomology> {
    qz_cohomology_with_modulus(g, g.order() as u64)
}

pub fn qz_cohomology_with_modulus(g: &GroupRef, modulus: u64) -> Result<QzCohomology> {
    if !modulus.is_multiple_of(g.order() as u64) {
        return Err(Error::Precondition(format!(
            "modulus {modulus} is not a multiple of |G| = {}",
            g.order()
        )));
    }
    let n = modulus;
    let coeff = if n == 1 {
        FiniteAbelian::trivial()
    } else {
        FiniteAbelian::cyclic(n)
    };
    let h2 = second_cohomology(g, &coeff)?;
    let (ab, to_ab) = abelianization(g)?;
    let mut relations = Vec::with_capacity(ab.rank());
    if n > 1 {
        for (i, &d) in ab.factors().iter().enumerate() {
            // phi(x) = coord_i(x) * N / d, lifted to [0, N)
            let phi: Vec<u64> = g
                .elements()
                .map(|x| ab.element(to_ab.apply(x))[i] * (n / d))
                .collect();
            let order = g.order();
            let mut values = Vec::with_capacity(order * order);
            for x in 0..order {
                for y in 0..order {
                    let s = phi[x] + phi[y] - phi[g.mul(x, y)];
                    debug_assert_eq!(s % n, 0);
                    values.push(vec![(s / n) % n]);
                }
            }
            let beta = Cocycle2::from_flat(g.clone(), coeff.clone(), values);
            relations.push(h2.class_of(&beta)?.iter().map(|&c| c as i64).collect());
        }
    }
    let quotient = quotient(h2.invariants(), &relations)?;
    let basis = quotient.section.iter().map(|c| h2.representative(c)).collect();
    Ok(QzCohomology {
        modulus,
        h2,
        quotient,
        basis,
    })
}

/// `H_2(G, Z)`, read off as the dual of `H^2(G, Q/Z)`.
pub fn schur_multiplier(g: &GroupRef) -> Result<FiniteAbelian> {
    Ok(qz_cohomology(g)?.invariants().clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub h2_order: u64,
    pub hom_order: u64,
    pub schur_multiplier: FiniteAbelian,
    pub holds: bool,
}

/// For perfect `G`, compares `|H^2(G, A)|` with `|Hom(H_2(G), A)|`.
pub fn perfect_duality_check(g: &GroupRef, a: &FiniteAbelian) -> Result<DualityReport> {
    if !is_perfect(g) {
        return Err(Error::NotPerfect);
    }
    let h2_order = second_cohomology(g, a)?.order();
    let m = schur_multiplier(g)?;
    let hom_order = m.hom_count(a);
    Ok(DualityReport {
        h2_order,
        hom_order,
        schur_multiplier: m,
        holds: h2_order == hom_order,
    })
}
