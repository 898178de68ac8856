//! `A^un`, the true commutator `[G,G]^true`, its characterizing properties and
//! the stacky abelianization `[G / [G,G]^true]`.
//!
//! `A^un` is computed dually: it is the image of the restriction
//! `H^2(G, Q/Z) -> H^2([G,G], Q/Z)`, a group of characters of `H_2([G,G])`.

use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::abelian::{subgroup_generated, FiniteAbelian};
use crate::cohomology::{
    extension_from_cocycle, qz_cohomology, qz_cohomology_with_modulus, second_cohomology, CentralExtension, Cocycle2,
};
use crate::crossed::{first_iso, quotient_groupoid, stable_from_lift, QuotientGroupoid, StableBracket};
use crate::error::{Error, Result};
use crate::group::{
    abelianization, commutator_subgroup, extend_to_hom, find_isomorphism_with, is_perfect, FiniteGroup, GroupHom,
    GroupRef, Subgroup,
};
use crate::report::{tuples, Check, Report};

/// `A^un` with a basis of characters of `H_2([G,G])`.
#[derive(Debug, Clone)]
pub struct Aun {
    pub group: FiniteAbelian,
    /// `Z/N`-valued cocycles on `[G,G]` (with `N = |G|`) representing the
    /// basis characters; `characters[j]` has order `group.factors()[j]`.
    pub characters: Vec<Cocycle2>,
    /// Coordinates of the characters in `H^2([G,G], Q/Z)`.
    pub coordinates: Vec<Vec<u64>>,
    pub schur_multiplier_of_derived: FiniteAbelian,
}

#[derive(Debug, Clone)]
pub struct TrueCommutatorResult {
    pub group: GroupRef,
    pub base: Subgroup,
    pub base_group: GroupRef,
    /// Inclusion of `base_group` into `group`.
    pub inclusion: GroupHom,
    pub aun: Aun,
    pub cover: Option<CentralExtension>,
    /// Set when `[G,G]` is not perfect and `A^un` is nontrivial.
    pub requires_splitting_choice: bool,
}

impl TrueCommutatorResult {
    /// `cover -> [G,G] -> G`
    pub fn delta(&self) -> Option<GroupHom> {
        self.cover
            .as_ref()
            .map(|c| c.projection().compose(&self.inclusion))
    }
}

pub fn aun(g: &GroupRef) -> Result<Aun> {
    let derived = commutator_subgroup(g);
    let (dg, incl) = derived.to_group();
    aun_inner(g, &dg, &incl)
}

fn aun_inner(g: &GroupRef, dg: &GroupRef, incl: &GroupHom) -> Result<Aun> {
    let n = g.order() as u64;
    let qz_g = qz_cohomology(g)?;
    let qz_d = qz_cohomology_with_modulus(dg, n)?;
    let rows = qz_g
        .basis()
        .iter()
        .map(|f| qz_d.class_of(&f.pullback(dg, incl.images())))
        .collect::<Result<Vec<_>>>()?;
    let image = subgroup_generated(qz_d.invariants(), &rows)?;
    let characters = image.basis.iter().map(|c| qz_d.representative(c)).collect();
    Ok(Aun {
        group: image.subgroup,
        characters,
        coordinates: image.basis,
        schur_multiplier_of_derived: qz_d.invariants().clone(),
    })
}

pub fn true_commutator(g: &GroupRef) -> Result<TrueCommutatorResult> {
    let derived = commutator_subgroup(g);
    let (dg, incl) = derived.to_group();
    let aun = aun_inner(g, &dg, &incl)?;
    let n = g.order() as u64;
    let mut requires_splitting_choice = false;
    let cover = if aun.group.is_trivial() {
        Some(extension_from_cocycle(&Cocycle2::zero(&dg, &aun.group)))
    } else if is_perfect(&dg) {
        let qz_d = qz_cohomology_with_modulus(&dg, n)?;
        let a = &aun.group;
        let mut columns = Vec::with_capacity(a.rank());
        for (j, &o) in a.factors().iter().enumerate() {
            let h = second_cohomology(&dg, &FiniteAbelian::cyclic(o))?;
            let target = FiniteAbelian::cyclic(n);
            let push = vec![vec![n / o]];
            let found = h.classes().find_map(|(_, f)| {
                let pushed = f.pushforward(&target, &push);
                match qz_d.class_of(&pushed) {
                    Ok(c) if c == aun.coordinates[j] => Some(f),
                    _ => None,
                }
            });
            let f = found.ok_or_else(|| {
                Error::Inconsistency(format!("no class of H^2([G,G], Z/{o}) realizes character {j}"))
            })?;
            columns.push(f);
        }
        let m = dg.order();
        let mut values = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                values.push(columns.iter().map(|f| f.value(x, y)[0]).collect());
            }
        }
        let f = Cocycle2::from_flat(dg.clone(), a.clone(), values);
        Some(extension_from_cocycle(&f))
    } else {
        requires_splitting_choice = true;
        None
    };
    if let Some(c) = &cover {
        if !aun.group.is_trivial() && !is_perfect(c.total()) {
            return Err(Error::Inconsistency("true commutator is not perfect".into()));
        }
    }
    Ok(TrueCommutatorResult {
        group: g.clone(),
        base: derived,
        base_group: dg,
        inclusion: incl,
        aun,
        cover,
        requires_splitting_choice,
    })
}

/// Outcome of pulling one basis class back to the cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P1Entry {
    pub coefficients: FiniteAbelian,
    pub class: Vec<u64>,
    pub trivial_on_cover: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P1Report {
    pub entries: Vec<P1Entry>,
}

impl P1Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.trivial_on_cover)
    }
}

/// Every central extension of `G` becomes trivial when restricted to `[G,G]`
/// and pulled back to the true commutator.
pub fn verify_p1(t: &TrueCommutatorResult, coefficients: &[FiniteAbelian]) -> Result<P1Report> {
    let cover = t
        .cover
        .as_ref()
        .ok_or_else(|| Error::Precondition("no cover available".into()))?;
    let total = cover.total();
    // cover -> [G,G] -> G as an image array
    let to_g: Vec<usize> = total
        .elements()
        .map(|x| t.inclusion.apply(cover.projection().apply(x)))
        .collect();
    let mut entries = Vec::new();
    for a in coefficients {
        let h = second_cohomology(&t.group, a)?;
        let hc = second_cohomology(total, a)?;
        for (j, f) in h.basis().iter().enumerate() {
            let mut class = vec![0; h.invariants().rank()];
            class[j] = 1;
            let pulled = f.pullback(total, &to_g);
            entries.push(P1Entry {
                coefficients: a.clone(),
                class,
                trivial_on_cover: hc.is_coboundary(&pulled)?,
            });
        }
    }
    Ok(P1Report { entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchOutcome {
    Found,
    Exhausted,
    DeadlineExceeded,
}

#[derive(Debug, Clone)]
pub struct P3Report {
    pub outcome: SearchOutcome,
    pub b: Option<FiniteAbelian>,
    pub class: Option<Vec<u64>>,
    /// `lift[g1 * |G| + g2]`: element of the cover over `[g1, g2]`.
    pub lift: Option<Vec<usize>>,
    pub bracket: Option<StableBracket>,
    pub extensions_tried: usize,
}

/// Search parameters for [`verify_p3`].
#[derive(Debug, Clone, Copy)]
pub struct P3Search {
    /// Largest `|B|`; `None` means `4 max(|A^un|, |H_2(G)|)`.
    pub max_b_order: Option<u64>,
    /// Classes tried per coefficient group.
    pub max_classes: u64,
    /// Largest extension total group.
    pub max_total_order: usize,
    pub deadline: Option<Instant>,
}

impl Default for P3Search {
    fn default() -> Self {
        Self {
            max_b_order: None,
            max_classes: 4096,
            max_total_order: 512,
            deadline: None,
        }
    }
}

/// Looks for a central extension `E` of `G` by some `B` containing `A^un`
/// whose commutator subgroup is the true commutator over `[G,G]`; its
/// commutator map descends to a lift `G x G -> [G,G]^true`, which must make
/// `[G,G]^true -> G` strictly stable.
pub fn verify_p3(t: &TrueCommutatorResult, search: &P3Search) -> Result<P3Report> {
    let cover = t
        .cover
        .as_ref()
        .ok_or_else(|| Error::Precondition("no cover available".into()))?;
    let delta = t.delta().unwrap();
    let g = &t.group;
    let n = g.order();
    let ct = cover.total();
    let mut report = P3Report {
        outcome: SearchOutcome::Exhausted,
        b: None,
        class: None,
        lift: None,
        bracket: None,
        extensions_tried: 0,
    };
    if ct.order() == 1 {
        let lift = vec![0; n * n];
        let sb = stable_from_lift(delta, lift.clone())?;
        report.outcome = SearchOutcome::Found;
        report.b = Some(FiniteAbelian::trivial());
        report.lift = Some(lift);
        report.bracket = Some(sb);
        return Ok(report);
    }
    let a = &t.aun.group;
    let m = qz_cohomology(g)?.invariants().order();
    let cap = search.max_b_order.unwrap_or(4 * a.order().max(m));
    let candidates: Vec<FiniteAbelian> = (1..=cap)
        .flat_map(FiniteAbelian::all_of_order)
        .filter(|b| a.embeds_in(b))
        .collect();
    // [G,G] position of every element of G
    let mut dpos = vec![usize::MAX; n];
    for (i, &x) in t.base.members().iter().enumerate() {
        dpos[x] = i;
    }
    for b in candidates {
        if (b.order() as usize) * n > search.max_total_order {
            continue;
        }
        let h = second_cohomology(g, &b)?;
        for (idx, coords) in h.invariants().elements().enumerate() {
            if idx as u64 >= search.max_classes {
                break;
            }
            if search.deadline.is_some_and(|d| Instant::now() >= d) {
                report.outcome = SearchOutcome::DeadlineExceeded;
                return Ok(report);
            }
            report.extensions_tried += 1;
            let f = h.representative(&coords);
            let e = extension_from_cocycle(&f);
            let et = e.total();
            let de = commutator_subgroup(et);
            if de.order() != ct.order() {
                continue;
            }
            let (dgrp, dincl) = de.to_group();
            let over = |x: usize, y: usize| -> bool {
                dpos[e.projection().apply(dincl.apply(x))] == cover.projection().apply(y)
            };
            let Some(phi) = find_isomorphism_with(&dgrp, ct, over)? else {
                continue;
            };
            let mut epos = vec![usize::MAX; et.order()];
            for (i, &x) in de.members().iter().enumerate() {
                epos[x] = i;
            }
            let sec = e.section();
            let mut lift = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    lift.push(phi.apply(epos[et.commutator(sec[x], sec[y])]));
                }
            }
            let sb = stable_from_lift(delta.clone(), lift.clone())?;
            report.outcome = SearchOutcome::Found;
            report.b = Some(b.clone());
            report.class = Some(coords);
            report.lift = Some(lift);
            report.bracket = Some(sb);
            return Ok(report);
        }
    }
    Ok(report)
}

/// `[G / [G,G]^true]` with its Picard bracket.
#[derive(Debug, Clone)]
pub struct StackyAbelianization {
    pub groupoid: QuotientGroupoid,
    pub bracket: StableBracket,
    pub pi0: FiniteAbelian,
    pub pi1: FiniteAbelian,
}

pub fn stacky_abelianization(t: &TrueCommutatorResult, p3: &P3Report) -> Result<StackyAbelianization> {
    let bracket = p3
        .bracket
        .clone()
        .ok_or_else(|| Error::Precondition("no commutator lift available".into()))?;
    let groupoid = quotient_groupoid(bracket.parent())?;
    let pi0 = groupoid
        .pi0_abelian()
        .ok_or_else(|| Error::Inconsistency("pi0 is not abelian".into()))?;
    let (ab, _) = abelianization(&t.group)?;
    if pi0 != ab {
        return Err(Error::Inconsistency("pi0 differs from the abelianization".into()));
    }
    let pi1 = groupoid.pi1().clone();
    if pi1 != t.aun.group {
        return Err(Error::Inconsistency("pi1 differs from A^un".into()));
    }
    Ok(StackyAbelianization {
        groupoid,
        bracket,
        pi0,
        pi1,
    })
}

/// Factorization of `F: G -> G'` through the stacky abelianization, for a
/// strictly stable target `H' -> G'`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub k_order: usize,
    /// `a: [G,G]^true -> K`, part of a morphism of crossed modules over `G`.
    pub morphism: Option<Vec<usize>>,
    pub report: Report,
}

impl Factorization {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

pub fn universal_factorization(
    stacky: &StackyAbelianization,
    f: &GroupHom,
    target: &StableBracket,
) -> Result<Factorization> {
    let txm = target.parent();
    let g = f.source().clone();
    let n = g.order();
    let src = stacky.bracket.parent();
    if !src.g().same_table(&g) {
        return Err(Error::Precondition("F is not defined on the stacky abelianization's group".into()));
    }
    let fi = first_iso(f, txm)?;
    let k = fi.k.h().clone();
    let dk = fi.k.delta();
    let mut report = Report::default();
    report.push(Check {
        name: "first_iso_functor".into(),
        passed: fi.functor_report.passed(),
        counterexample: fi.functor_report.failures().next().and_then(|c| c.counterexample.clone()),
    });
    let image = dk.image_subgroup();
    let derived = commutator_subgroup(&g);
    report.push(Check::run("image_contains_derived", tuples(&[derived.order()]), |t| {
        image.contains(derived.members()[t[0]])
    }));

    // a({g1, g2}) = ([g1, g2], {F g1, F g2}')
    let mut kindex = vec![usize::MAX; g.order() * txm.h().order()];
    for (i, &(x, h)) in fi.elements.iter().enumerate() {
        kindex[x * txm.h().order() + h] = i;
    }
    let cover = src.h();
    let mut images: Vec<Option<usize>> = vec![None; cover.order()];
    let mut consistent = true;
    for x in 0..n {
        for y in 0..n {
            let c = stacky.bracket.get(x, y);
            let tgt = kindex[g.commutator(x, y) * txm.h().order() + target.get(f.apply(x), f.apply(y))];
            match images[c] {
                None => images[c] = Some(tgt),
                Some(prev) if prev != tgt => consistent = false,
                _ => {}
            }
        }
    }
    report.push(Check {
        name: "bracket_images_consistent".into(),
        passed: consistent,
        counterexample: None,
    });
    let gens: Vec<usize> = (0..cover.order()).filter(|&c| c != 0 && images[c].is_some()).collect();
    let gen_images: Vec<usize> = gens.iter().map(|&c| images[c].unwrap()).collect();
    let morphism = if consistent {
        extend_to_hom(cover, &gens, &gen_images, &k)
    } else {
        None
    };
    report.push(Check {
        name: "morphism_extends".into(),
        passed: morphism.is_some(),
        counterexample: None,
    });
    if let Some(a) = &morphism {
        report.push(Check::run("over_g", tuples(&[cover.order()]), |t| {
            dk.apply(a[t[0]]) == src.delta().apply(t[0])
        }));
        report.push(Check::run("equivariant", tuples(&[cover.order(), n]), |t| {
            a[src.act(t[0], t[1])] == fi.k.act(a[t[0]], t[1])
        }));
        report.push(Check::run("objectwise", tuples(&[n]), |t| f.apply(t[0]) < txm.g().order()));
        report.push(Check::run("arrows_agree", tuples(&[cover.order()]), |t| {
            // c: 1 -> delta(c) goes to fi.arrow_map[a(c)]: F(1) -> F(delta(c))
            let h = fi.arrow_map[a[t[0]]];
            txm.delta().apply(h) == f.apply(src.delta().apply(t[0]))
        }));
    }
    Ok(Factorization {
        k_order: k.order(),
        morphism,
        report,
    })
}

/// Target presentation `H -> 1` for an abelian `H`, with trivial bracket.
pub fn discrete_pi1_presentation(h: &GroupRef) -> Result<StableBracket> {
    let one = Arc::new(FiniteGroup::trivial());
    let xm = crate::crossed::CrossedModule::zero_map(h, &one);
    StableBracket::new(xm, vec![0])
}

/// Target presentation `1 -> A` for an abelian `A`, with trivial bracket.
pub fn discrete_pi0_presentation(a: &GroupRef) -> Result<StableBracket> {
    let one = Arc::new(FiniteGroup::trivial());
    let xm = crate::crossed::CrossedModule::zero_map(&one, a);
    StableBracket::new(xm, vec![0; a.order() * a.order()])
}
