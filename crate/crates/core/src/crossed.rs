//! Crossed modules `delta: H -> G` with a right action `h -> h^g`, strictly
//! stable brackets, quotient groupoids `[G/H]` and the first isomorphism
//! theorem for strict monoidal functors.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::abelian::FiniteAbelian;
use crate::cohomology::CentralExtension;
use crate::error::{Error, Result};
use crate::group::{
    commutator_subgroup, decompose_abelian, quotient, FiniteGroup, GroupHom, GroupRef, GroupSpec, Limits, Subgroup,
};
use crate::report::{tuples, Check, Report};

#[derive(Debug, Clone)]
pub struct CrossedModule {
    delta: GroupHom,
    /// `action[g][h] = h^g`
    action: Vec<Vec<usize>>,
}

impl CrossedModule {
    /// Unchecked; run [`check_crossed_module`] to validate.
    pub fn new(delta: GroupHom, action: Vec<Vec<usize>>) -> Result<Self> {
        let (nh, ng) = (delta.source().order(), delta.target().order());
        if action.len() != ng || action.iter().any(|r| r.len() != nh || r.iter().any(|&x| x >= nh)) {
            return Err(Error::InvalidCrossedModule("action table has the wrong shape".into()));
        }
        Ok(Self { delta, action })
    }

    /// Conjugation action of `G` on a normal subgroup.
    pub fn normal_inclusion(n: &Subgroup) -> Result<Self> {
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let (h, incl) = n.to_group();
        let g = n.parent();
        let pos = position_map(g.order(), n.members());
        let action = g
            .elements()
            .map(|x| h.elements().map(|y| pos[g.conj(incl.apply(y), x)]).collect())
            .collect();
        Ok(Self { delta: incl, action })
    }

    pub fn identity(g: &GroupRef) -> Self {
        Self::normal_inclusion(&Subgroup::whole(g)).expect("whole group is normal")
    }

    /// `H -> G` constant at the identity with trivial action.
    pub fn zero_map(h: &GroupRef, g: &GroupRef) -> Self {
        let action = vec![h.elements().collect(); g.order()];
        Self {
            delta: GroupHom::trivial(h, g),
            action,
        }
    }

    pub fn h(&self) -> &GroupRef {
        self.delta.source()
    }

    pub fn g(&self) -> &GroupRef {
        self.delta.target()
    }

    pub fn delta(&self) -> &GroupHom {
        &self.delta
    }

    #[inline]
    pub fn act(&self, h: usize, g: usize) -> usize {
        self.action[g][h]
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }
}

fn position_map(n: usize, members: &[usize]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (i, &m) in members.iter().enumerate() {
        pos[m] = i;
    }
    pos
}

/// Right action, action by automorphisms and both Peiffer identities.
pub fn check_crossed_module(xm: &CrossedModule) -> Report {
    let (h, g, d) = (xm.h(), xm.g(), xm.delta());
    let (nh, ng) = (h.order(), g.order());
    let mut r = Report::default();
    r.push(Check::run("action_bijective", tuples(&[ng]), |t| {
        let mut seen = vec![false; nh];
        xm.action[t[0]].iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }));
    r.push(Check::run("action_unit", tuples(&[nh]), |t| xm.act(t[0], 0) == t[0]));
    r.push(Check::run("right_action", tuples(&[nh, ng, ng]), |t| {
        xm.act(xm.act(t[0], t[1]), t[2]) == xm.act(t[0], g.mul(t[1], t[2]))
    }));
    r.push(Check::run("automorphism", tuples(&[nh, nh, ng]), |t| {
        xm.act(h.mul(t[0], t[1]), t[2]) == h.mul(xm.act(t[0], t[2]), xm.act(t[1], t[2]))
    }));
    r.push(Check::run("peiffer_1", tuples(&[nh, nh]), |t| {
        let (h1, h2) = (t[0], t[1]);
        xm.act(h2, d.apply(h1)) == h.conj(h2, h1)
    }));
    r.push(Check::run("peiffer_2", tuples(&[nh, ng]), |t| {
        d.apply(xm.act(t[0], t[1])) == g.conj(d.apply(t[0]), t[1])
    }));
    r
}

/// A crossed module with a lift `{g1, g2}` of the commutator map.
#[derive(Debug, Clone)]
pub struct StableBracket {
    parent: CrossedModule,
    bracket: Vec<usize>,
}

impl StableBracket {
    pub fn new(parent: CrossedModule, bracket: Vec<usize>) -> Result<Self> {
        let ng = parent.g().order();
        if bracket.len() != ng * ng || bracket.iter().any(|&x| x >= parent.h().order()) {
            return Err(Error::InvalidCrossedModule("bracket table has the wrong shape".into()));
        }
        Ok(Self { parent, bracket })
    }

    pub fn parent(&self) -> &CrossedModule {
        &self.parent
    }

    #[inline]
    pub fn get(&self, g1: usize, g2: usize) -> usize {
        self.bracket[g1 * self.parent.g().order() + g2]
    }

    pub fn table(&self) -> &[usize] {
        &self.bracket
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, g1: usize, g2: usize, h: usize) -> Self {
        let mut b = self.clone();
        let ng = self.parent.g().order();
        b.bracket[g1 * ng + g2] = h;
        b
    }
}

/// The eight axioms of a strictly stable crossed module, named `axiom_1` to
/// `axiom_8`.
pub fn check_strictly_stable(sb: &StableBracket) -> Report {
    let xm = &sb.parent;
    let (h, g, d) = (xm.h(), xm.g(), xm.delta());
    let (nh, ng) = (h.order(), g.order());
    let b = |x: usize, y: usize| sb.get(x, y);
    let mut r = Report::default();
    r.push(Check::run("axiom_1", tuples(&[ng, ng]), |t| {
        d.apply(b(t[0], t[1])) == g.commutator(t[0], t[1])
    }));
    r.push(Check::run("axiom_2", tuples(&[nh, nh]), |t| {
        b(d.apply(t[0]), d.apply(t[1])) == h.commutator(t[0], t[1])
    }));
    r.push(Check::run("axiom_3", tuples(&[nh, ng]), |t| {
        b(d.apply(t[0]), t[1]) == h.mul(h.inv(t[0]), xm.act(t[0], t[1]))
    }));
    r.push(Check::run("axiom_4", tuples(&[ng, nh]), |t| {
        b(t[0], d.apply(t[1])) == h.mul(h.inv(xm.act(t[1], t[0])), t[1])
    }));
    r.push(Check::run("axiom_5", tuples(&[ng, ng, ng]), |t| {
        let (g0, g1, g2) = (t[0], t[1], t[2]);
        b(g0, g.mul(g1, g2)) == h.mul(b(g0, g2), xm.act(b(g0, g1), g2))
    }));
    r.push(Check::run("axiom_6", tuples(&[ng, ng, ng]), |t| {
        let (g0, g1, g2) = (t[0], t[1], t[2]);
        b(g.mul(g0, g1), g2) == h.mul(xm.act(b(g0, g2), g1), b(g1, g2))
    }));
    r.push(Check::run("axiom_7", tuples(&[ng, ng]), |t| {
        h.mul(b(t[0], t[1]), b(t[1], t[0])) == 0
    }));
    r.push(Check::run("axiom_8", tuples(&[ng]), |t| b(t[0], t[0]) == 0));
    r
}

fn failure_summary(r: &Report) -> String {
    r.failures()
        .map(|c| format!("{} at {:?}", c.name, c.counterexample.as_deref().unwrap_or(&[])))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Equips `delta` with the action `h^g = h {delta(h), g}` and bracket `lift`,
/// returning the result only if every crossed-module and stability axiom
/// holds.
pub fn stable_from_lift(delta: GroupHom, lift: Vec<usize>) -> Result<StableBracket> {
    let (h, g) = (delta.source().clone(), delta.target().clone());
    let ng = g.order();
    if lift.len() != ng * ng || lift.iter().any(|&x| x >= h.order()) {
        return Err(Error::Precondition("lift table has the wrong shape".into()));
    }
    if lift[0] != 0 {
        return Err(Error::Precondition("lift(1, 1) is not the identity".into()));
    }
    for x in g.elements() {
        for y in g.elements() {
            if delta.apply(lift[x * ng + y]) != g.commutator(x, y) {
                return Err(Error::Precondition(format!(
                    "lift does not cover the commutator map at ({x}, {y})"
                )));
            }
        }
    }
    let ker = delta.kernel();
    for &k in ker.members() {
        if h.elements().any(|y| h.mul(k, y) != h.mul(y, k)) {
            return Err(Error::Precondition("kernel of delta is not central".into()));
        }
    }
    let action = g
        .elements()
        .map(|x| h.elements().map(|y| h.mul(y, lift[delta.apply(y) * ng + x])).collect())
        .collect();
    let xm = CrossedModule::new(delta, action)?;
    let r = check_crossed_module(&xm);
    if !r.passed() {
        return Err(Error::AxiomFailure(failure_summary(&r)));
    }
    let sb = StableBracket::new(xm, lift)?;
    let r = check_strictly_stable(&sb);
    if !r.passed() {
        return Err(Error::AxiomFailure(failure_summary(&r)));
    }
    Ok(sb)
}

/// Restriction of a central extension to a subgroup of its base.
#[derive(Debug, Clone)]
pub struct RestrictedExtension {
    /// The full preimage of `S`, as an extension of `S` by the same kernel.
    pub full: CentralExtension,
    /// Inclusion of the preimage into the original total group.
    pub inclusion: GroupHom,
    /// When `S` contains `[G, G]`: `lift[g1 * |G| + g2] = [s(g1), s(g2)]` as
    /// an element of the preimage. Independent of the section because the
    /// kernel is central.
    pub lift: Option<Vec<usize>>,
}

pub fn restriction_of_extension(e: &CentralExtension, s: &Subgroup) -> Result<RestrictedExtension> {
    let base = e.base();
    if !s.parent().same_table(base) {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    let total = e.total();
    let proj = e.projection();
    let members: Vec<usize> = total.elements().filter(|&x| s.contains(proj.apply(x))).collect();
    let pre = Subgroup::new(total.clone(), members)?;
    let (pg, incl) = pre.to_group();
    let (sg, _) = s.to_group();
    let spos = position_map(base.order(), s.members());
    let ppos = position_map(total.order(), pre.members());
    let projection = GroupHom::new_unchecked(
        pg.clone(),
        sg,
        pg.elements().map(|x| spos[proj.apply(incl.apply(x))]).collect(),
    );
    let embedding = e.kernel_embedding().iter().map(|&x| ppos[x]).collect();
    let full = CentralExtension::new(projection, e.kernel().clone(), embedding)?;
    let derived = commutator_subgroup(base);
    let lift = derived.members().iter().all(|&x| s.contains(x)).then(|| {
        let sec = e.section();
        let n = base.order();
        let mut l = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                l.push(ppos[total.commutator(sec[a], sec[b])]);
            }
        }
        l
    });
    Ok(RestrictedExtension {
        full,
        inclusion: incl,
        lift,
    })
}

/// The groupoid `[G/H]`: objects `G`, arrows `g -> g delta(h)`.
#[derive(Debug, Clone)]
pub struct QuotientGroupoid {
    presentation: CrossedModule,
    pi0: GroupRef,
    to_pi0: GroupHom,
    pi1: FiniteAbelian,
    /// `pi1_embedding[i]`: element of `H` for the `i`-th element of `pi1`.
    pi1_embedding: Vec<usize>,
}

pub fn quotient_groupoid(xm: &CrossedModule) -> Result<QuotientGroupoid> {
    let r = check_crossed_module(xm);
    if !r.passed() {
        return Err(Error::InvalidCrossedModule(failure_summary(&r)));
    }
    let image = xm.delta().image_subgroup();
    let (pi0, to_pi0) = quotient(&image)?;
    let ker = xm.delta().kernel();
    let (kg, incl) = ker.to_group();
    if !kg.is_abelian() {
        return Err(Error::Inconsistency("kernel of delta is not abelian".into()));
    }
    let dec = decompose_abelian(&kg)?;
    Ok(QuotientGroupoid {
        presentation: xm.clone(),
        pi0,
        to_pi0,
        pi1: dec.group,
        pi1_embedding: dec.element_of.iter().map(|&x| incl.apply(x)).collect(),
    })
}

impl QuotientGroupoid {
    pub fn presentation(&self) -> &CrossedModule {
        &self.presentation
    }

    /// Isomorphism classes of objects: `coker(delta)`.
    pub fn pi0(&self) -> &GroupRef {
        &self.pi0
    }

    pub fn object_class(&self, g: usize) -> usize {
        self.to_pi0.apply(g)
    }

    /// `pi0` in invariant-factor form when it is abelian.
    pub fn pi0_abelian(&self) -> Option<FiniteAbelian> {
        if self.pi0.is_abelian() {
            decompose_abelian(&self.pi0).ok().map(|d| d.group)
        } else {
            None
        }
    }

    /// Automorphisms of the unit: `ker(delta)`.
    pub fn pi1(&self) -> &FiniteAbelian {
        &self.pi1
    }

    pub fn pi1_embedding(&self) -> &[usize] {
        &self.pi1_embedding
    }

    /// All `h` with `g delta(h) = g'`.
    pub fn arrows(&self, g: usize, g2: usize) -> Vec<usize> {
        let xm = &self.presentation;
        xm.h()
            .elements()
            .filter(|&h| xm.g().mul(g, xm.delta().apply(h)) == g2)
            .collect()
    }

    pub fn target(&self, g: usize, h: usize) -> usize {
        self.presentation.g().mul(g, self.presentation.delta().apply(h))
    }

    /// Composite of `g --h--> g delta(h) --h2--> ...`.
    pub fn compose(&self, h: usize, h2: usize) -> usize {
        self.presentation.h().mul(h, h2)
    }

    /// `(g, h) (x) (g', h') = (g g', h^{g'} h')`
    pub fn tensor(&self, a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
        let xm = &self.presentation;
        (xm.g().mul(a.0, b.0), xm.h().mul(xm.act(a.1, b.0), b.1))
    }
}

/// Factorization of a homomorphism `f: Gamma -> G` through `[Gamma/K]`.
#[derive(Debug, Clone)]
pub struct FirstIso {
    /// `K -> Gamma`, with `K = {(x, h) : delta(h) = f(x)}`.
    pub k: CrossedModule,
    /// `elements[i] = (x, h)` for the `i`-th element of `K`.
    pub elements: Vec<(usize, usize)>,
    /// Arrow part of the functor `[Gamma/K] -> [G/H]`: `(x, h) -> h`.
    pub arrow_map: Vec<usize>,
    pub functor_report: Report,
}

/// Builds `K` with product `(x, h)(y, h') = (x y, h h')` and action
/// `(x, h)^gamma = (gamma^-1 x gamma, h^{f(gamma)})`, then checks that
/// `[Gamma/K] -> [G/H]`, `x -> f(x)` on objects and `(x, h) -> h` on arrows, is
/// fully faithful.
pub fn first_iso(f: &GroupHom, target: &CrossedModule) -> Result<FirstIso> {
    if !f.target().same_table(target.g()) {
        return Err(Error::Precondition("f does not land in the base of the crossed module".into()));
    }
    let gamma = f.source().clone();
    let (h, d) = (target.h(), target.delta());
    let mut elements = Vec::new();
    for x in gamma.elements() {
        for y in h.elements() {
            if d.apply(y) == f.apply(x) {
                elements.push((x, y));
            }
        }
    }
    let nh = h.order();
    let mut index = vec![usize::MAX; gamma.order() * nh];
    for (i, &(x, y)) in elements.iter().enumerate() {
        index[x * nh + y] = i;
    }
    let lookup = |x: usize, y: usize| -> Result<usize> {
        match index[x * nh + y] {
            usize::MAX => Err(Error::Inconsistency("fiber product is not closed".into())),
            i => Ok(i),
        }
    };
    let mut table = Vec::with_capacity(elements.len() * elements.len());
    for &(x, a) in &elements {
        for &(y, b) in &elements {
            table.push(lookup(gamma.mul(x, y), h.mul(a, b))?);
        }
    }
    let kg = Arc::new(FiniteGroup::from_flat(elements.len(), table, None)?);
    let delta_k = GroupHom::new_unchecked(kg.clone(), gamma.clone(), elements.iter().map(|e| e.0).collect());
    let mut action = Vec::with_capacity(gamma.order());
    for c in gamma.elements() {
        let row = elements
            .iter()
            .map(|&(x, a)| lookup(gamma.conj(x, c), target.act(a, f.apply(c))))
            .collect::<Result<Vec<_>>>()?;
        action.push(row);
    }
    let k = CrossedModule::new(delta_k, action)?;
    let arrow_map: Vec<usize> = elements.iter().map(|e| e.1).collect();

    // Per hom-set bijection: arrows x -> x' in [Gamma/K] against arrows
    // f(x) -> f(x') in [G/H].
    let ng = gamma.order();
    let functor_report = Report {
        checks: vec![
            Check::run("objects", tuples(&[ng]), |t| f.apply(t[0]) < target.g().order()),
            Check::run("arrows_well_defined", tuples(&[elements.len()]), |t| {
                let (y, a) = elements[t[0]];
                d.apply(a) == f.apply(y)
            }),
            Check::run("fully_faithful", tuples(&[ng, ng]), |t| {
                let (x, x2) = (t[0], t[1]);
                let y = gamma.mul(gamma.inv(x), x2);
                let mut src: Vec<usize> = elements
                    .iter()
                    .filter(|e| e.0 == y)
                    .map(|e| e.1)
                    .collect();
                let (fx, fx2) = (f.apply(x), f.apply(x2));
                let dst: Vec<usize> = h
                    .elements()
                    .filter(|&a| target.g().mul(fx, d.apply(a)) == fx2)
                    .collect();
                src.sort_unstable();
                src == dst
            }),
        ],
    };
    Ok(FirstIso {
        k,
        elements,
        arrow_map,
        functor_report,
    })
}

/// Interchange format for crossed modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModuleDocument {
    #[serde(rename = "H")]
    pub h: GroupSpec,
    #[serde(rename = "G")]
    pub g: GroupSpec,
    pub delta: Vec<usize>,
    pub action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Vec<usize>>>,
}

impl CrossedModuleDocument {
    pub fn build(&self, limits: &Limits) -> Result<(CrossedModule, Option<StableBracket>)> {
        let h = Arc::new(self.h.build(limits)?);
        let g = Arc::new(self.g.build(limits)?);
        let delta = GroupHom::new(h, g, self.delta.clone())?;
        let xm = CrossedModule::new(delta, self.action.clone())?;
        let sb = match &self.bracket {
            Some(rows) => Some(StableBracket::new(xm.clone(), rows.concat())?),
            None => None,
        };
        Ok((xm, sb))
    }

    pub fn from_parts(xm: &CrossedModule, bracket: Option<&StableBracket>) -> Self {
        let ng = xm.g().order();
        Self {
            h: GroupSpec::Cayley {
                cayley: xm.h().table_rows(),
            },
            g: GroupSpec::Cayley {
                cayley: xm.g().table_rows(),
            },
            delta: xm.delta().images().to_vec(),
            action: xm.action.clone(),
            bracket: bracket.map(|b| b.bracket.chunks(ng).map(<[usize]>::to_vec).collect()),
        }
    }
}
