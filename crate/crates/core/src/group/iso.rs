use std::collections::VecDeque;

use super::{FiniteGroup, GroupHom, GroupRef, Limits};
use crate::error::{Error, Result};

/// Extends generator images to a homomorphism, walking the Cayley graph of
/// `source`. Returns `None` if some relation is violated.
pub fn extend_to_hom(source: &FiniteGroup, gens: &[usize], images: &[usize], target: &FiniteGroup) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; source.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = source.mul(x, s);
            let fy = target.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    Some(map)
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut v = g.element_orders();
    v.sort_unstable();
    v
}

pub fn find_isomorphism(g: &GroupRef, h: &GroupRef) -> Result<Option<GroupHom>> {
    find_isomorphism_with(g, h, |_, _| true)
}

/// Isomorphism search restricted to maps with `allowed(x, phi(x))` for every
/// element `x`. Candidate images of each generator are scanned in increasing
/// index order, so the first isomorphism found is deterministic.
pub fn find_isomorphism_with(
    g: &GroupRef,
    h: &GroupRef,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<Option<GroupHom>> {
    let cap = Limits::default().max_order;
    for n in [g.order(), h.order()] {
        if n > cap {
            return Err(Error::OrderCap { order: n, cap });
        }
    }
    if g.order() != h.order() || order_profile(g) != order_profile(h) || g.is_abelian() != h.is_abelian() {
        return Ok(None);
    }
    let gens = g.generators();
    let h_orders = h.element_orders();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            h.elements()
                .filter(|&y| h_orders[y] == o && allowed(s, y))
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    let found = search(g, h, &gens, &candidates, &mut chosen, &allowed);
    Ok(found.map(|image| GroupHom::new_unchecked(g.clone(), h.clone(), image)))
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    allowed: &impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let depth = chosen.len();
    if depth == gens.len() {
        let map = extend_to_hom(g, gens, chosen, h)?;
        let mut seen = vec![false; h.order()];
        for (x, &y) in map.iter().enumerate() {
            if seen[y] || !allowed(x, y) {
                return None;
            }
            seen[y] = true;
        }
        return Some(map);
    }
    for &y in &candidates[depth] {
        if chosen.contains(&y) {
            continue;
        }
        // commutation pattern with earlier generators must be preserved
        let ok = (0..depth).all(|i| {
            (g.mul(gens[i], gens[depth]) == g.mul(gens[depth], gens[i]))
                == (h.mul(chosen[i], y) == h.mul(y, chosen[i]))
        });
        if !ok {
            continue;
        }
        chosen.push(y);
        if let Some(m) = search(g, h, gens, candidates, chosen, allowed) {
            return Some(m);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::Catalog;

    fn cat(s: &str) -> GroupRef {
        Arc::new(Catalog::parse(s).unwrap().build(&Limits::default()).unwrap())
    }

    #[test]
    fn cyclic_self() {
        let c = cat("cyclic 4");
        let iso = find_isomorphism(&c, &c).unwrap().unwrap();
        assert!(iso.is_homomorphism() && iso.is_bijective());
    }

    #[test]
    fn negatives() {
        assert!(find_isomorphism(&cat("cyclic 4"), &cat("klein4")).unwrap().is_none());
        assert!(find_isomorphism(&cat("quaternion8"), &cat("dihedral 4")).unwrap().is_none());
    }

    #[test]
    fn nontrivial_positive() {
        let s3 = cat("symmetric 3");
        let d3 = cat("dihedral 3");
        let iso = find_isomorphism(&s3, &d3).unwrap().unwrap();
        assert!(iso.is_homomorphism() && iso.is_bijective());
        let a = cat("sl2 3");
        let b = cat("sl2 3");
        assert!(find_isomorphism(&a, &b).unwrap().is_some());
    }

    #[test]
    fn extension_detects_bad_relations() {
        let c4 = cat("cyclic 4");
        let c2 = cat("cyclic 2");
        assert!(extend_to_hom(&c4, &[1], &[1], &c2).is_some());
        let c3 = cat("cyclic 3");
        assert!(extend_to_hom(&c4, &[1], &[1], &c3).is_none());
    }
}
