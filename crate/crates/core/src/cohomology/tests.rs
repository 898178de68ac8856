use std::sync::Arc;

use super::*;
use crate::group::{center, commutator_subgroup, find_isomorphism, Catalog, GroupRef};

fn cat(s: &str) -> GroupRef {
    Arc::new(Catalog::parse(s).unwrap().build(&Limits::default()).unwrap())
}

fn z(n: u64) -> FiniteAbelian {
    FiniteAbelian::cyclic(n)
}

#[test]
fn small_cyclic_groups() {
    assert_eq!(second_cohomology(&cat("cyclic 2"), &z(2)).unwrap().invariants().factors(), &[2]);
    assert!(second_cohomology(&cat("cyclic 2"), &z(3)).unwrap().invariants().is_trivial());
    assert!(second_cohomology(&cat("trivial"), &z(5)).unwrap().invariants().is_trivial());
    assert_eq!(second_cohomology(&cat("cyclic 4"), &z(6)).unwrap().invariants().factors(), &[2]);
    assert_eq!(second_cohomology(&cat("cyclic 6"), &z(6)).unwrap().invariants().factors(), &[6]);
}

#[test]
fn klein_and_quaternion() {
    let h = second_cohomology(&cat("klein4"), &z(2)).unwrap();
    assert_eq!(h.invariants().factors(), &[2, 2, 2]);
    let h = second_cohomology(&cat("quaternion8"), &z(2)).unwrap();
    assert_eq!(h.invariants().factors(), &[2, 2]);
    let h = second_cohomology(&cat("klein4"), &FiniteAbelian::new(vec![2, 4]).unwrap()).unwrap();
    assert_eq!(h.order(), 64);
}

#[test]
fn basis_cocycles_are_valid_and_have_stated_order() {
    for (g, a) in [("symmetric 3", 6), ("dihedral 4", 4), ("cyclic 2 x cyclic 4", 4), ("quaternion8", 2)] {
        let h = second_cohomology(&cat(g), &z(a)).unwrap();
        for (j, f) in h.basis().iter().enumerate() {
            f.validate().unwrap();
            let d = h.invariants().factors()[j];
            let mut e = vec![0; h.invariants().rank()];
            e[j] = 1;
            assert_eq!(h.class_of(f).unwrap(), e, "{g}");
            assert!(h.is_coboundary(&f.scale(d)).unwrap());
            if d > 1 {
                assert!(!h.is_coboundary(&f.scale(d / factorize(d)[0].0)).unwrap());
            }
        }
    }
}

#[test]
fn witnesses_are_exact() {
    let g = cat("dihedral 4");
    let a = FiniteAbelian::new(vec![2, 12]).unwrap();
    let h = second_cohomology(&g, &a).unwrap();
    let t: Vec<Vec<u64>> = (0..8u64)
        .map(|x| if x == 0 { vec![0, 0] } else { vec![x % 2, (5 * x + 1) % 12] })
        .collect();
    let f = Cocycle2::coboundary(&g, &a, &t);
    let w = h.coboundary_witness(&f).unwrap().unwrap();
    assert_eq!(Cocycle2::coboundary(&g, &a, &w), f);
    let nontrivial = h.basis()[0].add(&f);
    assert!(h.coboundary_witness(&nontrivial).unwrap().is_none());
}

#[test]
fn extensions_round_trip() {
    let c2 = cat("cyclic 2");
    let h = second_cohomology(&c2, &z(2)).unwrap();
    let e = extension_from_cocycle(&h.basis()[0]);
    assert!(find_isomorphism(e.total(), &cat("cyclic 4")).unwrap().is_some());
    let back = cocycle_from_extension(&e);
    assert_eq!(h.class_of(&back).unwrap(), vec![1]);

    let v = cat("klein4");
    let h = second_cohomology(&v, &z(2)).unwrap();
    assert!(h.basis().iter().any(|f| !extension_from_cocycle(f).total().is_abelian()));

    let zero = Cocycle2::zero(&v, &z(2));
    let e = extension_from_cocycle(&zero);
    assert!(find_isomorphism(e.total(), &cat("cyclic 2 x klein4")).unwrap().is_some());
}

#[test]
fn quaternion_over_klein() {
    let q = cat("quaternion8");
    let (_, proj) = crate::group::quotient(&center(&q)).unwrap();
    let e = CentralExtension::from_projection(proj).unwrap();
    assert_eq!(e.kernel().factors(), &[2]);
    let f = cocycle_from_extension(&e);
    f.validate().unwrap();
    let h = second_cohomology(e.base(), e.kernel()).unwrap();
    let c = h.class_of(&f).unwrap();
    assert_eq!(h.invariants().element_order(&c), 2);
}

#[test]
fn restriction_examples() {
    let c4 = cat("cyclic 4");
    let h = second_cohomology(&c4, &z(2)).unwrap();
    let sub = crate::group::Subgroup::generated_by(&c4, &[2]);
    let r = restriction_map(&h, &sub).unwrap();
    assert_eq!(r.rows, vec![vec![1]]);

    let r = restriction_map(&h, &crate::group::Subgroup::trivial(&c4)).unwrap();
    assert_eq!(r.image_order().unwrap(), 1);

    let s3 = cat("symmetric 3");
    let h = second_cohomology(&s3, &z(3)).unwrap();
    let r = restriction_map(&h, &commutator_subgroup(&s3)).unwrap();
    assert_eq!(r.image_order().unwrap(), 1);
}

#[test]
fn schur_multipliers() {
    assert!(schur_multiplier(&cat("cyclic 6")).unwrap().is_trivial());
    assert_eq!(schur_multiplier(&cat("klein4")).unwrap().factors(), &[2]);
    assert!(schur_multiplier(&cat("symmetric 3")).unwrap().is_trivial());
    assert!(schur_multiplier(&cat("quaternion8")).unwrap().is_trivial());
    assert_eq!(schur_multiplier(&cat("dihedral 4")).unwrap().factors(), &[2]);
    assert_eq!(schur_multiplier(&cat("alternating 4")).unwrap().factors(), &[2]);
    assert_eq!(schur_multiplier(&cat("heisenberg 3")).unwrap().factors(), &[3, 3]);
}

#[test]
fn a5_duality() {
    let a5 = cat("alternating 5");
    assert_eq!(schur_multiplier(&a5).unwrap().factors(), &[2]);
    let r = perfect_duality_check(&a5, &z(2)).unwrap();
    assert_eq!((r.h2_order, r.hom_order, r.holds), (2, 2, true));
    let r = perfect_duality_check(&a5, &z(3)).unwrap();
    assert_eq!((r.h2_order, r.hom_order), (1, 1));
    assert_eq!(perfect_duality_check(&cat("cyclic 2"), &z(2)).unwrap_err(), Error::NotPerfect);
}

#[test]
fn order_cap() {
    let g = cat("symmetric 5");
    let limits = Limits {
        cohomology_max_order: 100,
        ..Limits::default()
    };
    assert!(matches!(
        second_cohomology_with_limits(&g, &z(2), &limits),
        Err(Error::OrderCap { order: 120, cap: 100 })
    ));
}

#[test]
fn document_round_trip() {
    let h = second_cohomology(&cat("klein4"), &z(2)).unwrap();
    let doc = h.basis()[1].to_document();
    let text = serde_json::to_string(&doc).unwrap();
    let back: CocycleDocument = serde_json::from_str(&text).unwrap();
    let f = back.into_cocycle(&Limits::default()).unwrap();
    assert_eq!(f.table(), h.basis()[1].table());
}
