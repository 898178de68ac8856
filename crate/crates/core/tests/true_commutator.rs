mod common;

use std::sync::Arc;

use truecomm::abelian::FiniteAbelian;
use truecomm::crossed::check_strictly_stable;
use truecomm::group::{abelianization, commutator_subgroup, extend_to_hom, is_perfect};
use truecomm::true_commutator::{
    aun, discrete_pi0_presentation, discrete_pi1_presentation, stacky_abelianization, true_commutator,
    universal_factorization, verify_p1, verify_p3, P3Search, SearchOutcome,
};
use truecomm::{FiniteGroup, GroupHom};

use common::*;

#[test]
fn aun_values() {
    let cases: [(&str, &[u64]); 8] = [
        ("cyclic 5", &[]),
        ("klein4", &[]),
        ("symmetric 3", &[]),
        ("quaternion8", &[]),
        ("alternating 4", &[2]),
        ("alternating 5", &[2]),
        ("SL2 5", &[]),
        ("symmetric 5", &[2]),
    ];
    for (name, expected) in cases {
        let a = aun(&catalog(name)).unwrap();
        assert_eq!(a.group.factors(), expected, "{name}");
        assert_eq!(a.characters.len(), a.group.rank());
        assert!(a.group.order() <= a.schur_multiplier_of_derived.order());
    }
}

#[test]
fn abelian_groups_have_trivial_covers() {
    for name in ["cyclic 1", "cyclic 6", "klein4", "cyclic 3 x cyclic 3"] {
        let t = true_commutator(&catalog(name)).unwrap();
        let cover = t.cover.as_ref().unwrap();
        assert_eq!(cover.total().order(), 1, "{name}");
        assert!(!t.requires_splitting_choice);
    }
}

#[test]
fn quaternion_cover_is_its_derived_subgroup() {
    let g = catalog("quaternion8");
    let t = true_commutator(&g).unwrap();
    assert!(t.aun.group.is_trivial());
    let cover = t.cover.as_ref().unwrap();
    assert_eq!(cover.total().order(), 2);
    let delta = t.delta().unwrap();
    assert_eq!(delta.image_subgroup().members(), commutator_subgroup(&g).members());
}

#[test]
fn a5_cover_is_a_stem_cover() {
    let t = true_commutator(&catalog("alternating 5")).unwrap();
    let cover = t.cover.as_ref().unwrap();
    assert!(is_perfect(cover.total()));
    assert_eq!(cover.kernel().factors(), [2]);
    let p1 = verify_p1(&t, &[FiniteAbelian::cyclic(2), FiniteAbelian::cyclic(6)]).unwrap();
    assert!(p1.passed());
    assert_eq!(p1.entries.len(), 2);
}

#[test]
fn s3_pullbacks_are_trivial() {
    let t = true_commutator(&catalog("symmetric 3")).unwrap();
    let p1 = verify_p1(&t, &[FiniteAbelian::cyclic(6), FiniteAbelian::cyclic(3)]).unwrap();
    assert!(p1.passed());
}

#[test]
fn s5_needs_a_bigger_extension() {
    let g = catalog("symmetric 5");
    let t = true_commutator(&g).unwrap();
    assert_eq!(t.aun.group.factors(), [2]);
    let cover = t.cover.as_ref().unwrap();
    assert_eq!(cover.total().order(), 120);
    assert!(verify_p1(&t, &[FiniteAbelian::cyclic(2)]).unwrap().passed());
    let p3 = verify_p3(&t, &P3Search::default()).unwrap();
    assert_eq!(p3.outcome, SearchOutcome::Found);
    let b = p3.b.as_ref().unwrap();
    assert_eq!(b.order() * 120, 240);
    assert!(check_strictly_stable(p3.bracket.as_ref().unwrap()).passed());
    let s = stacky_abelianization(&t, &p3).unwrap();
    assert_eq!(s.pi0.factors(), [2]);
    assert_eq!(s.pi1.factors(), [2]);
}

#[test]
fn non_perfect_derived_subgroups_require_a_choice() {
    // [G,G] = V4 in both cases, and the Schur class survives restriction.
    for name in ["symmetric 4", "alternating 4"] {
        let t = true_commutator(&catalog(name)).unwrap();
        assert!(t.requires_splitting_choice, "{name}");
        assert!(t.cover.is_none());
        assert!(verify_p1(&t, &[FiniteAbelian::cyclic(2)]).is_err());
        assert!(verify_p3(&t, &P3Search::default()).is_err());
    }
}

#[test]
fn lifts_cover_the_commutator_map() {
    for name in ["alternating 5", "quaternion8", "symmetric 3", "dihedral 4"] {
        let g = catalog(name);
        let t = true_commutator(&g).unwrap();
        let p3 = verify_p3(&t, &P3Search::default()).unwrap();
        assert_eq!(p3.outcome, SearchOutcome::Found, "{name}");
        let lift = p3.lift.as_ref().unwrap();
        let delta = t.delta().unwrap();
        let n = g.order();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(delta.apply(lift[x * n + y]), g.commutator(x, y), "{name}");
            }
        }
    }
}

#[test]
fn stacky_invariants_of_small_groups() {
    let cases: [(&str, &[u64], &[u64]); 5] = [
        ("cyclic 4", &[4], &[]),
        ("symmetric 3", &[2], &[]),
        ("alternating 5", &[], &[2]),
        ("dihedral 4", &[2, 2], &[]),
        ("dihedral 5", &[2], &[]),
    ];
    for (name, pi0, pi1) in cases {
        let t = true_commutator(&catalog(name)).unwrap();
        let p3 = verify_p3(&t, &P3Search::default()).unwrap();
        let s = stacky_abelianization(&t, &p3).unwrap();
        assert_eq!(s.pi0.factors(), pi0, "{name}");
        assert_eq!(s.pi1.factors(), pi1, "{name}");
    }
}

#[test]
fn exhausted_search_is_reported() {
    let t = true_commutator(&catalog("alternating 5")).unwrap();
    let search = P3Search {
        max_total_order: 60,
        ..P3Search::default()
    };
    let p3 = verify_p3(&t, &search).unwrap();
    assert_eq!(p3.outcome, SearchOutcome::Exhausted);
    assert!(p3.bracket.is_none());
    assert!(stacky_abelianization(&t, &p3).is_err());
}

#[test]
fn deadline_is_respected() {
    let t = true_commutator(&catalog("alternating 5")).unwrap();
    let search = P3Search {
        deadline: Some(std::time::Instant::now()),
        ..P3Search::default()
    };
    let p3 = verify_p3(&t, &search).unwrap();
    assert_eq!(p3.outcome, SearchOutcome::DeadlineExceeded);
}

#[test]
fn factorization_through_abelianization() {
    let g = catalog("symmetric 3");
    let t = true_commutator(&g).unwrap();
    let p3 = verify_p3(&t, &P3Search::default()).unwrap();
    let s = stacky_abelianization(&t, &p3).unwrap();
    let (ab, hom) = abelianization(&g).unwrap();
    assert_eq!(ab.factors(), [2]);
    let target = discrete_pi0_presentation(hom.target()).unwrap();
    let fz = universal_factorization(&s, &hom, &target).unwrap();
    assert!(fz.passed(), "{:?}", fz.report);
    assert_eq!(fz.k_order, 3);
}

#[test]
fn factorization_of_a5_into_a_discrete_pi1() {
    let g = catalog("alternating 5");
    let t = true_commutator(&g).unwrap();
    let p3 = verify_p3(&t, &P3Search::default()).unwrap();
    let s = stacky_abelianization(&t, &p3).unwrap();
    let c2 = catalog("cyclic 2");
    let target = discrete_pi1_presentation(&c2).unwrap();
    let one = Arc::new(FiniteGroup::trivial());
    let f = GroupHom::trivial(&g, &one);
    let fz = universal_factorization(&s, &f, &target).unwrap();
    assert!(fz.passed(), "{:?}", fz.report);
    assert_eq!(fz.k_order, 120);
    assert!(fz.morphism.is_some());
}

#[test]
fn factorization_into_a_cover() {
    // F = identity into the descended commutator of the A5 cover itself.
    let g = catalog("alternating 5");
    let t = true_commutator(&g).unwrap();
    let p3 = verify_p3(&t, &P3Search::default()).unwrap();
    let s = stacky_abelianization(&t, &p3).unwrap();
    let fz = universal_factorization(&s, &GroupHom::identity(&g), &s.bracket).unwrap();
    assert!(fz.passed(), "{:?}", fz.report);
    let a = fz.morphism.unwrap();
    let gens = t.cover.as_ref().unwrap().total().generators();
    let images: Vec<usize> = gens.iter().map(|&x| a[x]).collect();
    assert!(extend_to_hom(t.cover.as_ref().unwrap().total(), &gens, &images, s.bracket.parent().h()).is_some());
}

#[test]
fn factorization_rejects_foreign_groups() {
    let t = true_commutator(&catalog("symmetric 3")).unwrap();
    let p3 = verify_p3(&t, &P3Search::default()).unwrap();
    let s = stacky_abelianization(&t, &p3).unwrap();
    let c4 = catalog("cyclic 4");
    let target = discrete_pi0_presentation(&c4).unwrap();
    let f = GroupHom::identity(&c4);
    assert!(universal_factorization(&s, &f, &target).is_err());
}
