mod common;

use std::sync::Arc;

use proptest::prelude::*;
use truecomm::group::{
    abelianization, center, closure, commutator_subgroup, commutator_width, find_isomorphism, is_perfect, quotient,
    GroupSpec, Permutation,
};
use truecomm::{FiniteGroup, Limits};

use common::*;

fn count_of_order(g: &FiniteGroup, k: usize) -> usize {
    g.elements().filter(|&x| g.element_order(x) == k).count()
}

#[test]
fn catalog_orders() {
    let cases = [
        ("trivial", 1),
        ("cyclic 7", 7),
        ("dihedral 5", 10),
        ("symmetric 4", 24),
        ("alternating 5", 60),
        ("quaternion8", 8),
        ("klein4", 4),
        ("heisenberg 3", 27),
        ("SL2 3", 24),
        ("cyclic 3 x symmetric 3", 18),
    ];
    for (name, n) in cases {
        assert_eq!(catalog(name).order(), n, "{name}");
    }
}

#[test]
fn cyclic_table_convention() {
    let g = catalog("cyclic 4");
    assert_eq!(g.mul(1, 1), 2);
    assert_eq!(g.identity(), 0);
}

#[test]
fn quaternion_has_one_involution() {
    let g = catalog("quaternion8");
    assert_eq!(count_of_order(&g, 2), 1);
    assert_eq!(count_of_order(&g, 4), 6);
}

#[test]
fn permutation_generators_give_s3() {
    let spec = GroupSpec::from_json(r#"{"permutations": ["(0 1)", "(0 1 2)"], "points": 3}"#).unwrap();
    let g = Arc::new(spec.build(&Limits::default()).unwrap());
    assert_eq!(g.order(), 6);
    assert!(find_isomorphism(&g, &catalog("symmetric 3")).unwrap().is_some());
}

#[test]
fn derived_subgroups_and_centers() {
    let cases = [
        ("cyclic 6", 1, 6),
        ("symmetric 3", 3, 1),
        ("quaternion8", 2, 2),
        ("dihedral 4", 2, 2),
        ("alternating 5", 60, 1),
        ("symmetric 4", 12, 1),
        ("SL2 3", 8, 2),
    ];
    for (name, derived, z) in cases {
        let g = catalog(name);
        assert_eq!(commutator_subgroup(&g).order(), derived, "{name}");
        assert_eq!(center(&g).order(), z, "{name}");
    }
}

#[test]
fn quotients_by_known_subgroups() {
    let s3 = catalog("symmetric 3");
    let (q, proj) = quotient(&commutator_subgroup(&s3)).unwrap();
    assert_eq!(q.order(), 2);
    assert!(proj.is_homomorphism());

    let q8 = catalog("quaternion8");
    let (q, _) = quotient(&center(&q8)).unwrap();
    assert_eq!(q.order(), 4);
    assert_eq!(count_of_order(&q, 2), 3);

    let (q, proj) = quotient(&truecomm::Subgroup::trivial(&s3)).unwrap();
    assert_eq!(q.order(), 6);
    assert!(proj.is_bijective());
}

#[test]
fn abelianizations() {
    let cases: [(&str, &[u64]); 5] = [
        ("cyclic 6", &[6]),
        ("symmetric 4", &[2]),
        ("quaternion8", &[2, 2]),
        ("alternating 5", &[]),
        ("cyclic 4 x cyclic 6", &[2, 12]),
    ];
    for (name, expected) in cases {
        let (ab, hom) = abelianization(&catalog(name)).unwrap();
        assert_eq!(ab.factors(), expected, "{name}");
        assert!(hom.is_homomorphism());
        assert!(hom.image_subgroup().is_whole());
    }
}

#[test]
fn commutator_widths() {
    assert_eq!(commutator_width(&catalog("cyclic 4")), 0);
    assert_eq!(commutator_width(&catalog("symmetric 3")), 1);
    assert_eq!(commutator_width(&catalog("alternating 5")), 1);
}

#[test]
fn perfectness() {
    assert!(is_perfect(&catalog("alternating 5")));
    assert!(is_perfect(&catalog("SL2 5")));
    assert!(!is_perfect(&catalog("cyclic 2")));
    assert!(!is_perfect(&catalog("symmetric 5")));
}

#[test]
fn isomorphism_tests() {
    let c4 = catalog("cyclic 4");
    let iso = find_isomorphism(&c4, &c4).unwrap().unwrap();
    assert!(iso.is_bijective() && iso.is_homomorphism());
    assert!(find_isomorphism(&c4, &catalog("klein4")).unwrap().is_none());
    assert!(find_isomorphism(&catalog("quaternion8"), &catalog("dihedral 4")).unwrap().is_none());
    assert!(find_isomorphism(&catalog("dihedral 3"), &catalog("symmetric 3")).unwrap().is_some());
    assert!(find_isomorphism(&catalog("cyclic 2 x cyclic 3"), &catalog("cyclic 6")).unwrap().is_some());
    assert!(find_isomorphism(&catalog("SL2 5"), &sl2_5()).unwrap().is_some());
}

#[test]
fn table_with_identity_elsewhere_is_relabelled() {
    // Z/3 with identity at index 2.
    let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
    let g = FiniteGroup::from_table(rows, &Limits::default()).unwrap();
    assert_eq!(g.identity(), 0);
    assert_eq!(g.order(), 3);
    assert!(g.is_abelian());
}

#[test]
fn invalid_tables_are_rejected() {
    let limits = Limits::default();
    assert!(FiniteGroup::from_table(vec![], &limits).is_err());
    assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], &limits).is_err());
    // Latin square that is not associative.
    let rows = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(FiniteGroup::from_table(rows, &limits).is_err());
}

#[test]
fn order_cap_is_enforced() {
    let limits = Limits {
        max_order: 100,
        ..Limits::default()
    };
    let spec = GroupSpec::catalog("symmetric 5");
    assert!(spec.build(&limits).is_err());
}

#[test]
fn json_round_trip() {
    let g = catalog("dihedral 4");
    let spec = GroupSpec::Cayley { cayley: g.table_rows() };
    let text = serde_json::to_string(&spec).unwrap();
    let back = GroupSpec::from_json(&text).unwrap().build(&Limits::default()).unwrap();
    assert!(back.same_table(&g));
}

#[test]
fn unknown_catalog_names_fail() {
    assert!(GroupSpec::catalog("mystery 3").build(&Limits::default()).is_err());
    assert!(GroupSpec::catalog("SL2 7").build(&Limits::default()).is_err());
}

fn perm_strategy(points: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..points).collect::<Vec<_>>()).prop_shuffle()
}

fn cycles_string(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        let body: Vec<String> = cyc.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn permutation_closure_is_a_group(a in perm_strategy(5), b in perm_strategy(5)) {
        let spec = GroupSpec::Permutations {
            permutations: vec![cycles_string(&a), cycles_string(&b)],
            points: 5,
        };
        let g = Arc::new(spec.build(&Limits::default()).unwrap());
        prop_assert_eq!(120 % g.order(), 0);
        // Rebuilding from the table must succeed, which re-checks the axioms.
        let again = FiniteGroup::from_table(g.table_rows(), &Limits::default()).unwrap();
        prop_assert!(again.same_table(&g));
        prop_assert_eq!(closure(&g, &g.generators()).len(), g.order());
        let derived = commutator_subgroup(&g);
        prop_assert!(derived.is_normal());
        let (ab, hom) = abelianization(&g).unwrap();
        prop_assert_eq!(ab.order() as usize * derived.order(), g.order());
        let kernel = hom.kernel();
        prop_assert_eq!(kernel.members(), derived.members());
    }

    #[test]
    fn parsed_cycles_round_trip(a in perm_strategy(6)) {
        let p = Permutation::parse_cycles(&cycles_string(&a), 6).unwrap();
        prop_assert_eq!(p.0, a);
    }

    #[test]
    fn random_homs_have_normal_kernels(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (f, _, _) = random_first_iso_case(&mut rng);
        prop_assert!(f.is_homomorphism());
        let k = f.kernel();
        prop_assert!(k.is_normal());
        prop_assert_eq!(k.order() * f.image_subgroup().order(), f.source().order());
    }
}
