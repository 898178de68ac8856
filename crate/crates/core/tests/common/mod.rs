//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use truecomm::abelian::{factorize, FiniteAbelian};
use truecomm::artin_schreier::Fq;
use truecomm::crossed::CrossedModule;
use truecomm::group::{center, commutator_subgroup, extend_to_hom, Catalog, Subgroup};
use truecomm::{FiniteGroup, GroupHom, GroupRef, Limits};

pub fn catalog(name: &str) -> GroupRef {
    Arc::new(Catalog::parse(name).unwrap().build(&Limits::default()).unwrap())
}

/// One representative of every isomorphism class of groups of order at most 8.
pub const SMALL_GROUPS: [&str; 14] = [
    "trivial",
    "cyclic 2",
    "cyclic 3",
    "cyclic 4",
    "klein4",
    "cyclic 5",
    "cyclic 6",
    "symmetric 3",
    "cyclic 7",
    "cyclic 8",
    "cyclic 4 x cyclic 2",
    "cyclic 2 x cyclic 2 x cyclic 2",
    "dihedral 4",
    "quaternion8",
];

/// Normalized cocycles `G x G -> Z/d` by backtracking over the cocycle
/// identity with unit propagation; every leaf is a cocycle.
struct CocycleSearch {
    d: i64,
    vars: usize,
    constraints: Vec<Vec<(usize, i64)>>,
    by_var: Vec<Vec<usize>>,
}

impl CocycleSearch {
    fn new(g: &FiniteGroup, d: i64) -> Self {
        let n = g.order();
        let m = n - 1;
        let var = |x: usize, y: usize| (x != 0 && y != 0).then(|| (x - 1) * m + (y - 1));
        let mut constraints = Vec::new();
        for x in 1..n {
            for y in 1..n {
                for z in 1..n {
                    // f(x,y) + f(xy,z) - f(y,z) - f(x,yz) = 0
                    let mut terms: Vec<(usize, i64)> = Vec::new();
                    let mut push = |v: Option<usize>, k: i64| {
                        if let Some(v) = v {
                            match terms.iter_mut().find(|t| t.0 == v) {
                                Some(t) => t.1 += k,
                                None => terms.push((v, k)),
                            }
                        }
                    };
                    push(var(x, y), 1);
                    push(var(g.mul(x, y), z), 1);
                    push(var(y, z), -1);
                    push(var(x, g.mul(y, z)), -1);
                    terms.retain(|t| t.1 % d != 0);
                    if !terms.is_empty() {
                        constraints.push(terms);
                    }
                }
            }
        }
        let vars = m * m;
        let mut by_var = vec![Vec::new(); vars];
        for (i, c) in constraints.iter().enumerate() {
            for &(v, _) in c {
                by_var[v].push(i);
            }
        }
        Self {
            d,
            vars,
            constraints,
            by_var,
        }
    }

    fn assign(&self, v: usize, val: i64, values: &mut [i64], trail: &mut Vec<usize>) -> bool {
        values[v] = val;
        trail.push(v);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &c in &self.by_var[u] {
                let mut sum = 0;
                let mut unknown = None;
                let mut count = 0;
                for &(w, k) in &self.constraints[c] {
                    if values[w] < 0 {
                        count += 1;
                        unknown = Some((w, k));
                    } else {
                        sum += k * values[w];
                    }
                }
                match (count, unknown) {
                    (0, _) if sum.rem_euclid(self.d) != 0 => return false,
                    (1, Some((w, k))) if k == 1 || k == -1 => {
                        values[w] = (-sum * k).rem_euclid(self.d);
                        trail.push(w);
                        stack.push(w);
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn run(&self, values: &mut Vec<i64>, out: &mut Vec<Vec<u8>>) {
        let Some(v) = values.iter().position(|&x| x < 0) else {
            out.push(values.iter().map(|&x| x as u8).collect());
            return;
        };
        for val in 0..self.d {
            let mut trail = Vec::new();
            if self.assign(v, val, values, &mut trail) {
                self.run(values, out);
            }
            for w in trail {
                values[w] = -1;
            }
        }
    }

    fn all(&self) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        self.run(&mut vec![-1; self.vars], &mut out);
        out
    }
}

/// Invariant factors of `H^2(G, Z/d)`, from explicit cocycle and coboundary
/// sets and the orders of their torsion subgroups.
pub fn brute_force_h2_cyclic(g: &FiniteGroup, d: u64) -> Vec<u64> {
    let n = g.order();
    if n == 1 || d == 1 {
        return vec![];
    }
    let di = d as i64;
    let cocycles = CocycleSearch::new(g, di).all();
    let m = n - 1;
    let mut boundaries = HashSet::new();
    let total = (d as usize).pow(m as u32);
    for mut code in 0..total {
        let mut t = vec![0i64; n];
        for slot in t.iter_mut().skip(1) {
            *slot = (code % d as usize) as i64;
            code /= d as usize;
        }
        let mut b = Vec::with_capacity(m * m);
        for x in 1..n {
            for y in 1..n {
                b.push((t[x] + t[y] - t[g.mul(x, y)]).rem_euclid(di) as u8);
            }
        }
        boundaries.insert(b);
    }
    let nb = boundaries.len();
    // |{h in H^2 : k h = 0}|
    let torsion = |k: u64| -> usize {
        let hits = cocycles
            .iter()
            .filter(|z| {
                let kz: Vec<u8> = z.iter().map(|&x| ((x as u64 * k) % d) as u8).collect();
                boundaries.contains(&kz)
            })
            .count();
        assert_eq!(hits % nb, 0);
        hits / nb
    };
    let mut orders = Vec::new();
    for (p, e) in factorize(d) {
        let counts: Vec<usize> = (0..=e).map(|j| torsion(p.pow(j))).collect();
        // ranks[j] = number of summands of order >= p^(j+1)
        let ranks: Vec<u32> = counts
            .windows(2)
            .map(|w| {
                let ratio = (w[1] / w[0]) as u64;
                let r = (ratio as f64).log(p as f64).round() as u32;
                assert_eq!(p.pow(r), ratio);
                r
            })
            .collect();
        for j in 0..ranks.len() {
            let next = ranks.get(j + 1).copied().unwrap_or(0);
            for _ in 0..ranks[j] - next {
                orders.push(p.pow(j as u32 + 1));
            }
        }
    }
    FiniteAbelian::from_cyclic_orders(&orders).factors().to_vec()
}

/// `H^2(G, A)` for `A = Z/d1 + ... + Z/dk`, summand by summand.
pub fn brute_force_h2(g: &FiniteGroup, a: &[u64]) -> Vec<u64> {
    let orders: Vec<u64> = a.iter().flat_map(|&d| brute_force_h2_cyclic(g, d)).collect();
    FiniteAbelian::from_cyclic_orders(&orders).factors().to_vec()
}

pub fn bareiss_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Invariant factors other than 1 of a square nonsingular matrix, as ratios
/// of determinantal divisors (gcds of all k x k minors).
pub fn determinantal_invariants(m: &[Vec<i64>]) -> Vec<u64> {
    let n = m.len();
    let mut divisors = vec![1i128];
    for k in 1..=n {
        let sets = subsets(n, k);
        let mut g = 0i128;
        for rows in &sets {
            for cols in &sets {
                let minor: Vec<Vec<i64>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect();
                g = gcd(g, bareiss_det(&minor));
                if g == 1 {
                    break;
                }
            }
            if g == 1 {
                break;
            }
        }
        divisors.push(g);
    }
    divisors
        .windows(2)
        .map(|w| (w[1] / w[0]) as u64)
        .filter(|&s| s != 1)
        .collect()
}

/// `SL(2, 5)` from explicit matrices, identity first.
pub fn sl2_5() -> GroupRef {
    let p: i64 = 5;
    let mut mats: Vec<[i64; 4]> = vec![[1, 0, 0, 1]];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d - b * c).rem_euclid(p) == 1 && [a, b, c, d] != [1, 0, 0, 1] {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let index = |m: [i64; 4]| mats.iter().position(|x| *x == m).unwrap();
    let mul = |x: [i64; 4], y: [i64; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]).rem_euclid(p),
            (x[0] * y[1] + x[1] * y[3]).rem_euclid(p),
            (x[2] * y[0] + x[3] * y[2]).rem_euclid(p),
            (x[2] * y[1] + x[3] * y[3]).rem_euclid(p),
        ]
    };
    let rows = mats
        .iter()
        .map(|&x| mats.iter().map(|&y| index(mul(x, y))).collect())
        .collect();
    Arc::new(FiniteGroup::from_table(rows, &Limits::default()).unwrap())
}

/// Trace of multiplication by `a` on the `F_p`-basis `1, t, ..., t^{e-1}`.
pub fn trace_oracle(f: &Fq, a: u32) -> u32 {
    let p = f.characteristic();
    (0..f.degree())
        .map(|k| f.digits(f.mul(a, p.pow(k)))[k as usize])
        .fold(0, |acc, x| (acc + x) % p)
}

pub const FIRST_ISO_GROUPS: [&str; 14] = [
    "cyclic 2",
    "cyclic 3",
    "cyclic 4",
    "cyclic 6",
    "klein4",
    "symmetric 3",
    "dihedral 4",
    "quaternion8",
    "dihedral 5",
    "alternating 4",
    "dihedral 6",
    "cyclic 4 x cyclic 2",
    "symmetric 4",
    "SL2 3",
];

fn random_hom(rng: &mut impl Rng, source: &GroupRef, target: &GroupRef) -> GroupHom {
    let gens = source.generators();
    for _ in 0..64 {
        let images: Vec<usize> = gens.iter().map(|_| rng.gen_range(0..target.order())).collect();
        if let Some(map) = extend_to_hom(source, &gens, &images, target) {
            return GroupHom::new(source.clone(), target.clone(), map).unwrap();
        }
    }
    GroupHom::trivial(source, target)
}

/// A random homomorphism into the base of a random crossed module, every
/// group of order at most 24.
pub fn random_first_iso_case(rng: &mut impl Rng) -> (GroupHom, CrossedModule, String) {
    let gname = *FIRST_ISO_GROUPS.choose(rng).unwrap();
    let g = catalog(gname);
    let (xm, kind) = match rng.gen_range(0..4) {
        0 => (CrossedModule::identity(&g), "identity"),
        1 => (CrossedModule::normal_inclusion(&center(&g)).unwrap(), "center"),
        2 => (CrossedModule::normal_inclusion(&commutator_subgroup(&g)).unwrap(), "derived"),
        _ => {
            let h = catalog(["cyclic 2", "cyclic 3", "klein4"].choose(rng).unwrap());
            (CrossedModule::zero_map(&h, &g), "zero")
        }
    };
    let gamma_name = *FIRST_ISO_GROUPS.choose(rng).unwrap();
    let gamma = catalog(gamma_name);
    let f = random_hom(rng, &gamma, &g);
    (f, xm, format!("{gamma_name} -> {gname} ({kind})"))
}

pub fn subgroup_of(g: &GroupRef, members: &[usize]) -> Subgroup {
    Subgroup::new(g.clone(), members.to_vec()).unwrap()
}
