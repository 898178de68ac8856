//! Spanning-tree gauge for normalized 2-cochains.
//!
//! A breadth-first tree over a generating set `S` writes every element as
//! `h = p s` along a unique tree edge `(p, s)`. Every cocycle is cohomologous
//! to one vanishing on tree edges, and such a cocycle is determined by its
//! values `f(x, s)` on the remaining pairs with `s` in `S`: the cocycle
//! identity on `(x, p, s)` gives `f(x, h) = f(x, p) + f(x p, s)`.

use std::collections::VecDeque;

use crate::group::FiniteGroup;
use crate::modular::PrimePowerRing;

#[derive(Debug, Clone)]
pub(crate) struct Gauge {
    pub n: usize,
    pub gens: Vec<usize>,
    /// Tree parent and generator index for every non-identity element.
    pub parent: Vec<usize>,
    pub via: Vec<usize>,
    /// Non-identity elements in discovery order.
    pub bfs: Vec<usize>,
    /// `var_of[x * k + s]`: variable index of the pair `(x, gens[s])`.
    pub var_of: Vec<Option<usize>>,
    pub vars: Vec<(usize, usize)>,
    /// Letter counts of the tree word of each element.
    pub words: Vec<Vec<i64>>,
}

impl Gauge {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let gens = g.generators();
        let k = gens.len();
        let mut parent = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut words = vec![vec![0i64; k]; n];
        let mut bfs = Vec::with_capacity(n.saturating_sub(1));
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (s, &gen) in gens.iter().enumerate() {
                let y = g.mul(x, gen);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    via[y] = s;
                    let mut w = words[x].clone();
                    w[s] += 1;
                    words[y] = w;
                    bfs.push(y);
                    queue.push_back(y);
                }
            }
        }
        let mut var_of = vec![None; n * k];
        let mut vars = Vec::new();
        for x in 1..n {
            for (s, &gen) in gens.iter().enumerate() {
                let y = g.mul(x, gen);
                let tree = y != 0 && parent[y] == x && via[y] == s;
                if !tree {
                    var_of[x * k + s] = Some(vars.len());
                    vars.push((x, s));
                }
            }
        }
        Self {
            n,
            gens,
            parent,
            via,
            bfs,
            var_of,
            vars,
            words,
        }
    }

    pub fn k(&self) -> usize {
        self.gens.len()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    #[inline]
    pub fn var(&self, x: usize, s: usize) -> Option<usize> {
        if x == 0 {
            None
        } else {
            self.var_of[x * self.k() + s]
        }
    }

    /// Row `x` of the gauge-fixed cocycle as integer combinations of the
    /// variables: entry `h` is the coefficient vector of `f(x, h)`.
    pub fn symbolic_row(&self, g: &FiniteGroup, x: usize) -> Vec<Vec<i64>> {
        let nv = self.nvars();
        let mut row = vec![Vec::new(); self.n];
        row[0] = vec![0; nv];
        for &h in &self.bfs {
            let (p, s) = (self.parent[h], self.via[h]);
            let mut v = row[p].clone();
            if let Some(i) = self.var(g.mul(x, p), s) {
                v[i] += 1;
            }
            row[h] = v;
        }
        row
    }

    /// Linear conditions on the variables that make the expansion a cocycle.
    /// Conditions for tree pairs hold by construction; the remaining ones,
    /// `(x, y, s)` with `(y, s)` off the tree, force the rest by induction on
    /// the length of the third argument.
    pub fn for_each_constraint(&self, g: &FiniteGroup, mut emit: impl FnMut(Vec<i64>)) {
        let k = self.k();
        for x in 1..self.n {
            let row = self.symbolic_row(g, x);
            for y in 1..self.n {
                for s in 0..k {
                    let Some(vy) = self.var(y, s) else { continue };
                    let ys = g.mul(y, self.gens[s]);
                    let mut c: Vec<i64> = row[y].iter().zip(&row[ys]).map(|(a, b)| a - b).collect();
                    if let Some(i) = self.var(g.mul(x, y), s) {
                        c[i] += 1;
                    }
                    c[vy] -= 1;
                    if c.iter().any(|&v| v != 0) {
                        emit(c);
                    }
                }
            }
        }
    }

    /// Full `n x n` table (row-major) of the gauge-fixed cochain with the given
    /// variable values.
    pub fn expand(&self, g: &FiniteGroup, ring: &PrimePowerRing, z: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut t = vec![0u64; n * n];
        for x in 1..n {
            for &h in &self.bfs {
                let (p, s) = (self.parent[h], self.via[h]);
                let add = self.var(g.mul(x, p), s).map_or(0, |i| z[i]);
                t[x * n + h] = ring.add(t[x * n + p], add);
            }
        }
        t
    }

    /// Splits a normalized cocycle `f` (row-major table over `Z/q`) as
    /// `f = f' + dt` with `f'` vanishing on tree edges, where
    /// `dt(x, y) = t(x) + t(y) - t(xy)`. Returns `t` and the variable values
    /// of `f'`.
    pub fn fix(&self, g: &FiniteGroup, ring: &PrimePowerRing, f: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let n = self.n;
        let mut t = vec![0u64; n];
        for &h in &self.bfs {
            let (p, s) = (self.parent[h], self.via[h]);
            if p != 0 {
                let gen = self.gens[s];
                t[h] = ring.sub(ring.add(t[p], t[gen]), f[p * n + gen]);
            }
        }
        let z = self
            .vars
            .iter()
            .map(|&(x, s)| {
                let gen = self.gens[s];
                let xs = g.mul(x, gen);
                ring.add(ring.sub(ring.sub(f[x * n + gen], t[x]), t[gen]), t[xs])
            })
            .collect();
        (t, z)
    }

    /// Variable values of the coboundary of the additive tree-word function
    /// counting letter `s`.
    pub fn residual_coboundary(&self, g: &FiniteGroup, ring: &PrimePowerRing, s: usize) -> Vec<u64> {
        self.vars
            .iter()
            .map(|&(x, t)| {
                let xt = g.mul(x, self.gens[t]);
                ring.reduce(self.words[x][s] + i64::from(t == s) - self.words[xt][s])
            })
            .collect()
    }
}
