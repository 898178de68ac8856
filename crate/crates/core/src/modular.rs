//! Linear algebra over the local rings `Z/p^k`.
//!
//! Every ideal of `Z/p^k` is `p^v Z/p^k`, so pivots are chosen by minimal
//! `p`-adic valuation and elimination never needs anything but exact division.

/// The ring `Z/p^k`, elements stored as representatives in `[0, p^k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePowerRing {
    pub p: u64,
    pub k: u32,
    pub q: u64,
}

impl PrimePowerRing {
    pub fn new(p: u64, k: u32) -> Self {
        assert!(k >= 1);
        Self { p, k, q: p.pow(k) }
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.q as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.q
    }

    /// Valuation; `k` for zero.
    pub fn val(&self, mut x: u64) -> u32 {
        if x == 0 {
            return self.k;
        }
        let mut v = 0;
        while x.is_multiple_of(self.p) {
            x /= self.p;
            v += 1;
        }
        v
    }

    pub fn pow_p(&self, v: u32) -> u64 {
        self.p.pow(v)
    }

    /// Inverse of a unit.
    pub fn unit_inv(&self, u: u64) -> u64 {
        let (g, x, _) = ext_gcd(u as i64, self.q as i64);
        debug_assert_eq!(g, 1, "{u} is not a unit mod {}", self.q);
        self.reduce(x)
    }

    /// Splits a nonzero `x` as `unit * p^v`, returning `(unit, v)`.
    pub fn split(&self, x: u64) -> (u64, u32) {
        let v = self.val(x);
        let mut u = x;
        for _ in 0..v {
            u /= self.p;
        }
        (u % self.q, v)
    }

    /// `dst -= c * src`
    pub fn axpy(&self, dst: &mut [u64], c: u64, src: &[u64]) {
        if c == 0 {
            return;
        }
        let neg = self.q - c % self.q;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = (*d + neg * s) % self.q;
            }
        }
    }

    pub fn scale(&self, v: &mut [u64], c: u64) {
        for x in v.iter_mut() {
            *x = (*x * c) % self.q;
        }
    }
}

pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn leading(v: &[u64]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

/// Row echelon form of a row module, built one row at a time. Keeps at most one
/// row per leading column, so memory is bounded by `ncols^2` regardless of how
/// many rows are streamed in.
#[derive(Debug, Clone)]
pub struct Echelon {
    ring: PrimePowerRing,
    pivots: Vec<Option<Vec<u64>>>,
}

impl Echelon {
    pub fn new(ring: PrimePowerRing, ncols: usize) -> Self {
        Self {
            ring,
            pivots: vec![None; ncols],
        }
    }

    pub fn insert(&mut self, mut row: Vec<u64>) {
        let r = self.ring;
        loop {
            let Some(c) = leading(&row) else { return };
            let (u, v) = r.split(row[c]);
            match &mut self.pivots[c] {
                None => {
                    r.scale(&mut row, r.unit_inv(u));
                    self.pivots[c] = Some(row);
                    return;
                }
                Some(p) => {
                    let pv = r.val(p[c]);
                    if v >= pv {
                        let f = row[c] / r.pow_p(pv);
                        r.axpy(&mut row, f, p);
                    } else {
                        r.scale(&mut row, r.unit_inv(u));
                        std::mem::swap(p, &mut row);
                    }
                }
            }
        }
    }

    pub fn into_rows(self) -> Vec<Vec<u64>> {
        self.pivots.into_iter().flatten().collect()
    }
}

/// Smith form of a matrix over `Z/p^k`, keeping the column transform `W` and its
/// inverse. Row transforms are not needed by any caller and are discarded.
#[derive(Debug, Clone)]
pub struct ModSnf {
    /// Valuation of the `i`-th diagonal entry, for every column `i`; `k` past the rank.
    pub vals: Vec<u32>,
    /// Columns of `W` (`w_cols[j]` is column `j`).
    pub w_cols: Vec<Vec<u64>>,
    /// Rows of `W^{-1}`.
    pub w_inv: Vec<Vec<u64>>,
}

pub fn mod_snf(ring: PrimePowerRing, mut a: Vec<Vec<u64>>, ncols: usize) -> ModSnf {
    let r = ring;
    let unit = |n: usize| -> Vec<Vec<u64>> {
        (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect()
    };
    let mut w_cols = unit(ncols);
    let mut w_inv = unit(ncols);
    let nrows = a.len();
    let mut vals = vec![r.k; ncols];
    for t in 0..nrows.min(ncols) {
        let mut best: Option<(usize, usize, u32)> = None;
        'scan: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let v = r.val(x);
                    if best.is_none_or(|(_, _, b)| v < b) {
                        best = Some((i, j, v));
                        if v == 0 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        let Some((i, j, v)) = best else { break };
        a.swap(t, i);
        if j != t {
            for row in a.iter_mut() {
                row.swap(t, j);
            }
            w_cols.swap(t, j);
            w_inv.swap(t, j);
        }
        let (u, _) = r.split(a[t][t]);
        let ui = r.unit_inv(u);
        r.scale(&mut a[t], ui);
        let pv = r.pow_p(v);
        let (head, tail) = a.split_at_mut(t + 1);
        let pivot_row = &head[t];
        for row in tail.iter_mut() {
            if row[t] != 0 {
                let f = row[t] / pv;
                r.axpy(row, f, pivot_row);
            }
        }
        for j in t + 1..ncols {
            let x = a[t][j];
            if x != 0 {
                let f = x / pv;
                a[t][j] = 0;
                // col_j -= f col_t on W; row_t += f row_j on W^{-1}
                let (lo, hi) = w_cols.split_at_mut(j);
                r.axpy(&mut hi[0], f, &lo[t]);
                let (lo, hi) = w_inv.split_at_mut(j);
                let neg = r.q - f;
                r.axpy(&mut lo[t], neg, &hi[0]);
            }
        }
        vals[t] = v;
    }
    ModSnf {
        vals,
        w_cols,
        w_inv,
    }
}

/// Howell form of a submodule of `(Z/p^k)^n`, with every row tracked as a
/// combination of the inserted generators. Reduction against it yields the
/// lexicographically minimal representative of a coset.
#[derive(Debug, Clone)]
pub struct Howell {
    ring: PrimePowerRing,
    ngens: usize,
    rows: Vec<Option<(Vec<u64>, Vec<u64>)>>,
}

impl Howell {
    pub fn new(ring: PrimePowerRing, ncols: usize, ngens: usize) -> Self {
        Self {
            ring,
            ngens,
            rows: vec![None; ncols],
        }
    }

    /// Inserts generator number `g`.
    pub fn insert_generator(&mut self, g: usize, v: Vec<u64>) {
        let mut combo = vec![0; self.ngens];
        combo[g] = 1;
        self.insert(v, combo);
    }

    fn insert(&mut self, v: Vec<u64>, combo: Vec<u64>) {
        let r = self.ring;
        let mut queue = vec![(v, combo)];
        while let Some((mut v, mut combo)) = queue.pop() {
            loop {
                let Some(c) = leading(&v) else { break };
                let (u, val) = r.split(v[c]);
                match &mut self.rows[c] {
                    None => {
                        let ui = r.unit_inv(u);
                        r.scale(&mut v, ui);
                        r.scale(&mut combo, ui);
                        if val > 0 {
                            let ann = r.pow_p(r.k - val);
                            let mut v2 = v.clone();
                            let mut c2 = combo.clone();
                            r.scale(&mut v2, ann);
                            r.scale(&mut c2, ann);
                            queue.push((v2, c2));
                        }
                        self.rows[c] = Some((v, combo));
                        break;
                    }
                    Some((pv, pc)) => {
                        let pval = r.val(pv[c]);
                        if val >= pval {
                            let f = v[c] / r.pow_p(pval);
                            r.axpy(&mut v, f, pv);
                            r.axpy(&mut combo, f, pc);
                        } else {
                            let ui = r.unit_inv(u);
                            r.scale(&mut v, ui);
                            r.scale(&mut combo, ui);
                            std::mem::swap(pv, &mut v);
                            std::mem::swap(pc, &mut combo);
                            let ann = r.pow_p(r.k - val);
                            let mut v2 = pv.clone();
                            let mut c2 = pc.clone();
                            r.scale(&mut v2, ann);
                            r.scale(&mut c2, ann);
                            queue.push((v2, c2));
                        }
                    }
                }
            }
        }
    }

    /// Reduces `x` to the lexicographically minimal element of `x + span`.
    /// Returns the reduced vector and the generator combination `c` with
    /// `x = reduced + sum c_g gen_g`.
    pub fn reduce(&self, x: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let r = self.ring;
        let mut x = x.to_vec();
        let mut used = vec![0; self.ngens];
        for (c, row) in self.rows.iter().enumerate() {
            if let Some((pv, pc)) = row {
                if x[c] == 0 {
                    continue;
                }
                let pval = r.val(pv[c]);
                let f = x[c] / r.pow_p(pval);
                if f != 0 {
                    r.axpy(&mut x, f, pv);
                    let neg = r.q - f % r.q;
                    r.axpy(&mut used, neg, pc);
                }
            }
        }
        (x, used)
    }
}
