//! `H^2(G, Z/p^k)` in gauge-fixed coordinates.

use super::gauge::Gauge;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::modular::{mod_snf, Echelon, Howell, PrimePowerRing};
use crate::snf::smith_normal_form_uncapped;

#[derive(Debug, Clone)]
pub(crate) struct PrimeSolve {
    pub ring: PrimePowerRing,
    /// Cocycle space `Z = ker C` is generated by `p^(k - e_i) W[:, i]`.
    e: Vec<u32>,
    w_inv: Vec<Vec<u64>>,
    /// Columns `i` with `e_i > 0`.
    kept: Vec<usize>,
    /// Maps `Z`-coordinates (over `kept`) to invariant coordinates.
    to_local: Vec<Vec<i64>>,
    /// Exponents of the nontrivial invariant factors, ascending.
    pub exps: Vec<u32>,
    /// Canonical cocycle (variable values) for each invariant generator.
    pub gens: Vec<Vec<u64>>,
    coboundaries: Howell,
}

impl PrimeSolve {
    pub fn new(g: &FiniteGroup, gauge: &Gauge, ring: PrimePowerRing) -> Result<Self> {
        let nv = gauge.nvars();
        let k = gauge.k();
        let mut ech = Echelon::new(ring, nv);
        gauge.for_each_constraint(g, |row| {
            ech.insert(row.into_iter().map(|x| ring.reduce(x)).collect());
        });
        let snf = mod_snf(ring, ech.into_rows(), nv);
        let e = snf.vals.clone();
        let kept: Vec<usize> = (0..nv).filter(|&i| e[i] > 0).collect();

        let mut coboundaries = Howell::new(ring, nv, k);
        let mut relations: Vec<Vec<i64>> = Vec::with_capacity(k + kept.len());
        let mut partial = Self {
            ring,
            e,
            w_inv: snf.w_inv,
            kept,
            to_local: Vec::new(),
            exps: Vec::new(),
            gens: Vec::new(),
            coboundaries: Howell::new(ring, nv, k),
        };
        for s in 0..k {
            let b = gauge.residual_coboundary(g, &ring, s);
            let c = partial.z_coords(&b)?;
            relations.push(c.iter().map(|&x| x as i64).collect());
            coboundaries.insert_generator(s, b);
        }
        let m = partial.kept.len();
        for (j, &i) in partial.kept.iter().enumerate() {
            let mut row = vec![0i64; m];
            row[j] = ring.pow_p(partial.e[i]) as i64;
            relations.push(row);
        }
        partial.coboundaries = coboundaries;
        if m == 0 {
            return Ok(partial);
        }
        let rel_snf = smith_normal_form_uncapped(&relations)?;
        let local: Vec<usize> = (0..m).filter(|&j| rel_snf.diagonal[j] != 1).collect();
        let right_inv = rel_snf.right_inv.clone();
        partial.to_local = (0..m)
            .map(|i| local.iter().map(|&j| rel_snf.right[i][j]).collect())
            .collect();
        partial.exps = local
            .iter()
            .map(|&j| ring.val(rel_snf.diagonal[j] as u64))
            .collect();
        for &j in &local {
            let mut z = vec![0u64; nv];
            for (t, &i) in partial.kept.iter().enumerate() {
                let c = ring.reduce(right_inv[j][t]);
                if c != 0 {
                    let scale = ring.mul(c, ring.pow_p(ring.k - partial.e[i]));
                    for (zv, &w) in z.iter_mut().zip(&snf.w_cols[i]) {
                        *zv = ring.add(*zv, ring.mul(scale, w));
                    }
                }
            }
            partial.gens.push(partial.coboundaries.reduce(&z).0);
        }
        Ok(partial)
    }

    /// Coordinates of a cocycle in the generators of `Z`, over `kept`.
    fn z_coords(&self, z: &[u64]) -> Result<Vec<u64>> {
        let r = &self.ring;
        let mut out = Vec::with_capacity(self.kept.len());
        for (i, row) in self.w_inv.iter().enumerate() {
            let y = row
                .iter()
                .zip(z)
                .fold(0u64, |acc, (&a, &b)| r.add(acc, r.mul(a, b)));
            let step = r.pow_p(r.k - self.e[i]);
            if y % step != 0 {
                return Err(Error::InvalidCocycle("cochain violates the cocycle identity".into()));
            }
            if self.e[i] > 0 {
                out.push(y / step);
            }
        }
        Ok(out)
    }

    /// Class of a gauge-fixed cocycle in invariant coordinates.
    pub fn class_of(&self, z: &[u64]) -> Result<Vec<u64>> {
        let c = self.z_coords(z)?;
        Ok(self
            .exps
            .iter()
            .enumerate()
            .map(|(j, &a)| {
                let d = self.ring.pow_p(a) as i64;
                let s = c
                    .iter()
                    .zip(&self.to_local)
                    .fold(0i64, |acc, (&ci, row)| (acc + (ci as i64 % d) * row[j].rem_euclid(d)) % d);
                s as u64
            })
            .collect())
    }

    /// Lexicographically minimal cocycle of the class with the given
    /// coordinates.
    pub fn representative(&self, coords: &[u64]) -> Vec<u64> {
        let r = &self.ring;
        let nv = self.coboundaries_len();
        let mut z = vec![0u64; nv];
        for (c, g) in coords.iter().zip(&self.gens) {
            let c = *c % r.q;
            if c != 0 {
                for (zv, &gv) in z.iter_mut().zip(g) {
                    *zv = r.add(*zv, r.mul(c, gv));
                }
            }
        }
        self.coboundaries.reduce(&z).0
    }

    /// If `z` is a coboundary, the coefficients `l_s` with
    /// `z = sum l_s b_s`.
    pub fn coboundary_combination(&self, z: &[u64]) -> Option<Vec<u64>> {
        let (rest, combo) = self.coboundaries.reduce(z);
        rest.iter().all(|&x| x == 0).then_some(combo)
    }

    fn coboundaries_len(&self) -> usize {
        self.w_inv.len()
    }
}
