use std::collections::BTreeSet;

use serde::Serialize;

use super::field::Fq;
use crate::error::{Error, Result};
use crate::report::{tuples, Check, Report};

/// Largest field accepted by [`pdisc_check`], which solves `q^2` equations.
pub const PDISC_MAX_ORDER: u32 = 256;

type Dense = Vec<u32>;

fn trim(mut a: Dense) -> Dense {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn dense_sub(f: &Fq, a: &[u32], b: &[u32]) -> Dense {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(r)
}

fn dense_mul(f: &Fq, a: &[u32], b: &[u32]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = f.add(r[i + j], f.mul(x, y));
        }
    }
    trim(r)
}

/// Remainder modulo a nonzero `m`.
fn dense_rem(f: &Fq, a: &[u32], m: &[u32]) -> Dense {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]).expect("nonzero leading coefficient");
    while r.len() > dm {
        let top = r.len() - 1;
        let factor = f.mul(r[top], lead_inv);
        let shift = top - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, c));
        }
        r = trim(r);
    }
    r
}

fn dense_gcd(f: &Fq, a: &[u32], b: &[u32]) -> Dense {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = dense_rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// `F_q[z]/(m)` for a monic irreducible `m` of degree `p`.
#[derive(Debug, Clone)]
struct Extension {
    modulus: Dense,
}

impl Extension {
    fn new(f: &Fq) -> Self {
        let p = f.characteristic() as usize;
        // tail (c_0, ..., c_{p-1}) in lexicographic order; c_0 = 0 is divisible by z
        let mut tail = vec![0u32; p];
        tail[0] = 1;
        loop {
            let mut m = tail.clone();
            m.push(1);
            if Self::is_irreducible(f, &m) {
                return Self { modulus: m };
            }
            let mut i = p - 1;
            loop {
                tail[i] += 1;
                if tail[i] < f.order() {
                    break;
                }
                tail[i] = 0;
                i -= 1;
            }
        }
    }

    /// Rabin's test for prime degree `p`.
    fn is_irreducible(f: &Fq, m: &[u32]) -> bool {
        let ext = Extension { modulus: m.to_vec() };
        let z = vec![0, 1];
        let zq = ext.pow(f, &z, f.order() as u64);
        if dense_gcd(f, &dense_sub(f, &zq, &z), m).len() != 1 {
            return false;
        }
        let mut x = zq;
        for _ in 1..f.characteristic() {
            x = ext.pow(f, &x, f.order() as u64);
        }
        x == z
    }

    fn mul(&self, f: &Fq, a: &[u32], b: &[u32]) -> Dense {
        dense_rem(f, &dense_mul(f, a, b), &self.modulus)
    }

    fn pow(&self, f: &Fq, a: &[u32], mut k: u64) -> Dense {
        let mut base = a.to_vec();
        let mut acc = vec![1];
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(f, &acc, &base);
            }
            base = self.mul(f, &base, &base);
            k >>= 1;
        }
        acc
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// Solves `u^p - u = a` in the degree-`p` extension of `F_q` by linear algebra
/// over `F_p` and evaluates `u^q - u`.
#[derive(Debug, Clone)]
pub struct FrobeniusSolver {
    field: Fq,
    ext: Extension,
    /// `transform * L` is in reduced row echelon form.
    transform: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl FrobeniusSolver {
    pub fn new(field: &Fq) -> Self {
        let f = field.clone();
        let ext = Extension::new(&f);
        let p = f.characteristic();
        let e = f.degree() as usize;
        let n = ext.degree() * e;
        // column (j, k) of L is the image of t^k z^j
        let mut l = vec![vec![0u32; n]; n];
        for j in 0..ext.degree() {
            for k in 0..e {
                let mut coeff = vec![0u32; e];
                coeff[k] = 1;
                let mut basis = vec![0; j + 1];
                basis[j] = f.from_digits(&coeff);
                let image = dense_sub(&f, &ext.pow(&f, &basis, p as u64), &basis);
                for (row, v) in Self::flatten(&f, &ext, &image).into_iter().enumerate() {
                    l[row][j * e + k] = v;
                }
            }
        }
        let (transform, pivots) = rref_with_transform(p, l);
        Self {
            field: f,
            ext,
            transform,
            pivots,
        }
    }

    fn flatten(f: &Fq, ext: &Extension, a: &[u32]) -> Vec<u32> {
        (0..ext.degree())
            .flat_map(|j| f.digits(a.get(j).copied().unwrap_or(0)))
            .collect()
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    /// A root of `u^p - u = a` for `a` in `F_q`, as coefficients in `z` over `F_q`.
    pub fn root(&self, a: u32) -> Result<Vec<u32>> {
        let f = &self.field;
        let p = f.characteristic();
        let e = f.degree() as usize;
        let b = Self::flatten(f, &self.ext, &[a]);
        let reduced: Vec<u32> = self
            .transform
            .iter()
            .map(|row| row.iter().zip(&b).fold(0, |acc, (&x, &y)| (acc + x * y) % p))
            .collect();
        if reduced[self.pivots.len()..].iter().any(|&v| v != 0) {
            return Err(Error::Inconsistency(format!("u^p - u = {} has no solution", f.format(a))));
        }
        let mut u = vec![0u32; self.ext.degree() * e];
        for (r, &col) in self.pivots.iter().enumerate() {
            u[col] = reduced[r];
        }
        Ok(trim(u.chunks(e).map(|d| f.from_digits(d)).collect()))
    }

    /// `Fr_q(u) - u` for a root `u` of `u^p - u = a`.
    pub fn value(&self, a: u32) -> Result<u32> {
        let u = self.root(a)?;
        self.value_at_root(&u)
    }

    pub fn value_at_root(&self, u: &[u32]) -> Result<u32> {
        let f = &self.field;
        let v = dense_sub(f, &self.ext.pow(f, u, f.order() as u64), u);
        match v.as_slice() {
            [] => Ok(0),
            [c] if f.is_prime_field_element(*c) => Ok(*c),
            _ => Err(Error::Inconsistency("Fr(u) - u is not in the prime field".into())),
        }
    }

    /// `g -> Fr_q(u) - u` with `u^p - u = c g`, indexed by `g`.
    pub fn character(&self, c: u32) -> Result<Vec<u32>> {
        self.field
            .elements()
            .map(|g| self.value(self.field.mul(c, g)))
            .collect()
    }

    /// Adds an element of `F_p` to a root, giving another root.
    pub fn shift_root(&self, u: &[u32], k: u32) -> Vec<u32> {
        let mut r = u.to_vec();
        if r.is_empty() {
            r.push(0);
        }
        r[0] = self.field.add(r[0], k % self.field.characteristic());
        trim(r)
    }
}

fn rref_with_transform(p: u32, mut a: Vec<Vec<u32>>) -> (Vec<Vec<u32>>, Vec<usize>) {
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut t: Vec<Vec<u32>> = (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect();
    let inv = |x: u32| (1..p).find(|y| x * y % p == 1).expect("p is prime");
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..n).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        t.swap(r, pr);
        let s = inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = *x * s % p;
        }
        for x in t[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..n {
            if i != r && a[i][c] != 0 {
                let factor = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + (p - factor) * a[r][j]) % p;
                }
                for j in 0..n {
                    t[i][j] = (t[i][j] + (p - factor) * t[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (t, pivots)
}

pub fn frobenius_character(c: u32, field: &Fq) -> Result<Vec<u32>> {
    FrobeniusSolver::new(field).character(c)
}

#[derive(Debug, Clone, Serialize)]
pub struct PdiscReport {
    pub field: Fq,
    /// `characters[c][g]`.
    pub characters: Vec<Vec<u32>>,
    pub distinct_characters: usize,
    pub hom_order: u32,
    pub report: Report,
}

/// Checks that `c -> frobenius_character(c)` is an additive bijection from
/// `F_q` onto `Hom((F_q, +), F_p)`.
pub fn pdisc_check(field: &Fq) -> Result<PdiscReport> {
    let q = field.order();
    if q > PDISC_MAX_ORDER {
        return Err(Error::SearchCap(format!("field of order {q} exceeds {PDISC_MAX_ORDER}")));
    }
    let p = field.characteristic();
    let solver = FrobeniusSolver::new(field);
    let chars: Vec<Vec<u32>> = field
        .elements()
        .map(|c| solver.character(c))
        .collect::<Result<_>>()?;
    let n = q as usize;
    let mut report = Report::default();
    report.push(Check::run("additive_in_g", tuples(&[n, n, n]), |t| {
        let ch = &chars[t[0]];
        let sum = field.add(t[1] as u32, t[2] as u32) as usize;
        ch[sum] == (ch[t[1]] + ch[t[2]]) % p
    }));
    report.push(Check::run("additive_in_c", tuples(&[n, n, n]), |t| {
        let sum = field.add(t[0] as u32, t[1] as u32) as usize;
        chars[sum][t[2]] == (chars[t[0]][t[2]] + chars[t[1]][t[2]]) % p
    }));
    report.push(Check::run("injective", tuples(&[n, n]), |t| {
        t[0] >= t[1] || chars[t[0]] != chars[t[1]]
    }));
    let distinct = chars.iter().collect::<BTreeSet<_>>().len();
    // |Hom((F_q, +), F_p)| = p^e = q
    let hom_order = q;
    report.push(if distinct as u32 == hom_order {
        Check::pass("image_size")
    } else {
        Check::fail("image_size", vec![distinct])
    });
    report.push(Check::run("matches_trace", tuples(&[n, n]), |t| {
        chars[t[0]][t[1]] == field.trace(field.mul(t[0] as u32, t[1] as u32))
    }));
    Ok(PdiscReport {
        field: field.clone(),
        characters: chars,
        distinct_characters: distinct,
        hom_order,
        report,
    })
}
