//! Exact Smith normal form over the integers.
//!
//! All arithmetic is checked `i64`; an overflow surfaces as [`Error::Overflow`]
//! rather than a wrong answer.

use serde::Serialize;

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

/// Default cap on either dimension for the public entry point.
pub const SNF_DIMENSION_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnfResult {
    /// Invariant factors `d1 | d2 | ...`, one per diagonal slot (`min(rows, cols)`),
    /// including units and trailing zeros.
    pub diagonal: Vec<i64>,
    /// Unimodular `rows x rows` matrix.
    pub left: IntMatrix,
    /// Unimodular `cols x cols` matrix, with `left * input * right = diag`.
    pub right: IntMatrix,
    /// Inverse of `right`.
    #[serde(skip)]
    pub right_inv: IntMatrix,
}

impl SnfResult {
    /// Nontrivial factors, i.e. the invariant factors of the cokernel's torsion part
    /// (units dropped, zeros kept).
    pub fn nontrivial_factors(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d != 1).collect()
    }
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `row[dst] -= q * row[src]`
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, &y) in d.iter_mut().zip(s.iter()) {
        if y != 0 {
            *x = add(*x, -mul(q, y)?)?;
        }
    }
    Ok(())
}

/// `col[dst] -= q * col[src]`
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for row in m.iter_mut() {
        if row[src] != 0 {
            row[dst] = add(row[dst], -mul(q, row[src])?)?;
        }
    }
    Ok(())
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0i64; cols]; a.len()];
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), inner, "dimension mismatch");
        for (k, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = add(out[i][j], mul(x, b[k][j])?)?;
            }
        }
    }
    Ok(out)
}

struct Snf {
    a: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
    right_inv: IntMatrix,
    rows: usize,
    cols: usize,
}

impl Snf {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.left.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        swap_cols(&mut self.a, i, j);
        swap_cols(&mut self.right, i, j);
        self.right_inv.swap(i, j);
    }

    fn row_op(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        row_axpy(&mut self.a, dst, src, q)?;
        row_axpy(&mut self.left, dst, src, q)
    }

    fn col_op(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        col_axpy(&mut self.a, dst, src, q)?;
        col_axpy(&mut self.right, dst, src, q)?;
        // inverse of `col dst -= q col src` is `row src += q row dst` on the inverse
        row_axpy(&mut self.right_inv, src, dst, -q)
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, i64)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = self.a[i][j].unsigned_abs() as i64;
                if v != 0 && best.is_none_or(|(_, _, b)| v < b) {
                    best = Some((i, j, v));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) -> Result<()> {
        let steps = self.rows.min(self.cols);
        for t in 0..steps {
            let Some((i, j)) = self.min_entry(t) else {
                break;
            };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let p = self.a[t][t];
                let mut dirty = None;
                for i in t + 1..self.rows {
                    if self.a[i][t] != 0 {
                        let q = self.a[i][t] / p;
                        self.row_op(i, t, q)?;
                        if self.a[i][t] != 0 {
                            dirty = Some((i, t));
                        }
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j] != 0 {
                        let q = self.a[t][j] / p;
                        self.col_op(j, t, q)?;
                        if self.a[t][j] != 0 {
                            dirty = Some((t, j));
                        }
                    }
                }
                if let Some((i, j)) = dirty {
                    // a remainder smaller than the pivot survived; promote it
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                let p = self.a[t][t];
                let bad = (t + 1..self.rows)
                    .find(|&i| (t + 1..self.cols).any(|j| self.a[i][j] % p != 0));
                match bad {
                    Some(i) => self.row_op(t, i, -1)?,
                    None => break,
                }
            }
            if self.a[t][t] < 0 {
                for x in self.a[t].iter_mut() {
                    *x = -*x;
                }
                for x in self.left[t].iter_mut() {
                    *x = -*x;
                }
            }
        }
        Ok(())
    }
}

fn snf_unchecked_dims(m: &[Vec<i64>]) -> Result<SnfResult> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidTable("ragged matrix".into()));
    }
    let mut s = Snf {
        a: m.to_vec(),
        left: identity(rows),
        right: identity(cols),
        right_inv: identity(cols),
        rows,
        cols,
    };
    s.run()?;
    let diagonal = (0..rows.min(cols)).map(|i| s.a[i][i]).collect();
    Ok(SnfResult {
        diagonal,
        left: s.left,
        right: s.right,
        right_inv: s.right_inv,
    })
}

/// Smith normal form with transformation certificates. Dimensions are capped at
/// [`SNF_DIMENSION_CAP`].
pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<SnfResult> {
    let dim = m.len().max(m.first().map_or(0, Vec::len));
    if dim > SNF_DIMENSION_CAP {
        return Err(Error::DimensionCap {
            dim,
            cap: SNF_DIMENSION_CAP,
        });
    }
    snf_unchecked_dims(m)
}

/// Internal entry point without the dimension cap (used on tall relation matrices).
pub(crate) fn smith_normal_form_uncapped(m: &[Vec<i64>]) -> Result<SnfResult> {
    snf_unchecked_dims(m)
}

/// Row echelon basis of an integer lattice `L` that is known to contain
/// `modulus * Z^k`. Entries are kept reduced modulo `modulus`, which keeps every
/// intermediate value bounded.
#[derive(Debug, Clone)]
pub(crate) struct LatticeBuilder {
    modulus: i64,
    pivots: Vec<Option<Vec<i64>>>,
}

impl LatticeBuilder {
    pub fn new(ncols: usize, modulus: i64) -> Self {
        assert!(modulus > 0);
        Self {
            modulus,
            pivots: vec![None; ncols],
        }
    }

    pub fn insert(&mut self, row: &[i64]) {
        let m = self.modulus;
        let mut row: Vec<i64> = row.iter().map(|x| x.rem_euclid(m)).collect();
        for c in 0..row.len() {
            if row[c] == 0 {
                continue;
            }
            let Some(pivot) = self.pivots[c].as_mut() else {
                self.pivots[c] = Some(row);
                return;
            };
            // Euclid on column c between the pivot row and the incoming row
            while row[c] != 0 {
                let q = pivot[c] / row[c];
                for (p, r) in pivot.iter_mut().zip(row.iter()) {
                    *p = (*p - (q * *r) % m).rem_euclid(m);
                }
                std::mem::swap(pivot, &mut row);
            }
        }
    }

    /// Generators of the lattice: echelon rows plus `modulus * e_i`.
    pub fn generators(&self) -> IntMatrix {
        let k = self.pivots.len();
        let mut out: IntMatrix = self.pivots.iter().flatten().cloned().collect();
        for i in 0..k {
            let mut r = vec![0; k];
            r[i] = self.modulus;
            out.push(r);
        }
        out
    }
}
