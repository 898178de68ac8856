use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest characteristic and degree accepted by [`field_create`].
pub const MAX_CHARACTERISTIC: u32 = 13;
pub const MAX_DEGREE: u32 = 4;

const TABLE_LIMIT: u32 = 256;

/// The field `F_p[t]/(m)`. Elements are indices `a_0 + a_1 p + ... + a_{e-1} p^{e-1}`
/// for the polynomial `a_0 + a_1 t + ...`.
#[derive(Clone)]
pub struct Fq {
    p: u32,
    e: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fq")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Fq {}

impl Serialize for Fq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            p: u32,
            e: u32,
            q: u32,
            modulus: Option<&'a [u32]>,
        }
        Repr {
            p: self.p,
            e: self.e,
            q: self.q,
            modulus: self.modulus.as_deref(),
        }
        .serialize(s)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn field_create(p: u32, e: u32) -> Result<Fq> {
    if !is_prime(p) || p > MAX_CHARACTERISTIC {
        return Err(Error::InvalidField(format!("characteristic {p} must be a prime <= {MAX_CHARACTERISTIC}")));
    }
    if e == 0 || e > MAX_DEGREE {
        return Err(Error::InvalidField(format!("degree {e} must lie in 1..={MAX_DEGREE}")));
    }
    let modulus = if e == 1 {
        None
    } else {
        Some(smallest_irreducible(p, e as usize))
    };
    let mut field = Fq {
        p,
        e,
        q: p.pow(e),
        modulus,
        mul_table: None,
    };
    if field.q <= TABLE_LIMIT {
        let q = field.q;
        let table = (0..q * q).map(|i| field.mul_slow(i / q, i % q)).collect();
        field.mul_table = Some(table);
        let mut seen = vec![false; q as usize];
        for a in field.elements() {
            let b = field.frobenius(a) as usize;
            if seen[b] {
                return Err(Error::InvalidField("Frobenius is not injective".into()));
            }
            seen[b] = true;
        }
    }
    Ok(field)
}

/// Remainder of `a` modulo the monic `m`, coefficients low degree first.
fn prime_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap_or(0);
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * lead) % p;
            }
        }
    }
    r
}

fn monic_with_tail(p: u32, tail_index: u32, degree: usize) -> Vec<u32> {
    // tail coefficients c_0..c_{d-1}, with c_0 most significant in the scan order
    let mut coeffs = vec![0; degree + 1];
    let mut k = tail_index;
    for slot in coeffs[..degree].iter_mut().rev() {
        *slot = k % p;
        k /= p;
    }
    coeffs[degree] = 1;
    coeffs
}

fn is_irreducible_prime(p: u32, m: &[u32]) -> bool {
    let degree = m.len() - 1;
    for d in 1..=degree / 2 {
        for k in 0..p.pow(d as u32) {
            let divisor = monic_with_tail(p, k, d);
            if prime_rem(p, m, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, e: usize) -> Vec<u32> {
    (0..p.pow(e as u32))
        .map(|k| monic_with_tail(p, k, e))
        .find(|m| is_irreducible_prime(p, m))
        .expect("irreducible polynomials exist in every degree")
}

impl Fq {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus, low degree first; `None` for the prime field.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// The generator `t`, or `1` in the prime field.
    pub fn generator(&self) -> u32 {
        if self.e == 1 {
            1
        } else {
            self.p
        }
    }

    pub fn from_prime(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.e)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    pub fn is_prime_field_element(&self, a: u32) -> bool {
        a < self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&s)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// `n * a` for an integer `n`.
    pub fn times(&self, a: u32, n: i64) -> u32 {
        self.mul(a, self.from_prime(n))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; da.len() + db.len()];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let r = match &self.modulus {
            Some(m) => prime_rem(p, &prod, m),
            None => prod,
        };
        self.from_digits(&r[..self.e as usize])
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.q as u64 - 2))
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// The unique `b` with `b^p = a`, namely `a^{p^{e-1}}`.
    pub fn pth_root(&self, a: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(self.e - 1))
    }

    /// `Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^{e-1}}`, as an element of `0..p`.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.e {
            acc = self.add(acc, x);
            x = self.frobenius(x);
        }
        debug_assert!(self.is_prime_field_element(acc));
        acc
    }

    /// Parses a polynomial in `t` such as `2t^2+t+1`.
    pub fn parse(&self, s: &str) -> Result<u32> {
        let bad = || Error::InvalidField(format!("cannot parse field element `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut digits = vec![0i64; self.e as usize];
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, power) = match term.find('t') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = match term[..pos].trim_end_matches('*') {
                        "" => 1,
                        c => c.parse::<i64>().map_err(|_| bad())?,
                    };
                    let k = match &term[pos + 1..] {
                        "" => 1,
                        tail => tail
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?,
                    };
                    (c, k)
                }
            };
            if power > 0 && self.e == 1 {
                return Err(Error::InvalidField(format!("`{s}` uses t in a prime field")));
            }
            if power >= self.e as usize {
                // reduce t^power through repeated multiplication by t
                let mut x = 1;
                for _ in 0..power {
                    x = self.mul(x, self.generator());
                }
                let add = self.times(x, sign * coef);
                let d = self.digits(add);
                for (slot, v) in digits.iter_mut().zip(d) {
                    *slot += v as i64;
                }
            } else {
                digits[power] += sign * coef;
            }
        }
        let d: Vec<u32> = digits.iter().map(|&v| self.from_prime(v)).collect();
        Ok(self.from_digits(&d))
    }

    pub fn format(&self, a: u32) -> String {
        let d = self.digits(a);
        let mut parts = Vec::new();
        for (k, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            parts.push(match k {
                0 => coef,
                1 => format!("{coef}t"),
                _ => format!("{coef}t^{k}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}
