use std::collections::BTreeMap;

use super::field::Fq;

/// Sparse univariate polynomial over `F_q`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqPolynomial {
    terms: BTreeMap<u32, u32>,
}

impl FqPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: u32, k: u32) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert(k, c);
        }
        p
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(field: &Fq, terms: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(field, k, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: u32) -> u32 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn add_term(&mut self, field: &Fq, k: u32, c: u32) {
        let v = field.add(self.coeff(k), c);
        if v == 0 {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, v);
        }
    }

    pub fn add(&self, field: &Fq, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in other.terms() {
            r.add_term(field, k, c);
        }
        r
    }

    pub fn sub(&self, field: &Fq, other: &Self) -> Self {
        self.add(field, &other.scale(field, field.neg(1)))
    }

    pub fn scale(&self, field: &Fq, a: u32) -> Self {
        Self::from_terms(field, self.terms().map(|(k, c)| (k, field.mul(c, a))))
    }

    pub fn mul(&self, field: &Fq, other: &Self) -> Self {
        let mut r = Self::zero();
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                r.add_term(field, i + j, field.mul(a, b));
            }
        }
        r
    }

    pub fn pow(&self, field: &Fq, k: u32) -> Self {
        (0..k).fold(Self::monomial(1, 0), |acc, _| acc.mul(field, self))
    }

    /// `A(u) = u^p - u`, expanded by repeated multiplication.
    pub fn artin_schreier(&self, field: &Fq) -> Self {
        self.pow(field, field.characteristic()).sub(field, self)
    }

    pub fn format(&self, field: &Fq) -> String {
        format_terms(field, self.terms().rev().map(|(k, c)| (c, monomial_x(k))))
    }
}

fn monomial_x(k: u32) -> String {
    match k {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{k}"),
    }
}

fn format_terms(field: &Fq, terms: impl Iterator<Item = (u32, String)>) -> String {
    let parts: Vec<String> = terms
        .map(|(c, mono)| {
            let coef = field.format(c);
            if mono.is_empty() {
                coef
            } else if c == 1 {
                mono
            } else if !coef.contains('+') {
                format!("{coef}{mono}")
            } else {
                format!("({coef}){mono}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// Sparse polynomial in `x, y` over `F_q`, keyed by `(deg_x, deg_y)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), u32>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> u32 {
        self.terms.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Terms in increasing lexicographic order of `(deg_x, deg_y)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), u32)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn add_term(&mut self, field: &Fq, a: u32, b: u32, c: u32) {
        let v = field.add(self.coeff(a, b), c);
        if v == 0 {
            self.terms.remove(&(a, b));
        } else {
            self.terms.insert((a, b), v);
        }
    }

    pub fn add(&self, field: &Fq, other: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in other.terms() {
            r.add_term(field, a, b, c);
        }
        r
    }

    pub fn sub(&self, field: &Fq, other: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in other.terms() {
            r.add_term(field, a, b, field.neg(c));
        }
        r
    }

    pub fn mul(&self, field: &Fq, other: &Self) -> Self {
        let mut r = Self::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                r.add_term(field, a1 + a2, b1 + b2, field.mul(c1, c2));
            }
        }
        r
    }

    /// `A(u) = u^p - u`, expanded by repeated multiplication.
    pub fn artin_schreier(&self, field: &Fq) -> Self {
        let mut acc = Self::zero();
        acc.add_term(field, 0, 0, 1);
        for _ in 0..field.characteristic() {
            acc = acc.mul(field, self);
        }
        acc.sub(field, self)
    }

    pub fn format(&self, field: &Fq) -> String {
        format_terms(
            field,
            self.terms().rev().map(|((a, b), c)| {
                let y = match b {
                    0 => String::new(),
                    1 => "y".into(),
                    _ => format!("y^{b}"),
                };
                (c, format!("{}{}", monomial_x(a), y))
            }),
        )
    }
}
