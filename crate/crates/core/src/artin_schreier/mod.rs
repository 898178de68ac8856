//! Artin-Schreier theory of the additive group over finite fields.
//!
//! Classes in `F_q[x] / A(F_q[x])` with `A(u) = u^p - u` are represented by
//! reduced polynomials: zero constant term and every exponent prime to `p`.
//! A class `h` is primitive when `h(x+y) - h(x) - h(y)` lies in
//! `A(F_q[x, y])`; the classification scan confirms that the primitive classes
//! are exactly the linear ones.

mod field;
mod frobenius;
mod poly;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use field::{field_create, Fq, MAX_CHARACTERISTIC, MAX_DEGREE};
pub use frobenius::{frobenius_character, pdisc_check, FrobeniusSolver, PdiscReport};
pub use poly::{BivariatePolynomial, FqPolynomial};

/// Default bound on the number of candidates examined by [`classify_primitive`].
pub const DEFAULT_SCAN_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASClass {
    field: Fq,
    representative: FqPolynomial,
}

impl ASClass {
    /// Wraps an already reduced polynomial.
    pub fn new(field: &Fq, representative: FqPolynomial) -> Result<Self> {
        let p = field.characteristic();
        if let Some((k, _)) = representative.terms().find(|&(k, _)| k % p == 0) {
            return Err(Error::InvalidPolynomial(format!(
                "exponent {k} is divisible by the characteristic {p}"
            )));
        }
        Ok(Self {
            field: field.clone(),
            representative,
        })
    }

    pub fn zero(field: &Fq) -> Self {
        Self {
            field: field.clone(),
            representative: FqPolynomial::zero(),
        }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn representative(&self) -> &FqPolynomial {
        &self.representative
    }

    /// The representative as an ordinary polynomial.
    pub fn lift(&self) -> FqPolynomial {
        self.representative.clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            field: self.field.clone(),
            representative: self.representative.add(&self.field, &other.representative),
        }
    }

    pub fn scale(&self, a: u32) -> Self {
        Self {
            field: self.field.clone(),
            representative: self.representative.scale(&self.field, a),
        }
    }

    /// `c * x` for some `c`.
    pub fn is_linear(&self) -> bool {
        self.representative.terms().all(|(k, _)| k == 1)
    }
}

impl Serialize for ASClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.representative.format(&self.field))
    }
}

/// `f = lift(class) + A(witness)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub class: ASClass,
    pub witness: FqPolynomial,
}

pub fn as_reduce(field: &Fq, f: &FqPolynomial) -> Result<Reduction> {
    if f.coeff(0) != 0 {
        return Err(Error::InvalidPolynomial("nonzero constant term".into()));
    }
    let p = field.characteristic();
    let mut rest = f.clone();
    let mut witness = FqPolynomial::zero();
    loop {
        let Some((k, c)) = rest.terms().rev().find(|&(k, _)| k % p == 0) else { break };
        let r = field.pth_root(c);
        let m = k / p;
        // subtract A(r x^m) = c x^k - r x^m
        rest.add_term(field, k, field.neg(c));
        rest.add_term(field, m, r);
        witness.add_term(field, m, r);
    }
    Ok(Reduction {
        class: ASClass {
            field: field.clone(),
            representative: rest,
        },
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Compare `deg_x`, then `deg_y`.
    #[default]
    Lex,
    /// Compare total degree, then `deg_x`.
    DegLex,
}

impl MonomialOrder {
    fn key(self, (a, b): (u32, u32)) -> (u32, u32) {
        match self {
            MonomialOrder::Lex => (a, b),
            MonomialOrder::DegLex => (a + b, a),
        }
    }
}

/// `t = residue + A(witness)`, where no monomial of `residue` other than the
/// constant has both exponents divisible by `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateReduction {
    pub residue: BivariatePolynomial,
    pub witness: BivariatePolynomial,
}

pub fn bivariate_reduce(field: &Fq, t: &BivariatePolynomial, order: MonomialOrder) -> BivariateReduction {
    let p = field.characteristic();
    let mut rest = t.clone();
    let mut witness = BivariatePolynomial::zero();
    loop {
        let top = rest
            .terms()
            .filter(|&((a, b), _)| a % p == 0 && b % p == 0 && (a, b) != (0, 0))
            .max_by_key(|&(m, _)| order.key(m));
        let Some(((a, b), c)) = top else { break };
        let r = field.pth_root(c);
        rest.add_term(field, a, b, field.neg(c));
        rest.add_term(field, a / p, b / p, r);
        witness.add_term(field, a / p, b / p, r);
    }
    BivariateReduction { residue: rest, witness }
}

/// Binomial coefficients `C(n, j) mod p` for `j = 0..=n`.
fn binomial_row(n: u32, p: u32) -> Vec<u32> {
    let mut row = vec![1u32];
    for _ in 0..n {
        let mut next = vec![1u32; row.len() + 1];
        for j in 1..row.len() {
            next[j] = (row[j - 1] + row[j]) % p;
        }
        row = next;
    }
    row
}

/// `h(x + y) - h(x) - h(y)`.
pub fn coboundary_form(h: &ASClass) -> BivariatePolynomial {
    let field = &h.field;
    let mut t = BivariatePolynomial::zero();
    for (i, c) in h.representative.terms() {
        let row = binomial_row(i, field.characteristic());
        for j in 1..i {
            let b = row[j as usize];
            if b != 0 {
                t.add_term(field, j, i - j, field.times(c, b as i64));
            }
        }
    }
    t
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Primitivity {
    pub form: BivariatePolynomial,
    pub reduction: BivariateReduction,
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        self.reduction.residue.is_zero()
    }
}

pub fn is_primitive(h: &ASClass) -> Primitivity {
    is_primitive_with_order(h, MonomialOrder::Lex)
}

pub fn is_primitive_with_order(h: &ASClass, order: MonomialOrder) -> Primitivity {
    let form = coboundary_form(h);
    let reduction = bivariate_reduce(&h.field, &form, order);
    Primitivity { form, reduction }
}

/// Reduced classes with at most two terms and degree at most `max_degree`,
/// the zero class first, then single terms, then pairs.
pub fn scan_set(field: &Fq, max_degree: u32, cap: usize) -> Result<Vec<ASClass>> {
    let p = field.characteristic();
    let exps: Vec<u32> = (1..=max_degree).filter(|k| k % p != 0).collect();
    let units = field.order() as usize - 1;
    let n = exps.len();
    let size = 1 + n * units + n * n.saturating_sub(1) / 2 * units * units;
    if size > cap {
        return Err(Error::SearchCap(format!("scan set of {size} classes exceeds {cap}")));
    }
    let mut out = Vec::with_capacity(size);
    out.push(ASClass::zero(field));
    for &k in &exps {
        for c in 1..field.order() {
            out.push(ASClass::new(field, FqPolynomial::monomial(c, k))?);
        }
    }
    for (i, &k1) in exps.iter().enumerate() {
        for &k2 in &exps[i + 1..] {
            for c1 in 1..field.order() {
                for c2 in 1..field.order() {
                    let poly = FqPolynomial::from_terms(field, [(k1, c1), (k2, c2)]);
                    out.push(ASClass::new(field, poly)?);
                }
            }
        }
    }
    Ok(out)
}

pub fn classify_primitive(field: &Fq, max_degree: u32) -> Result<Vec<ASClass>> {
    classify_primitive_with_cap(field, max_degree, DEFAULT_SCAN_CAP)
}

pub fn classify_primitive_with_cap(field: &Fq, max_degree: u32, cap: usize) -> Result<Vec<ASClass>> {
    Ok(scan_set(field, max_degree, cap)?
        .into_iter()
        .filter(|h| is_primitive(h).is_primitive())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &Fq, terms: &[(u32, u32)]) -> FqPolynomial {
        FqPolynomial::from_terms(f, terms.iter().copied())
    }

    #[test]
    fn reduction_examples() {
        let f = field_create(2, 1).unwrap();
        let r = as_reduce(&f, &poly(&f, &[(2, 1)])).unwrap();
        assert_eq!(r.class.representative(), &poly(&f, &[(1, 1)]));
        let r = as_reduce(&f, &poly(&f, &[(4, 1), (2, 1)])).unwrap();
        assert!(r.class.representative().is_zero());
        assert!(as_reduce(&f, &poly(&f, &[(0, 1)])).is_err());
    }

    #[test]
    fn reduction_certificate() {
        let f = field_create(3, 2).unwrap();
        let g = poly(&f, &[(9, 5), (6, 2), (3, 7), (2, 1)]);
        let r = as_reduce(&f, &g).unwrap();
        let back = r.class.lift().add(&f, &r.witness.artin_schreier(&f));
        assert_eq!(back, g);
    }

    #[test]
    fn primitivity_examples() {
        let f = field_create(2, 1).unwrap();
        let cube = ASClass::new(&f, poly(&f, &[(3, 1)])).unwrap();
        let v = is_primitive(&cube);
        assert!(!v.is_primitive());
        assert_eq!(v.form.format(&f), "x^2y+xy^2");
        assert!(is_primitive(&ASClass::new(&f, poly(&f, &[(1, 1)])).unwrap()).is_primitive());
        assert!(is_primitive(&ASClass::zero(&f)).is_primitive());
        assert!(ASClass::new(&f, poly(&f, &[(2, 1)])).is_err());
    }

    #[test]
    fn small_classifications() {
        let f2 = field_create(2, 1).unwrap();
        assert_eq!(classify_primitive(&f2, 5).unwrap().len(), 2);
        let f3 = field_create(3, 1).unwrap();
        let found = classify_primitive(&f3, 4).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(ASClass::is_linear));
        assert_eq!(classify_primitive(&field_create(2, 2).unwrap(), 4).unwrap().len(), 4);
    }

    #[test]
    fn scan_cap() {
        let f = field_create(5, 1).unwrap();
        assert!(matches!(classify_primitive_with_cap(&f, 7, 10), Err(Error::SearchCap(_))));
    }
}
