use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{BasisKind, Monomial, Rational};
use crate::error::{Error, Result};

/// A finite linear combination of basis monomials with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of algebra elements. The binary operators panic on a basis mismatch; use
/// the `try_*` methods where the operands come from untrusted input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    kind: BasisKind,
    terms: BTreeMap<Monomial, Rational>,
}

impl AlgebraElement {
    pub fn zero(kind: BasisKind) -> Self {
        AlgebraElement {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: BasisKind) -> Self {
        Self::constant(kind, Rational::one())
    }

    pub fn constant(kind: BasisKind, c: Rational) -> Self {
        Self::term(Monomial::one(kind), c)
    }

    pub fn term(monomial: Monomial, c: Rational) -> Self {
        let mut out = Self::zero(monomial.kind());
        if !c.is_zero() {
            out.terms.insert(monomial, c);
        }
        out
    }

    pub fn monomial(monomial: Monomial) -> Self {
        Self::term(monomial, Rational::one())
    }

    /// `e^n`.
    pub fn eps_pow(n: i64) -> Self {
        Self::monomial(Monomial::Laurent(n))
    }

    /// Laurent polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn laurent<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero(BasisKind::Laurent);
        for (n, c) in terms {
            out.add_term(Monomial::Laurent(n), c);
        }
        out
    }

    pub fn symbol(name: &str) -> Self {
        Self::monomial(Monomial::symbol(name))
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Laurent exponents present, ascending. Empty for symbolic elements.
    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().filter_map(|m| match m {
            Monomial::Laurent(n) => Some(*n),
            Monomial::Symbols(_) => None,
        })
    }

    /// Adds `c * m` in place. Panics if `m` is in the wrong basis.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.kind(), self.kind, "monomial basis mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        AlgebraElement {
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.kind);
        }
        AlgebraElement {
            kind: self.kind,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn check_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch {
                left: self.kind,
                right: other.kind,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = Self::zero(self.kind);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb).expect("kinds already checked");
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.kind);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("basis kind mismatch in add")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("basis kind mismatch in sub")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("basis kind mismatch in mul")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            kind: self.kind,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        &self * &rhs
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}
