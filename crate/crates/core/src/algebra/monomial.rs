use std::fmt;

use super::BasisKind;

/// A basis monomial of a commutative target algebra.
///
/// `Laurent(n)` is `e^n`. `Symbols` is a product of named commuting
/// symbols, kept as a sorted multiset so equal products compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monomial {
    Laurent(i64),
    Symbols(Vec<String>),
}

impl Monomial {
    pub fn one(kind: BasisKind) -> Self {
        match kind {
            BasisKind::Laurent => Monomial::Laurent(0),
            BasisKind::FreeCommutative => Monomial::Symbols(Vec::new()),
        }
    }

    pub fn symbols<S: AsRef<str>>(names: &[S]) -> Self {
        let mut v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        v.sort();
        Monomial::Symbols(v)
    }

    pub fn symbol(name: &str) -> Self {
        Monomial::Symbols(vec![name.to_string()])
    }

    pub fn kind(&self) -> BasisKind {
        match self {
            Monomial::Laurent(_) => BasisKind::Laurent,
            Monomial::Symbols(_) => BasisKind::FreeCommutative,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Monomial::Laurent(n) => *n == 0,
            Monomial::Symbols(s) => s.is_empty(),
        }
    }

    /// Monomial product; `None` when the two live in different bases.
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        match (self, other) {
            (Monomial::Laurent(a), Monomial::Laurent(b)) => Some(Monomial::Laurent(a + b)),
            (Monomial::Symbols(a), Monomial::Symbols(b)) => {
                let mut merged = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    if a[i] <= b[j] {
                        merged.push(a[i].clone());
                        i += 1;
                    } else {
                        merged.push(b[j].clone());
                        j += 1;
                    }
                }
                merged.extend_from_slice(&a[i..]);
                merged.extend_from_slice(&b[j..]);
                Some(Monomial::Symbols(merged))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Laurent(0) => write!(f, "1"),
            Monomial::Laurent(1) => write!(f, "e"),
            Monomial::Laurent(n) => write!(f, "e^{n}"),
            Monomial::Symbols(s) if s.is_empty() => write!(f, "1"),
            Monomial::Symbols(s) => {
                let mut first = true;
                let mut i = 0;
                while i < s.len() {
                    let mut j = i;
                    while j < s.len() && s[j] == s[i] {
                        j += 1;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if j - i == 1 {
                        write!(f, "{}", s[i])?;
                    } else {
                        write!(f, "{}^{}", s[i], j - i)?;
                    }
                    i = j;
                }
                Ok(())
            }
        }
    }
}
