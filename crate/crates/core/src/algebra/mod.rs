//! Exact scalars and the commutative target algebras.
//!
//! Two bases are supported: Laurent polynomials in one parameter `e`, and
//! free commutative polynomials in named symbols. Both are multiplicative
//! bases (a product of monomials is a monomial), which the stuffle algebra
//! relies on to keep letters canonical.

mod element;
mod monomial;
mod parse;
mod split;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use element::AlgebraElement;
pub use monomial::Monomial;
pub use parse::parse_element;
pub use split::RotaBaxterSplit;

pub type Rational = BigRational;

/// Shorthand for the rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKind {
    Laurent,
    FreeCommutative,
}
