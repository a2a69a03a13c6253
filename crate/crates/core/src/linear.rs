//! Sparse rational linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::Rational;

/// A finite formal sum `sum c_b * b` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Combination<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

/// An `n`-fold tensor, stored as a combination of basis tuples.
pub type Tensor<B> = Combination<Vec<B>>;

impl<B: Ord> Default for Combination<B> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> Combination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
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

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, B, Rational> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (b, v) in &other.terms {
            self.add_term(b.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone, F: FnMut(&B) -> Combination<C>>(&self, mut f: F) -> Combination<C> {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Fallible version of [`Combination::map_linear`].
    pub fn try_map_linear<C, E, F>(&self, mut f: F) -> Result<Combination<C>, E>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Result<Combination<C>, E>,
    {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b)?, c);
        }
        Ok(out)
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for Combination<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a Combination<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> Add for &Combination<B> {
    type Output = Combination<B>;
    fn add(self, rhs: &Combination<B>) -> Combination<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<B: Ord + Clone> Sub for &Combination<B> {
    type Output = Combination<B>;
    fn sub(self, rhs: &Combination<B>) -> Combination<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<B: Ord + Clone> Neg for &Combination<B> {
    type Output = Combination<B>;
    fn neg(self) -> Combination<B> {
        self.scale(&-Rational::one())
    }
}

impl<B: Ord + Clone> Tensor<B> {
    /// Tensor product of two tensors (concatenation of factor tuples).
    pub fn tensor(&self, other: &Tensor<B>) -> Tensor<B> {
        let mut out = Tensor::zero();
        for (a, ca) in self {
            for (b, cb) in other {
                let mut key = a.clone();
                key.extend(b.iter().cloned());
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    /// Replaces factor `slot` of every tuple by the image of a linear map.
    pub fn map_slot<F: FnMut(&B) -> Tensor<B>>(&self, slot: usize, mut f: F) -> Tensor<B> {
        let mut out = Tensor::zero();
        for (key, c) in self {
            for (image, ci) in &f(&key[slot]) {
                let mut k = Vec::with_capacity(key.len() + image.len() - 1);
                k.extend_from_slice(&key[..slot]);
                k.extend(image.iter().cloned());
                k.extend_from_slice(&key[slot + 1..]);
                out.add_term(k, c * ci);
            }
        }
        out
    }
}
