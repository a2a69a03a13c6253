//! The convolution group of unital linear maps `H -> A`, characters, and the
//! recursive inverse and Bogoliubov-type decomposition.
//!
//! The recursive constructions here are kept deliberately literal: they are
//! the reference against which the closed formulas in [`crate::universal`]
//! are checked.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, BasisKind, RotaBaxterSplit};
use crate::coalgebra::iterated_reduced;
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraSpec, HopfElement, HopfMonomial};
use crate::linear::Combination;

/// A linear map `H -> A` sending `1_H` to `1_A`, known on every basis
/// monomial up to the truncation degree.
pub trait HopfMap {
    fn spec(&self) -> &Arc<HopfAlgebraSpec>;
    fn kind(&self) -> BasisKind;

    /// Value on a monomial of degree at most the truncation degree.
    fn value(&self, m: &HopfMonomial) -> AlgebraElement;

    /// Linear extension, with truncation checked.
    fn eval(&self, x: &HopfElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(self.kind());
        for (m, c) in x {
            self.spec().ensure_degree(m)?;
            out = &out + &self.value(m).scale(c);
        }
        Ok(out)
    }
}

/// Element of `U(H, A)` stored as an explicit table over the monomial basis.
#[derive(Debug, Clone)]
pub struct UnitalLinMap {
    spec: Arc<HopfAlgebraSpec>,
    kind: BasisKind,
    values: BTreeMap<HopfMonomial, AlgebraElement>,
}

impl PartialEq for UnitalLinMap {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec)
            && self.kind == other.kind
            && self.values == other.values
    }
}

impl HopfMap for UnitalLinMap {
    fn spec(&self) -> &Arc<HopfAlgebraSpec> {
        &self.spec
    }

    fn kind(&self) -> BasisKind {
        self.kind
    }

    fn value(&self, m: &HopfMonomial) -> AlgebraElement {
        if m.is_one() {
            return AlgebraElement::one(self.kind);
        }
        self.values
            .get(m)
            .cloned()
            .unwrap_or_else(|| panic!("monomial of degree {} beyond truncation", m.degree()))
    }
}

/// The pair `(phi_+, phi_-)` with `phi_- * phi = phi_+`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<M> {
    pub plus: M,
    pub minus: M,
}

impl UnitalLinMap {
    /// Builds the table by evaluating `f` on every monomial of degree
    /// `1..=N`, in canonical order.
    pub fn from_fn<F>(spec: Arc<HopfAlgebraSpec>, kind: BasisKind, mut f: F) -> Result<Self>
    where
        F: FnMut(&HopfMonomial) -> Result<AlgebraElement>,
    {
        let mut values = BTreeMap::new();
        for m in spec.monomials() {
            let v = f(m)?;
            if v.kind() != kind {
                return Err(Error::KindMismatch {
                    left: kind,
                    right: v.kind(),
                });
            }
            values.insert(m.clone(), v);
        }
        Ok(UnitalLinMap { spec, kind, values })
    }

    /// Table from explicit values; monomials not listed map to zero.
    pub fn new(spec: Arc<HopfAlgebraSpec>, kind: BasisKind, values: BTreeMap<HopfMonomial, AlgebraElement>) -> Result<Self> {
        for m in values.keys() {
            if m.is_one() {
                return Err(Error::NotAugmented);
            }
            spec.ensure_degree(m)?;
        }
        Self::from_fn(spec, kind, |m| Ok(values.get(m).cloned().unwrap_or_else(|| AlgebraElement::zero(kind))))
    }

    /// `u_A o eta`.
    pub fn unit(spec: Arc<HopfAlgebraSpec>, kind: BasisKind) -> Self {
        Self::from_fn(spec, kind, |_| Ok(AlgebraElement::zero(kind))).expect("zero map")
    }

    pub fn values(&self) -> impl Iterator<Item = (&HopfMonomial, &AlgebraElement)> {
        self.values.iter()
    }

    /// Copy with the value at one monomial replaced.
    pub fn with_value(&self, m: &HopfMonomial, v: AlgebraElement) -> Result<Self> {
        if m.is_one() {
            return Err(Error::NotAugmented);
        }
        self.spec.ensure_degree(m)?;
        if v.kind() != self.kind {
            return Err(Error::KindMismatch {
                left: self.kind,
                right: v.kind(),
            });
        }
        let mut out = self.clone();
        out.values.insert(m.clone(), v);
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind || !(Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    /// `(f * g)(h) = m_A (f (x) g) D(h)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let spec = self.spec.clone();
        Self::from_fn(spec.clone(), self.kind, |m| {
            let mut acc = AlgebraElement::zero(self.kind);
            for (pair, c) in &spec.coproduct(&Combination::basis(m.clone()))? {
                acc = &acc + &(&self.value(&pair[0]) * &other.value(&pair[1])).scale(c);
            }
            Ok(acc)
        })
    }

    /// Left inverse built degree by degree:
    /// `g(h) = -f(h) - sum g(h'1) f(h'2)` over the reduced coproduct.
    pub fn inverse_recursive(&self) -> Self {
        let mut values: BTreeMap<HopfMonomial, AlgebraElement> = BTreeMap::new();
        let lookup = |values: &BTreeMap<HopfMonomial, AlgebraElement>, m: &HopfMonomial| {
            if m.is_one() {
                AlgebraElement::one(self.kind)
            } else {
                values[m].clone()
            }
        };
        for m in self.spec.monomials() {
            let mut acc = -&self.value(m);
            for (pair, c) in &self.spec.reduced_coproduct(&Combination::basis(m.clone())).expect("degree checked") {
                acc = &acc - &(&lookup(&values, &pair[0]) * &self.value(&pair[1])).scale(c);
            }
            values.insert(m.clone(), acc);
        }
        UnitalLinMap {
            spec: self.spec.clone(),
            kind: self.kind,
            values,
        }
    }

    /// Inverse as the finite geometric series
    /// `sum_k (-1)^k m^[k] f^(x)k D'^[k]`.
    pub fn inverse_series(&self) -> Self {
        Self::from_fn(self.spec.clone(), self.kind, |m| {
            let mut acc = AlgebraElement::zero(self.kind);
            let x = Combination::basis(m.clone());
            for k in 1..=m.degree() as usize {
                let term = product_over_tensor(self, &iterated_reduced(self.spec.as_ref(), &x, k));
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            Ok(acc)
        })
        .expect("kinds agree")
    }

    /// Whether `f(m1 m2) = f(m1) f(m2)` for all monomials with
    /// `deg m1 + deg m2 <= max_degree`.
    pub fn is_character(&self, max_degree: u32) -> bool {
        self.first_multiplicativity_failure(max_degree).is_none()
    }

    pub fn first_multiplicativity_failure(&self, max_degree: u32) -> Option<(HopfMonomial, HopfMonomial)> {
        let max_degree = max_degree.min(self.spec.truncation());
        let ms = self.spec.monomials_up_to(max_degree);
        for a in &ms {
            for b in &ms {
                if a.degree() + b.degree() > max_degree || b < a {
                    continue;
                }
                if self.value(&a.mul(b)) != &self.value(a) * &self.value(b) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    /// Bogoliubov preparation
    /// `bar(h) = phi(h) - sum p-(bar(h'1)) phi(h'2)`, recursively by degree.
    pub fn bogoliubov_prepare(&self, split: RotaBaxterSplit) -> Result<Self> {
        let mut values: BTreeMap<HopfMonomial, AlgebraElement> = BTreeMap::new();
        for m in self.spec.monomials() {
            let mut acc = self.value(m);
            for (pair, c) in &self.spec.reduced_coproduct(&Combination::basis(m.clone()))? {
                let prepared = &values[&pair[0]];
                acc = &acc - &(&split.minus(prepared)? * &self.value(&pair[1])).scale(c);
            }
            values.insert(m.clone(), acc);
        }
        Ok(UnitalLinMap {
            spec: self.spec.clone(),
            kind: self.kind,
            values,
        })
    }

    /// `phi_+ = p+ o bar`, `phi_- = -p- o bar` on the augmentation ideal.
    pub fn brb_recursive(&self, split: RotaBaxterSplit) -> Result<Decomposition<Self>> {
        let prepared = self.bogoliubov_prepare(split)?;
        let plus = Self::from_fn(self.spec.clone(), self.kind, |m| split.plus(&prepared.value(m)))?;
        let minus = Self::from_fn(self.spec.clone(), self.kind, |m| Ok(-&split.minus(&prepared.value(m))?))?;
        Ok(Decomposition { plus, minus })
    }

    /// Whether every value on the augmentation ideal lies in `A+`.
    pub fn in_plus_sector(&self, split: RotaBaxterSplit) -> Result<bool> {
        for v in self.values.values() {
            if !split.in_plus(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every value on the augmentation ideal lies in `A-`.
    pub fn in_minus_sector(&self, split: RotaBaxterSplit) -> Result<bool> {
        for v in self.values.values() {
            if !split.in_minus(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First monomial (in canonical order) where two maps differ.
    pub fn first_difference(&self, other: &Self) -> Option<HopfMonomial> {
        self.spec
            .monomials()
            .iter()
            .find(|m| self.value(m) != other.value(m))
            .cloned()
    }
}

/// `sum c * f(m1) ... f(mk)` over a tensor of monomials.
pub(crate) fn product_over_tensor<M: HopfMap + ?Sized>(f: &M, t: &crate::linear::Tensor<HopfMonomial>) -> AlgebraElement {
    let mut acc = AlgebraElement::zero(f.kind());
    for (factors, c) in t {
        let mut prod = AlgebraElement::one(f.kind());
        for m in factors {
            prod = &prod * &f.value(m);
            if prod.is_zero() {
                break;
            }
        }
        acc = &acc + &prod.scale(c);
    }
    acc
}

/// A character `H -> A`, determined by its values on generators.
#[derive(Debug, Clone)]
pub struct Character {
    spec: Arc<HopfAlgebraSpec>,
    kind: BasisKind,
    generator_values: Vec<AlgebraElement>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec)
            && self.kind == other.kind
            && self.generator_values == other.generator_values
    }
}

impl HopfMap for Character {
    fn spec(&self) -> &Arc<HopfAlgebraSpec> {
        &self.spec
    }

    fn kind(&self) -> BasisKind {
        self.kind
    }

    fn value(&self, m: &HopfMonomial) -> AlgebraElement {
        m.generators()
            .iter()
            .fold(AlgebraElement::one(self.kind), |acc, &g| &acc * &self.generator_values[g])
    }
}

impl Character {
    pub fn new(spec: Arc<HopfAlgebraSpec>, kind: BasisKind, generator_values: Vec<AlgebraElement>) -> Result<Self> {
        if generator_values.len() != spec.generators().len() {
            return Err(Error::InvalidSpec(format!(
                "expected {} generator values, got {}",
                spec.generators().len(),
                generator_values.len()
            )));
        }
        if let Some(v) = generator_values.iter().find(|v| v.kind() != kind) {
            return Err(Error::KindMismatch {
                left: kind,
                right: v.kind(),
            });
        }
        Ok(Character {
            spec,
            kind,
            generator_values,
        })
    }

    /// Character from `(generator name, value)` pairs; unlisted generators
    /// map to zero.
    pub fn from_named<'a, I>(spec: Arc<HopfAlgebraSpec>, kind: BasisKind, named: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, AlgebraElement)>,
    {
        let mut values = vec![AlgebraElement::zero(kind); spec.generators().len()];
        for (name, v) in named {
            values[spec.generator_index(name)?] = v;
        }
        Self::new(spec, kind, values)
    }

    pub fn generator_values(&self) -> &[AlgebraElement] {
        &self.generator_values
    }

    /// The multiplicative extension as an explicit table.
    pub fn to_lin_map(&self) -> UnitalLinMap {
        UnitalLinMap::from_fn(self.spec.clone(), self.kind, |m| Ok(self.value(m))).expect("kinds agree")
    }

    /// Restriction of a map that is known to be multiplicative.
    pub fn from_lin_map(f: &UnitalLinMap) -> Self {
        let spec = f.spec.clone();
        let values = (0..spec.generators().len()).map(|i| f.value(&spec.generator(i))).collect();
        Character {
            spec,
            kind: f.kind,
            generator_values: values,
        }
    }
}
