//! Seeded generators for test data. The same seed always yields the same
//! sequence of values on every platform.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, BasisKind, Monomial, Rational};
use crate::convolution::{Character, UnitalLinMap};
use crate::diffeo::FormalDiffeo;
use crate::hopf::HopfAlgebraSpec;
use crate::stuffle::{StuffleElement, Word};
use crate::universal::StuffleFunctional;

/// Exponent range of sampled Laurent monomials.
pub const EXPONENTS: std::ops::RangeInclusive<i64> = -3..=3;

const SYMBOLS: [&str; 3] = ["a", "b", "c"];

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Non-zero numerator in `[-9, 9]`, denominator in `{1, 2, 3}`.
    pub fn rational(&mut self) -> Rational {
        let mut num = 0;
        while num == 0 {
            num = self.rng.gen_range(-9i64..=9);
        }
        let den = self.rng.gen_range(1i64..=3);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn exponent(&mut self) -> i64 {
        self.rng.gen_range(EXPONENTS)
    }

    /// One to three terms with exponents in [`EXPONENTS`].
    pub fn laurent(&mut self) -> AlgebraElement {
        self.laurent_in(EXPONENTS)
    }

    pub fn laurent_in(&mut self, exponents: std::ops::RangeInclusive<i64>) -> AlgebraElement {
        let terms = self.rng.gen_range(1..=3);
        let mut out = AlgebraElement::zero(BasisKind::Laurent);
        for _ in 0..terms {
            let e = self.rng.gen_range(exponents.clone());
            let c = self.rational();
            out.add_term(Monomial::Laurent(e), c);
        }
        out
    }

    /// One to three terms, each a product of up to two of `a`, `b`, `c`.
    pub fn symbolic(&mut self) -> AlgebraElement {
        let terms = self.rng.gen_range(1..=3);
        let mut out = AlgebraElement::zero(BasisKind::FreeCommutative);
        for _ in 0..terms {
            let len = self.rng.gen_range(0..=2);
            let names: Vec<&str> = (0..len).map(|_| SYMBOLS[self.below(SYMBOLS.len())]).collect();
            let c = self.rational();
            out.add_term(Monomial::symbols(&names), c);
        }
        out
    }

    pub fn element(&mut self, kind: BasisKind) -> AlgebraElement {
        match kind {
            BasisKind::Laurent => self.laurent(),
            BasisKind::FreeCommutative => self.symbolic(),
        }
    }

    pub fn letter(&mut self) -> Monomial {
        Monomial::Laurent(self.exponent())
    }

    /// Word of the given length over the letters `e^k`, `k` in [`EXPONENTS`].
    pub fn word(&mut self, len: usize) -> Word<Monomial> {
        Word((0..len).map(|_| self.letter()).collect())
    }

    /// One to three words of length at most `max_len`, random coefficients.
    pub fn stuffle_element(&mut self, max_len: usize) -> StuffleElement {
        let terms = self.rng.gen_range(1..=3);
        let mut out = StuffleElement::zero();
        for _ in 0..terms {
            let len = self.rng.gen_range(0..=max_len);
            let w = self.word(len);
            let c = self.rational();
            out.add_term(w, c);
        }
        out
    }

    pub fn lin_map(&mut self, spec: &Arc<HopfAlgebraSpec>, kind: BasisKind) -> UnitalLinMap {
        UnitalLinMap::from_fn(spec.clone(), kind, |_| Ok(self.element(kind))).expect("sampled values share the kind")
    }

    pub fn character(&mut self, spec: &Arc<HopfAlgebraSpec>, kind: BasisKind) -> Character {
        let values = (0..spec.generators().len()).map(|_| self.element(kind)).collect();
        Character::new(spec.clone(), kind, values).expect("sampled values share the kind")
    }

    /// Identity-tangent diffeomorphism with every coefficient sampled.
    pub fn diffeo(&mut self, order: usize) -> FormalDiffeo {
        let coefficients: Vec<_> = (2..=order).map(|n| (n, self.laurent())).collect();
        FormalDiffeo::new(order, BasisKind::Laurent, coefficients).expect("indices in range")
    }

    /// Functional supported on the finitely many words of length
    /// `1..=max_len` over the sampling alphabet; about half of them get a
    /// non-zero value.
    pub fn finite_functional(&mut self, label: &str, max_len: usize) -> StuffleFunctional {
        let mut table = BTreeMap::new();
        let alphabet: Vec<i64> = EXPONENTS.collect();
        let mut words: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..max_len {
            words = words
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&e| {
                        let mut next = w.clone();
                        next.push(e);
                        next
                    })
                })
                .collect();
            for w in &words {
                if self.chance(0.5) {
                    let v = self.laurent();
                    table.insert(Word(w.iter().map(|&e| Monomial::Laurent(e)).collect()), v);
                }
            }
        }
        StuffleFunctional::from_table(label, BasisKind::Laurent, table)
    }
}
