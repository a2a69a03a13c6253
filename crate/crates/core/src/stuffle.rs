//! The stuffle (quasi-shuffle) Hopf algebra on words.
//!
//! Words are finite sequences of letters drawn from a multiplicative basis
//! (`Monomial` for a target algebra, `HopfMonomial` for the augmentation
//! ideal of a Hopf algebra). The product merges two words by shuffling and
//! by fusing last letters; the coproduct is deconcatenation.

use std::cmp::Ordering;
use std::fmt;
use std::marker::PhantomData;

use num_traits::One;

use crate::algebra::{AlgebraElement, Monomial, Rational};
use crate::coalgebra::ReducedCoproduct;
use crate::error::{Error, Result};
use crate::linear::{Combination, Tensor};

/// A letter alphabet closed under an associative commutative product.
pub trait Letter: Clone + Ord {
    fn letter_product(&self, other: &Self) -> Result<Self>;
}

impl Letter for Monomial {
    fn letter_product(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::KindMismatch {
            left: self.kind(),
            right: other.kind(),
        })
    }
}

/// A word `a1 (x) ... (x) as`; the empty word is the unit.
///
/// Ordered by length first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word<L>(pub Vec<L>);

pub type StuffleElement = Combination<Word<Monomial>>;

impl<L> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }
}

impl<L: Clone> Word<L> {
    pub fn single(letter: L) -> Self {
        Word(vec![letter])
    }

    pub fn slice(&self, from: usize, to: usize) -> Self {
        Word(self.0[from..to].to_vec())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pushed(&self, letter: L) -> Self {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }
}

impl<L: Ord> PartialOrd for Word<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Ord> Ord for Word<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// Block lengths of every composition of `len` into `k` non-empty parts.
pub fn compositions(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest < k {
            return;
        }
        for first in 1..=rest - (k - 1) {
            cur.push(first);
            rec(rest - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if len == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Cuts `w` into consecutive blocks of the given lengths.
pub fn cut<L: Clone>(w: &Word<L>, lengths: &[usize]) -> Vec<Word<L>> {
    let mut at = 0;
    lengths
        .iter()
        .map(|&n| {
            let b = w.slice(at, at + n);
            at += n;
            b
        })
        .collect()
}

/// Stuffle product of two words.
///
/// Unfolds `m(a, b) = m(a~, b) a_r + m(a, b~) b_s + m(a~, b~) (a_r b_s)`
/// bottom-up over prefix pairs.
pub fn stuffle_words<L: Letter>(a: &Word<L>, b: &Word<L>) -> Result<Combination<Word<L>>> {
    let (r, s) = (a.len(), b.len());
    // table[i][j] = prefix(a, i) * prefix(b, j)
    let mut table: Vec<Vec<Combination<Word<L>>>> = vec![vec![Combination::zero(); s + 1]; r + 1];
    for i in 0..=r {
        for j in 0..=s {
            if i == 0 {
                table[i][j] = Combination::basis(b.slice(0, j));
                continue;
            }
            if j == 0 {
                table[i][j] = Combination::basis(a.slice(0, i));
                continue;
            }
            let ai = &a.0[i - 1];
            let bj = &b.0[j - 1];
            let fused = ai.letter_product(bj)?;
            let mut acc = Combination::zero();
            for (w, c) in &table[i - 1][j] {
                acc.add_term(w.pushed(ai.clone()), c.clone());
            }
            for (w, c) in &table[i][j - 1] {
                acc.add_term(w.pushed(bj.clone()), c.clone());
            }
            for (w, c) in &table[i - 1][j - 1] {
                acc.add_term(w.pushed(fused.clone()), c.clone());
            }
            table[i][j] = acc;
        }
    }
    Ok(table.swap_remove(r).swap_remove(s))
}

pub fn stuffle_product<L: Letter>(x: &Combination<Word<L>>, y: &Combination<Word<L>>) -> Result<Combination<Word<L>>> {
    let mut out = Combination::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_scaled(&stuffle_words(a, b)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// Stuffle product of a sequence of elements; the empty product is the unit.
pub fn stuffle_many<L: Letter>(factors: &[Combination<Word<L>>]) -> Result<Combination<Word<L>>> {
    let mut acc = Combination::basis(Word::empty());
    for f in factors {
        acc = stuffle_product(&acc, f)?;
    }
    Ok(acc)
}

/// Deconcatenation coproduct, as 2-tuples of words.
pub fn deconcat_coproduct<L: Clone + Ord>(x: &Combination<Word<L>>) -> Tensor<Word<L>> {
    let mut out = Tensor::zero();
    for (w, c) in x {
        for i in 0..=w.len() {
            out.add_term(vec![w.slice(0, i), w.slice(i, w.len())], c.clone());
        }
    }
    out
}

/// `n`-fold deconcatenation.
///
/// With `reduced` set, only cuts into `n` non-empty blocks are kept and the
/// empty word is sent to zero; otherwise empty blocks are allowed, which is
/// the full iterated coproduct.
pub fn iterated_coproduct<L: Clone + Ord>(x: &Combination<Word<L>>, n: usize, reduced: bool) -> Tensor<Word<L>> {
    assert!(n >= 1, "iterated coproduct needs n >= 1");
    let mut out = Tensor::zero();
    for (w, c) in x {
        if reduced {
            for lengths in compositions(w.len(), n) {
                out.add_term(cut(w, &lengths), c.clone());
            }
        } else {
            for lengths in weak_compositions(w.len(), n) {
                out.add_term(cut(w, &lengths), c.clone());
            }
        }
    }
    out
}

/// Block lengths of every composition of `len` into `k` possibly empty parts.
pub fn weak_compositions(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=rest {
            cur.push(first);
            rec(rest - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 {
        rec(len, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

pub fn counit<L: Clone + Ord>(x: &Combination<Word<L>>) -> Rational {
    x.coeff(&Word::empty())
}

/// Antipode by direct enumeration of the `2^(s-1)` compositions of a word.
pub fn antipode_word<L: Letter>(w: &Word<L>) -> Result<Combination<Word<L>>> {
    if w.is_empty() {
        return Ok(Combination::basis(Word::empty()));
    }
    let mut out = Combination::zero();
    for k in 1..=w.len() {
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        for lengths in compositions(w.len(), k) {
            let blocks: Vec<_> = cut(w, &lengths).into_iter().map(Combination::basis).collect();
            out.add_scaled(&stuffle_many(&blocks)?, &sign);
        }
    }
    Ok(out)
}

pub fn antipode<L: Letter>(x: &Combination<Word<L>>) -> Result<Combination<Word<L>>> {
    x.try_map_linear(antipode_word)
}

/// Deconcatenation viewed as a connected coalgebra on words.
#[derive(Debug, Clone, Copy)]
pub struct Deconcatenation<L>(PhantomData<L>);

impl<L> Default for Deconcatenation<L> {
    fn default() -> Self {
        Deconcatenation(PhantomData)
    }
}

impl<L: Clone + Ord> ReducedCoproduct for Deconcatenation<L> {
    type Basis = Word<L>;

    fn reduced_coproduct(&self, w: &Word<L>) -> Tensor<Word<L>> {
        (1..w.len())
            .map(|i| (vec![w.slice(0, i), w.slice(i, w.len())], Rational::one()))
            .collect()
    }
}

/// Multilinear expansion of `x1 (x) ... (x) xs` with letters in a target
/// algebra into basis words.
pub fn expand_tensor_word(letters: &[AlgebraElement]) -> StuffleElement {
    let mut acc: StuffleElement = Combination::basis(Word::empty());
    for x in letters {
        let mut next = Combination::zero();
        for (w, c) in &acc {
            for (m, d) in x.terms() {
                next.add_term(w.pushed(m.clone()), c * d);
            }
        }
        acc = next;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Componentwise stuffle product of two tensors of equal arity.
pub fn tensor_stuffle<L: Letter>(x: &Tensor<Word<L>>, y: &Tensor<Word<L>>) -> Result<Tensor<Word<L>>> {
    let mut out = Tensor::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            assert_eq!(a.len(), b.len(), "tensor arity mismatch");
            let mut partial: Tensor<Word<L>> = Combination::basis(Vec::new());
            for (wa, wb) in a.iter().zip(b) {
                let prod: Tensor<Word<L>> = stuffle_words(wa, wb)?
                    .iter()
                    .map(|(w, c)| (vec![w.clone()], c.clone()))
                    .collect();
                partial = partial.tensor(&prod);
            }
            out.add_scaled(&partial, &(ca * cb));
        }
    }
    Ok(out)
}

/// Letterwise product of a tensor's factors, `m^[n]`.
pub fn multiply_factors<L: Letter>(t: &Tensor<Word<L>>) -> Result<Combination<Word<L>>> {
    let mut out = Combination::zero();
    for (factors, c) in t {
        let elems: Vec<_> = factors.iter().cloned().map(Combination::basis).collect();
        out.add_scaled(&stuffle_many(&elems)?, c);
    }
    Ok(out)
}

impl<L: Clone + Ord> Combination<Word<L>> {
    /// Length of the longest word present, 0 for the empty element.
    pub fn max_length(&self) -> usize {
        self.keys().map(Word::len).max().unwrap_or(0)
    }
}
