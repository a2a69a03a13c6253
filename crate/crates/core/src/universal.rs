//! Universal maps: the embedding of a connected Hopf algebra into the
//! stuffle algebra on its augmentation ideal, the functionals `j`, `j^-1`,
//! `j+`, `j-` on words, and the action `T(F, phi) = F o phi^st o iota` that
//! turns them into closed formulas for inverses and Birkhoff decompositions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, BasisKind, Monomial, RotaBaxterSplit};
use crate::coalgebra::iterated_reduced;
use crate::convolution::{Character, Decomposition, HopfMap, UnitalLinMap};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraSpec, HopfElement, HopfMonomial, HopfWordElement};
use crate::linear::Combination;
use crate::stuffle::{expand_tensor_word, iterated_coproduct, Deconcatenation, StuffleElement, Word};

/// `iota(h) = sum_k D'^[k](h)`, with `iota(1) = ()`.
pub fn iota(spec: &HopfAlgebraSpec, h: &HopfElement) -> Result<HopfWordElement> {
    let mut out = HopfWordElement::zero();
    for (m, c) in h {
        spec.ensure_degree(m)?;
        out.add_scaled(&spec.iota_monomial(m), c);
    }
    Ok(out)
}

/// The same embedding through `iota(h) = h + iota(h'1) (x) h'2`.
pub fn iota_recursive(spec: &HopfAlgebraSpec, h: &HopfElement) -> Result<HopfWordElement> {
    fn go(spec: &HopfAlgebraSpec, m: &HopfMonomial, memo: &mut BTreeMap<HopfMonomial, HopfWordElement>) -> HopfWordElement {
        if m.is_one() {
            return Combination::basis(Word::empty());
        }
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let mut out = Combination::basis(Word::single(m.clone()));
        let d = spec.reduced_coproduct(&Combination::basis(m.clone())).expect("degree checked");
        for (pair, c) in &d {
            for (w, e) in &go(spec, &pair[0], memo) {
                out.add_term(w.pushed(pair[1].clone()), c * e);
            }
        }
        memo.insert(m.clone(), out.clone());
        out
    }
    let mut memo = BTreeMap::new();
    let mut out = HopfWordElement::zero();
    for (m, c) in h {
        spec.ensure_degree(m)?;
        out.add_scaled(&go(spec, m, &mut memo), c);
    }
    Ok(out)
}

/// Letterwise image `phi^st` of a word element, expanded into words over the
/// monomial basis of the target.
pub fn lift_character<M: HopfMap + ?Sized>(phi: &M, x: &HopfWordElement) -> Result<StuffleElement> {
    let mut out = StuffleElement::zero();
    for (w, c) in x {
        let mut letters = Vec::with_capacity(w.len());
        for m in w.letters() {
            phi.spec().ensure_degree(m)?;
            letters.push(phi.value(m));
        }
        out.add_scaled(&expand_tensor_word(&letters), c);
    }
    Ok(out)
}

pub type WordRule = Arc<dyn Fn(&Word<Monomial>) -> Result<AlgebraElement> + Send + Sync>;

/// A unital functional on the stuffle algebra, given by its values on basis
/// words. The empty word always goes to `1`.
#[derive(Clone)]
pub enum StuffleFunctional {
    /// Keeps letters, kills words of length at least two.
    J,
    /// `(a1, ..., as) -> (-1)^s a1 ... as`.
    JInverse,
    /// `(-1)^(s-1) p+(p-(...p-(a1) a2 ...) as)`.
    JPlus(RotaBaxterSplit),
    /// `(-1)^s p-(p-(...p-(a1) a2 ...) as)`.
    JMinus(RotaBaxterSplit),
    /// Counit followed by the unit of the target.
    Unit,
    /// Arbitrary rule on non-empty words.
    Custom { label: String, rule: WordRule },
}

impl fmt::Debug for StuffleFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StuffleFunctional::J => write!(f, "J"),
            StuffleFunctional::JInverse => write!(f, "JInverse"),
            StuffleFunctional::JPlus(s) => write!(f, "JPlus({s})"),
            StuffleFunctional::JMinus(s) => write!(f, "JMinus({s})"),
            StuffleFunctional::Unit => write!(f, "Unit"),
            StuffleFunctional::Custom { label, .. } => write!(f, "Custom({label})"),
        }
    }
}

fn word_kind(w: &Word<Monomial>, fallback: BasisKind) -> BasisKind {
    w.letters().first().map(Monomial::kind).unwrap_or(fallback)
}

/// `acc_1 = a1`, `acc_r = p-(acc_(r-1)) a_r`, on letters given as elements.
fn nested_pole_fold(split: RotaBaxterSplit, letters: &[AlgebraElement]) -> Result<AlgebraElement> {
    let mut acc = letters[0].clone();
    for a in &letters[1..] {
        let pole = split.minus(&acc)?;
        if pole.is_zero() {
            return Ok(pole);
        }
        acc = pole.try_mul(a)?;
    }
    Ok(acc)
}

fn signed(x: AlgebraElement, negative: bool) -> AlgebraElement {
    if negative {
        -x
    } else {
        x
    }
}

impl StuffleFunctional {
    pub fn custom<F>(label: impl Into<String>, rule: F) -> Self
    where
        F: Fn(&Word<Monomial>) -> Result<AlgebraElement> + Send + Sync + 'static,
    {
        StuffleFunctional::Custom {
            label: label.into(),
            rule: Arc::new(rule),
        }
    }

    /// Functional with finitely many non-zero values on non-empty words.
    pub fn from_table(label: impl Into<String>, kind: BasisKind, table: BTreeMap<Word<Monomial>, AlgebraElement>) -> Self {
        Self::custom(label, move |w| Ok(table.get(w).cloned().unwrap_or_else(|| AlgebraElement::zero(kind))))
    }

    pub fn label(&self) -> String {
        format!("{self:?}")
    }

    /// Value on a basis word; `kind` fixes the target of the empty word.
    pub fn eval_word(&self, w: &Word<Monomial>, kind: BasisKind) -> Result<AlgebraElement> {
        if w.is_empty() {
            return Ok(AlgebraElement::one(kind));
        }
        if let Some(bad) = w.letters().iter().find(|m| m.kind() != kind) {
            return Err(Error::KindMismatch {
                left: kind,
                right: bad.kind(),
            });
        }
        let letters: Vec<AlgebraElement> = w.letters().iter().cloned().map(AlgebraElement::monomial).collect();
        self.eval_letters(&letters, kind)
    }

    /// Value on `x1 (x) ... (x) xs` with letters given as target elements,
    /// extended multilinearly. The built-in functionals are evaluated on the
    /// letters directly; custom ones need the expansion into basis words.
    pub fn eval_letters(&self, letters: &[AlgebraElement], kind: BasisKind) -> Result<AlgebraElement> {
        let s = letters.len();
        if s == 0 {
            return Ok(AlgebraElement::one(kind));
        }
        match self {
            StuffleFunctional::J => Ok(if s == 1 {
                letters[0].clone()
            } else {
                AlgebraElement::zero(kind)
            }),
            StuffleFunctional::Unit => Ok(AlgebraElement::zero(kind)),
            StuffleFunctional::JInverse => {
                let mut acc = AlgebraElement::one(kind);
                for a in letters {
                    acc = acc.try_mul(a)?;
                }
                Ok(signed(acc, s % 2 == 1))
            }
            StuffleFunctional::JMinus(split) => {
                let folded = nested_pole_fold(*split, letters)?;
                Ok(signed(split.minus(&folded)?, s % 2 == 1))
            }
            StuffleFunctional::JPlus(split) => {
                let folded = nested_pole_fold(*split, letters)?;
                Ok(signed(split.plus(&folded)?, s % 2 == 0))
            }
            StuffleFunctional::Custom { rule, .. } => {
                let mut out = AlgebraElement::zero(kind);
                for (w, c) in &expand_tensor_word(letters) {
                    let v = rule(w)?;
                    out = out.try_add(&v.scale(c))?;
                }
                Ok(out)
            }
        }
    }

    /// Linear extension to stuffle elements.
    pub fn eval(&self, x: &StuffleElement, kind: BasisKind) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(kind);
        for (w, c) in x {
            out = out.try_add(&self.eval_word(w, kind)?.scale(c))?;
        }
        Ok(out)
    }

    /// Whether this functional is known to be multiplicative for the stuffle
    /// product when the target is commutative.
    pub fn is_character(&self) -> bool {
        !matches!(self, StuffleFunctional::Custom { .. })
    }
}

/// `eval_functional(F, x)`.
pub fn eval_functional(f: &StuffleFunctional, x: &StuffleElement, kind: BasisKind) -> Result<AlgebraElement> {
    f.eval(x, kind)
}

/// `(f * g)(w) = sum f(w[..i]) g(w[i..])` over deconcatenation.
pub fn convolve_functionals(f: &StuffleFunctional, g: &StuffleFunctional) -> StuffleFunctional {
    let (f, g) = (f.clone(), g.clone());
    let label = format!("({} * {})", f.label(), g.label());
    StuffleFunctional::custom(label, move |w| {
        let kind = word_kind(w, BasisKind::Laurent);
        let mut out = AlgebraElement::zero(kind);
        for i in 0..=w.len() {
            let left = f.eval_word(&w.slice(0, i), kind)?;
            if left.is_zero() {
                continue;
            }
            out = out.try_add(&left.try_mul(&g.eval_word(&w.slice(i, w.len()), kind)?)?)?;
        }
        Ok(out)
    })
}

/// Convolution inverse as `sum_k (-1)^k m^[k] f^(x)k D'^[k]` over the reduced
/// iterated deconcatenation.
pub fn functional_inverse_series(f: &StuffleFunctional) -> StuffleFunctional {
    let f = f.clone();
    let label = format!("{}^-1", f.label());
    StuffleFunctional::custom(label, move |w| {
        let kind = word_kind(w, BasisKind::Laurent);
        let x = Combination::basis(w.clone());
        let mut out = AlgebraElement::zero(kind);
        for k in 1..=w.len() {
            for (blocks, c) in &iterated_coproduct(&x, k, true) {
                let mut prod = AlgebraElement::one(kind);
                for b in blocks {
                    prod = prod.try_mul(&f.eval_word(b, kind)?)?;
                    if prod.is_zero() {
                        break;
                    }
                }
                out = out.try_add(&signed(prod.scale(c), k % 2 == 1))?;
            }
        }
        Ok(out)
    })
}

/// `f (.) g = T(f, g)` with the stuffle algebra acting on itself through the
/// word basis: `iota` splits a word into blocks, `g` evaluates each block and
/// `f` reads the resulting word of values.
pub fn odot(f: &StuffleFunctional, g: &StuffleFunctional) -> StuffleFunctional {
    let (f, g) = (f.clone(), g.clone());
    let label = format!("({} . {})", f.label(), g.label());
    let deconcat = Deconcatenation::<Monomial>::default();
    StuffleFunctional::custom(label, move |w| {
        let kind = word_kind(w, BasisKind::Laurent);
        let x = Combination::basis(w.clone());
        let mut out = AlgebraElement::zero(kind);
        for k in 1..=w.len() {
            for (blocks, c) in &iterated_reduced(&deconcat, &x, k) {
                let values = blocks
                    .iter()
                    .map(|b| g.eval_word(b, kind))
                    .collect::<Result<Vec<_>>>()?;
                if values.iter().any(AlgebraElement::is_zero) {
                    continue;
                }
                let v = f.eval_letters(&values, kind)?;
                out = out.try_add(&v.scale(c))?;
            }
        }
        Ok(out)
    })
}

/// `T(F, phi)(m)` for one monomial, folding each word of `iota(m)` through
/// `F` without expanding it into basis words.
fn apply_t_monomial<M: HopfMap + ?Sized>(f: &StuffleFunctional, phi: &M, m: &HopfMonomial) -> Result<AlgebraElement> {
    let kind = phi.kind();
    if m.is_one() {
        return Ok(AlgebraElement::one(kind));
    }
    let spec = phi.spec();
    spec.ensure_degree(m)?;
    if matches!(f, StuffleFunctional::J) {
        return Ok(phi.value(m));
    }
    let mut out = AlgebraElement::zero(kind);
    let mut cache: BTreeMap<&HopfMonomial, AlgebraElement> = BTreeMap::new();
    let image = spec.iota_monomial(m);
    for (w, c) in &image {
        let letters: Vec<AlgebraElement> = w
            .letters()
            .iter()
            .map(|h| cache.entry(h).or_insert_with(|| phi.value(h)).clone())
            .collect();
        if letters.iter().any(AlgebraElement::is_zero) {
            continue;
        }
        let v = f.eval_letters(&letters, kind)?;
        out = out.try_add(&v.scale(c))?;
    }
    Ok(out)
}

/// `T(F, phi) = F o phi^st o iota`, tabulated on every monomial up to the
/// truncation degree.
pub fn apply_t<M: HopfMap + ?Sized>(f: &StuffleFunctional, phi: &M) -> Result<UnitalLinMap> {
    UnitalLinMap::from_fn(phi.spec().clone(), phi.kind(), |m| apply_t_monomial(f, phi, m))
}

/// `T(F, phi)` through the literal composite: `iota`, then the letterwise
/// lift expanded into basis words, then `F` word by word.
pub fn apply_t_materialized<M: HopfMap + ?Sized>(f: &StuffleFunctional, phi: &M) -> Result<UnitalLinMap> {
    let spec = phi.spec().clone();
    UnitalLinMap::from_fn(spec.clone(), phi.kind(), |m| {
        let image = iota(&spec, &Combination::basis(m.clone()))?;
        f.eval(&lift_character(phi, &image)?, phi.kind())
    })
}

/// `T(F, chi)` for a character functional and a character: the result is a
/// character, so it is computed on generators only.
pub fn apply_t_character(f: &StuffleFunctional, chi: &Character) -> Result<Character> {
    if !f.is_character() {
        return Err(Error::InvalidSpec(format!(
            "{} is not known to be a character; use apply_t",
            f.label()
        )));
    }
    let spec = chi.spec().clone();
    let values = (0..spec.generators().len())
        .map(|i| apply_t_monomial(f, chi, &spec.generator(i)))
        .collect::<Result<Vec<_>>>()?;
    Character::new(spec, chi.kind(), values)
}

/// `phi^-1 = T(j^-1, phi)`.
pub fn closed_inverse<M: HopfMap + ?Sized>(phi: &M) -> Result<UnitalLinMap> {
    apply_t(&StuffleFunctional::JInverse, phi)
}

/// `phi_- = T(j-, phi)`, `phi_+ = T(j+, phi)`.
pub fn closed_brb<M: HopfMap + ?Sized>(phi: &M, split: RotaBaxterSplit) -> Result<Decomposition<UnitalLinMap>> {
    Ok(Decomposition {
        plus: apply_t(&StuffleFunctional::JPlus(split), phi)?,
        minus: apply_t(&StuffleFunctional::JMinus(split), phi)?,
    })
}

/// Closed decomposition of a character, computed on generators.
pub fn closed_brb_character(chi: &Character, split: RotaBaxterSplit) -> Result<Decomposition<Character>> {
    Ok(Decomposition {
        plus: apply_t_character(&StuffleFunctional::JPlus(split), chi)?,
        minus: apply_t_character(&StuffleFunctional::JMinus(split), chi)?,
    })
}

/// Preparation map of `j` by its closed recursion:
/// `bar(a1) = a1`, `bar(a1..ar) = -p-(bar(a1..a(r-1))) ar`.
pub fn bogoliubov_j(split: RotaBaxterSplit, w: &Word<Monomial>) -> Result<AlgebraElement> {
    let kind = word_kind(w, BasisKind::Laurent);
    let mut acc = AlgebraElement::one(kind);
    for (i, a) in w.letters().iter().enumerate() {
        let a = AlgebraElement::monomial(a.clone());
        acc = if i == 0 { a } else { -split.minus(&acc)?.try_mul(&a)? };
    }
    Ok(acc)
}

/// Preparation map of an arbitrary functional `f` by the generic recursion
/// `bar(w) = f(w) - sum p-(bar(w')) f(w'')` over the reduced deconcatenation
/// `w = w' w''`.
pub fn bogoliubov_prepare_functional(
    f: &StuffleFunctional,
    split: RotaBaxterSplit,
    w: &Word<Monomial>,
    kind: BasisKind,
) -> Result<AlgebraElement> {
    // prefixes of w, shortest first
    let mut prepared: Vec<AlgebraElement> = vec![AlgebraElement::one(kind)];
    for r in 1..=w.len() {
        let mut acc = f.eval_word(&w.slice(0, r), kind)?;
        for i in 1..r {
            let tail = f.eval_word(&w.slice(i, r), kind)?;
            if tail.is_zero() {
                continue;
            }
            acc = acc.try_sub(&split.minus(&prepared[i])?.try_mul(&tail)?)?;
        }
        prepared.push(acc);
    }
    Ok(prepared.pop().expect("at least the empty prefix"))
}

/// `j+ = p+ o bar` and `j- = -p- o bar` through the generic preparation.
pub fn j_split_via_preparation(split: RotaBaxterSplit, w: &Word<Monomial>, kind: BasisKind) -> Result<(AlgebraElement, AlgebraElement)> {
    if w.is_empty() {
        return Ok((AlgebraElement::one(kind), AlgebraElement::one(kind)));
    }
    let bar = bogoliubov_prepare_functional(&StuffleFunctional::J, split, w, kind)?;
    Ok((split.plus(&bar)?, -split.minus(&bar)?))
}
