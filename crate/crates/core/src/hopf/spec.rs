use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::coalgebra::{iterated_reduced, iterated_reduced_split, ReducedCoproduct};
use crate::error::{Error, Result};
use crate::linear::{Combination, Tensor};
use crate::stuffle::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HopfGenerator {
    pub name: String,
    pub degree: u32,
}

/// A commutative monomial in the generators of a Hopf algebra.
///
/// Generators are referenced by index into the owning presentation and kept
/// sorted. Monomials order by degree first, so sorting a table by monomial
/// processes lower filtration levels first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HopfMonomial {
    degree: u32,
    gens: Vec<usize>,
}

impl HopfMonomial {
    pub fn one() -> Self {
        HopfMonomial {
            degree: 0,
            gens: Vec::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        gens.extend_from_slice(&self.gens);
        gens.extend_from_slice(&other.gens);
        gens.sort_unstable();
        HopfMonomial {
            degree: self.degree + other.degree,
            gens,
        }
    }
}

impl Letter for HopfMonomial {
    fn letter_product(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other))
    }
}

pub type HopfElement = Combination<HopfMonomial>;
pub type HopfWordElement = Combination<Word<HopfMonomial>>;

/// Free commutative product in `H`.
pub fn hopf_product(x: &HopfElement, y: &HopfElement) -> HopfElement {
    let mut out = HopfElement::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_term(a.mul(b), ca * cb);
        }
    }
    out
}

/// One term `c * left (x) right` of the reduced coproduct of a generator.
pub type CoproductTerm = (HopfMonomial, HopfMonomial, Rational);

/// A connected graded Hopf algebra presented as a free commutative algebra
/// on graded generators, with the reduced coproduct of each generator.
///
/// Every operation rejects inputs of degree above the truncation degree.
pub struct HopfAlgebraSpec {
    name: String,
    generators: Vec<HopfGenerator>,
    table: Vec<Tensor<HopfMonomial>>,
    truncation: u32,
    convention: Option<String>,
    monomials: Vec<HopfMonomial>,
    iota_cache: OnceLock<BTreeMap<HopfMonomial, HopfWordElement>>,
}

impl fmt::Debug for HopfAlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfAlgebraSpec")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .field("truncation", &self.truncation)
            .finish_non_exhaustive()
    }
}

impl PartialEq for HopfAlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.generators == other.generators
            && self.table == other.table
            && self.truncation == other.truncation
    }
}

impl HopfAlgebraSpec {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<HopfGenerator>,
        table: Vec<Vec<CoproductTerm>>,
        truncation: u32,
    ) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::InvalidSpec("truncation degree must be at least 1".into()));
        }
        if table.len() != generators.len() {
            return Err(Error::InvalidSpec("one coproduct entry per generator is required".into()));
        }
        for g in &generators {
            if g.degree == 0 {
                return Err(Error::InvalidSpec(format!("generator {} has degree 0", g.name)));
            }
        }
        let mut tensors = Vec::with_capacity(table.len());
        for (g, entries) in generators.iter().zip(table) {
            let mut t = Tensor::zero();
            for (left, right, c) in entries {
                for m in [&left, &right] {
                    if m.gens.iter().any(|&i| i >= generators.len()) {
                        return Err(Error::InvalidSpec(format!("unknown generator index in coproduct of {}", g.name)));
                    }
                    let d: u32 = m.gens.iter().map(|&i| generators[i].degree).sum();
                    if d != m.degree {
                        return Err(Error::InvalidSpec(format!("inconsistent monomial degree in coproduct of {}", g.name)));
                    }
                }
                if left.degree == 0 || right.degree == 0 || left.degree + right.degree != g.degree {
                    return Err(Error::InvalidSpec(format!(
                        "reduced coproduct of {} does not respect the filtration",
                        g.name
                    )));
                }
                t.add_term(vec![left, right], c);
            }
            tensors.push(t);
        }
        let mut spec = HopfAlgebraSpec {
            name: name.into(),
            generators,
            table: tensors,
            truncation,
            convention: None,
            monomials: Vec::new(),
            iota_cache: OnceLock::new(),
        };
        spec.monomials = spec.enumerate_monomials(truncation);
        Ok(spec)
    }

    pub fn with_convention(mut self, convention: impl Into<String>) -> Self {
        self.convention = Some(convention.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn convention(&self) -> Option<&str> {
        self.convention.as_deref()
    }

    pub fn generators(&self) -> &[HopfGenerator] {
        &self.generators
    }

    /// Reduced coproduct table of generator `i`.
    pub fn generator_coproduct(&self, i: usize) -> &Tensor<HopfMonomial> {
        &self.table[i]
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn generator(&self, i: usize) -> HopfMonomial {
        HopfMonomial {
            degree: self.generators[i].degree,
            gens: vec![i],
        }
    }

    pub fn generator_by_name(&self, name: &str) -> Result<HopfMonomial> {
        Ok(self.generator(self.generator_index(name)?))
    }

    /// Monomial from a list of generator indices (any order, repeats allowed).
    pub fn monomial(&self, gens: &[usize]) -> HopfMonomial {
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        HopfMonomial {
            degree: gens.iter().map(|&i| self.generators[i].degree).sum(),
            gens,
        }
    }

    /// All monomials of degree `1..=truncation`, in canonical order.
    pub fn monomials(&self) -> &[HopfMonomial] {
        &self.monomials
    }

    /// All monomials of degree `1..=max_degree`, in canonical order.
    pub fn monomials_up_to(&self, max_degree: u32) -> Vec<HopfMonomial> {
        self.monomials
            .iter()
            .filter(|m| m.degree <= max_degree)
            .cloned()
            .collect()
    }

    fn enumerate_monomials(&self, max_degree: u32) -> Vec<HopfMonomial> {
        fn rec(spec: &HopfAlgebraSpec, from: usize, budget: u32, cur: &mut Vec<usize>, out: &mut Vec<HopfMonomial>) {
            for i in from..spec.generators.len() {
                let d = spec.generators[i].degree;
                if d > budget {
                    continue;
                }
                cur.push(i);
                out.push(spec.monomial(cur));
                rec(spec, i, budget - d, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, max_degree, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn render(&self, m: &HopfMonomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < m.gens.len() {
            let mut j = i;
            while j < m.gens.len() && m.gens[j] == m.gens[i] {
                j += 1;
            }
            let name = &self.generators[m.gens[i]].name;
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }

    /// Inverse of [`render`](Self::render): `"l1^2*l2"`, `"1"`. Degree is not
    /// checked against the truncation.
    pub fn parse_monomial(&self, s: &str) -> Result<HopfMonomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(HopfMonomial::one());
        }
        let mut gens = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((name, p)) => {
                    let p: usize = p
                        .trim()
                        .parse()
                        .ok()
                        .filter(|&p| p >= 1)
                        .ok_or_else(|| Error::UnknownGenerator(factor.to_string()))?;
                    (name.trim(), p)
                }
                None => (factor, 1),
            };
            let i = self.generator_index(name)?;
            gens.extend(std::iter::repeat(i).take(power));
        }
        Ok(self.monomial(&gens))
    }

    pub fn render_word(&self, w: &Word<HopfMonomial>) -> String {
        let letters: Vec<String> = w.letters().iter().map(|m| self.render(m)).collect();
        format!("[{}]", letters.join(" | "))
    }

    fn check_degree(&self, m: &HopfMonomial) -> Result<()> {
        if m.degree > self.truncation {
            return Err(Error::DegreeExceedsTruncation {
                degree: m.degree,
                truncation: self.truncation,
            });
        }
        Ok(())
    }

    fn check_element(&self, x: &HopfElement) -> Result<()> {
        x.keys().try_for_each(|m| self.check_degree(m))
    }

    fn check_augmented(&self, x: &HopfElement) -> Result<()> {
        self.check_element(x)?;
        if x.keys().any(HopfMonomial::is_one) {
            return Err(Error::NotAugmented);
        }
        Ok(())
    }

    fn full_generator_coproduct(&self, i: usize) -> Tensor<HopfMonomial> {
        let g = self.generator(i);
        let mut t = self.table[i].clone();
        t.add_term(vec![HopfMonomial::one(), g.clone()], Rational::one());
        t.add_term(vec![g, HopfMonomial::one()], Rational::one());
        t
    }

    /// Full coproduct of a monomial, computed multiplicatively.
    fn monomial_coproduct(&self, m: &HopfMonomial) -> Tensor<HopfMonomial> {
        let mut acc: Tensor<HopfMonomial> = Combination::basis(vec![HopfMonomial::one(), HopfMonomial::one()]);
        for &g in &m.gens {
            let dg = self.full_generator_coproduct(g);
            let mut next = Tensor::zero();
            for (a, ca) in &acc {
                for (b, cb) in &dg {
                    next.add_term(vec![a[0].mul(&b[0]), a[1].mul(&b[1])], ca * cb);
                }
            }
            acc = next;
        }
        acc
    }

    fn monomial_reduced_coproduct(&self, m: &HopfMonomial) -> Tensor<HopfMonomial> {
        let mut t = self.monomial_coproduct(m);
        if !m.is_one() {
            t.add_term(vec![HopfMonomial::one(), m.clone()], -Rational::one());
            t.add_term(vec![m.clone(), HopfMonomial::one()], -Rational::one());
        }
        t
    }

    pub fn coproduct(&self, x: &HopfElement) -> Result<Tensor<HopfMonomial>> {
        self.check_element(x)?;
        Ok(x.map_linear(|m| self.monomial_coproduct(m)))
    }

    pub fn reduced_coproduct(&self, x: &HopfElement) -> Result<Tensor<HopfMonomial>> {
        self.check_augmented(x)?;
        Ok(x.map_linear(|m| self.monomial_reduced_coproduct(m)))
    }

    /// `D'^[n](x)`; zero once `n` exceeds the degree of `x`.
    pub fn iterated_reduced_coproduct(&self, x: &HopfElement, n: usize) -> Result<Tensor<HopfMonomial>> {
        self.check_augmented(x)?;
        Ok(iterated_reduced(self, x, n))
    }

    /// `D'^[n](x)` unfolded through `(D'^[k] (x) D'^[n-k]) o D'`.
    pub fn iterated_reduced_coproduct_split(&self, x: &HopfElement, n: usize, k: usize) -> Result<Tensor<HopfMonomial>> {
        self.check_augmented(x)?;
        Ok(iterated_reduced_split(self, x, n, k))
    }

    /// Full iterated coproduct `D^[n]`, unfolded as `(Id (x) D^[n-1]) o D`.
    pub fn iterated_coproduct(&self, x: &HopfElement, n: usize) -> Result<Tensor<HopfMonomial>> {
        self.check_element(x)?;
        let mut acc: Tensor<HopfMonomial> = x.iter().map(|(m, c)| (vec![m.clone()], c.clone())).collect();
        for _ in 1..n {
            let last = acc.keys().next().map_or(0, |k| k.len() - 1);
            acc = acc.map_slot(last, |m| self.monomial_coproduct(m));
        }
        Ok(acc)
    }

    pub fn counit(&self, x: &HopfElement) -> Rational {
        x.coeff(&HopfMonomial::one())
    }

    /// Antipode of `H` as the convolution inverse of the identity:
    /// `S(h) = sum_k (-1)^k m^[k] D'^[k](h)` on the augmentation ideal.
    pub fn antipode(&self, x: &HopfElement) -> Result<HopfElement> {
        self.check_element(x)?;
        let mut out = HopfElement::zero();
        for (m, c) in x {
            if m.is_one() {
                out.add_term(HopfMonomial::one(), c.clone());
                continue;
            }
            for k in 1..=m.degree as usize {
                let sign = if k % 2 == 0 { c.clone() } else { -c.clone() };
                for (factors, v) in &iterated_reduced(self, &Combination::basis(m.clone()), k) {
                    let prod = factors.iter().fold(HopfMonomial::one(), |acc, f| acc.mul(f));
                    out.add_term(prod, v * &sign);
                }
            }
        }
        Ok(out)
    }

    /// Checks `(D (x) Id) o D = (Id (x) D) o D` on every monomial up to
    /// `max_degree`, returning the first failing monomial.
    pub fn check_coassociativity(&self, max_degree: u32) -> std::result::Result<(), HopfMonomial> {
        for m in self.monomials_up_to(max_degree.min(self.truncation)) {
            let d = self.monomial_coproduct(&m);
            let left = d.map_slot(0, |a| self.monomial_coproduct(a));
            let right = d.map_slot(1, |b| self.monomial_coproduct(b));
            if left != right {
                return Err(m);
            }
        }
        Ok(())
    }

    /// `iota(m) = sum_k D'^[k](m)` as words of monomials, cached per spec.
    pub(crate) fn iota_monomial(&self, m: &HopfMonomial) -> HopfWordElement {
        if m.is_one() {
            return Combination::basis(Word::empty());
        }
        let cache = self.iota_cache.get_or_init(|| {
            self.monomials
                .iter()
                .map(|m| (m.clone(), self.iota_uncached(m)))
                .collect()
        });
        match cache.get(m) {
            Some(v) => v.clone(),
            None => self.iota_uncached(m),
        }
    }

    fn iota_uncached(&self, m: &HopfMonomial) -> HopfWordElement {
        let x = Combination::basis(m.clone());
        let mut out = HopfWordElement::zero();
        for k in 1..=m.degree as usize {
            for (factors, c) in &iterated_reduced(self, &x, k) {
                out.add_term(Word(factors.clone()), c.clone());
            }
        }
        out
    }

    pub(crate) fn ensure_degree(&self, m: &HopfMonomial) -> Result<()> {
        self.check_degree(m)
    }
}

impl ReducedCoproduct for HopfAlgebraSpec {
    type Basis = HopfMonomial;

    fn reduced_coproduct(&self, b: &HopfMonomial) -> Tensor<HopfMonomial> {
        self.monomial_reduced_coproduct(b)
    }
}

impl fmt::Display for HopfAlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (truncated at degree {})", self.name, self.truncation)
    }
}

/// Renders a tensor of monomials as `c * m1 (x) m2 + ...`.
pub fn render_tensor(spec: &HopfAlgebraSpec, t: &Tensor<HopfMonomial>) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (factors, c)) in t.iter().enumerate() {
        let body: Vec<String> = factors.iter().map(|m| spec.render(m)).collect();
        let body = body.join(" ⊗ ");
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if abs.is_one() {
            s.push_str(&body);
        } else {
            s.push_str(&format!("{abs}*{body}"));
        }
    }
    s
}
