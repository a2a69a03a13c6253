//! Named verification suites. Each suite runs seeded randomized checks and
//! stops at the first counterexample.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{BasisKind, Monomial, RotaBaxterSplit};
use crate::convolution::{HopfMap, UnitalLinMap};
use crate::diffeo::{birkhoff_factorize_via, composition_law_holds, BrbRoute, FormalDiffeo};
use crate::error::Result;
use crate::hopf::{
    faa_di_bruno_spec, hopf_product, ladder_spec, FaaDiBrunoOrientation, HopfAlgebraSpec, HopfElement,
    HopfMonomial, HopfWordElement,
};
use crate::linear::{Combination, Tensor};
use crate::random::Sampler;
use crate::stuffle::{
    antipode, counit, deconcat_coproduct, stuffle_product, tensor_stuffle, StuffleElement, Word,
};
use crate::universal::{
    apply_t, apply_t_materialized, bogoliubov_j, bogoliubov_prepare_functional, closed_brb, closed_brb_character,
    closed_inverse, convolve_functionals, functional_inverse_series, iota, iota_recursive, odot, StuffleFunctional,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    StuffleAxioms,
    HopfAxioms,
    RbIdentity,
    UniversalMaps,
    BrbEquivalence,
    Diffeo,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::StuffleAxioms,
        Suite::HopfAxioms,
        Suite::RbIdentity,
        Suite::UniversalMaps,
        Suite::BrbEquivalence,
        Suite::Diffeo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StuffleAxioms => "stuffle-axioms",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::RbIdentity => "rb-identity",
            Suite::UniversalMaps => "universal-maps",
            Suite::BrbEquivalence => "brb-equivalence",
            Suite::Diffeo => "diffeo",
        }
    }

    /// Resolves a suite name, with `all` expanding to every suite.
    pub fn parse_selection(s: &str) -> std::result::Result<Vec<Suite>, String> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.parse().map(|x| vec![x])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite `{s}` (expected one of {}, all)", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: String,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failure: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Checker {
    checks: usize,
}

type Outcome = std::result::Result<(), Counterexample>;

impl Checker {
    fn check(&mut self, ok: bool, name: &str, detail: impl FnOnce() -> String) -> Outcome {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(Counterexample {
                check: name.to_string(),
                detail: detail(),
            })
        }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, left: &T, right: &T, name: &str, input: impl FnOnce() -> String) -> Outcome {
        self.check(left == right, name, || format!("{}; got {left}, expected {right}", input()))
    }
}

fn internal(name: &str, e: crate::Error) -> Counterexample {
    Counterexample {
        check: name.to_string(),
        detail: format!("unexpected error: {e}"),
    }
}

trait OrFail<T> {
    fn or_fail(self, name: &str) -> std::result::Result<T, Counterexample>;
}

impl<T> OrFail<T> for Result<T> {
    fn or_fail(self, name: &str) -> std::result::Result<T, Counterexample> {
        self.map_err(|e| internal(name, e))
    }
}

/// Runs one suite with the given seed.
pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut c = Checker { checks: 0 };
    let mut rng = Sampler::new(seed ^ (suite as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let result = match suite {
        Suite::StuffleAxioms => stuffle_axioms(&mut c, &mut rng),
        Suite::HopfAxioms => hopf_axioms(&mut c),
        Suite::RbIdentity => rb_identity(&mut c, &mut rng),
        Suite::UniversalMaps => universal_maps(&mut c, &mut rng),
        Suite::BrbEquivalence => brb_equivalence(&mut c, &mut rng),
        Suite::Diffeo => diffeo(&mut c, &mut rng),
    };
    SuiteReport {
        suite,
        checks: c.checks,
        failure: result.err(),
    }
}

fn show_stuffle(x: &StuffleElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(w, c)| format!("{c}*{w}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn stuffle_axioms(c: &mut Checker, rng: &mut Sampler) -> Outcome {
    let empty: StuffleElement = Combination::basis(Word::empty());
    for _ in 0..60 {
        let (x, y, z) = (rng.stuffle_element(2), rng.stuffle_element(2), rng.stuffle_element(2));
        let xy = stuffle_product(&x, &y).or_fail("stuffle product")?;
        let yx = stuffle_product(&y, &x).or_fail("stuffle product")?;
        c.check(xy == yx, "commutativity", || format!("x = {}, y = {}", show_stuffle(&x), show_stuffle(&y)))?;
        let left = stuffle_product(&xy, &z).or_fail("stuffle product")?;
        let right = stuffle_product(&x, &stuffle_product(&y, &z).or_fail("stuffle product")?).or_fail("stuffle product")?;
        c.check(left == right, "associativity", || {
            format!("x = {}, y = {}, z = {}", show_stuffle(&x), show_stuffle(&y), show_stuffle(&z))
        })?;
        c.check(stuffle_product(&x, &empty).or_fail("stuffle product")? == x, "unit", || show_stuffle(&x))?;
    }
    for _ in 0..60 {
        let (p, q) = (rng.below(4), rng.below(4));
        let (a, b) = (rng.word(p), rng.word(q));
        let prod = stuffle_product(&Combination::basis(a.clone()), &Combination::basis(b.clone())).or_fail("stuffle product")?;
        let ok = prod.keys().all(|w| w.len() >= p.max(q) && w.len() <= p + q);
        c.check(ok, "grading bound", || format!("{a} * {b} = {}", show_stuffle(&prod)))?;
    }
    for len in 0..=4 {
        for _ in 0..6 {
            let w = rng.word(len);
            word_hopf_axioms(c, &w)?;
        }
    }
    for _ in 0..30 {
        let (x, y) = (rng.stuffle_element(2), rng.stuffle_element(2));
        let lhs = deconcat_coproduct(&stuffle_product(&x, &y).or_fail("stuffle product")?);
        let rhs = tensor_stuffle(&deconcat_coproduct(&x), &deconcat_coproduct(&y)).or_fail("stuffle product")?;
        c.check(lhs == rhs, "bialgebra compatibility", || {
            format!("x = {}, y = {}", show_stuffle(&x), show_stuffle(&y))
        })?;
    }
    Ok(())
}

fn word_hopf_axioms(c: &mut Checker, w: &Word<Monomial>) -> Outcome {
    let x: StuffleElement = Combination::basis(w.clone());
    let d = deconcat_coproduct(&x);
    let split_word = |v: &Word<Monomial>| deconcat_coproduct(&Combination::basis(v.clone()));
    c.check(
        d.map_slot(0, split_word) == d.map_slot(1, split_word),
        "coassociativity",
        || w.to_string(),
    )?;
    let mut left_counit = StuffleElement::zero();
    let mut right_counit = StuffleElement::zero();
    for (pair, k) in &d {
        left_counit.add_scaled(&Combination::basis(pair[1].clone()), &(k * counit(&Combination::basis(pair[0].clone()))));
        right_counit.add_scaled(&Combination::basis(pair[0].clone()), &(k * counit(&Combination::basis(pair[1].clone()))));
    }
    c.check(left_counit == x && right_counit == x, "counit", || w.to_string())?;
    let expected = if w.is_empty() {
        Combination::basis(Word::empty())
    } else {
        StuffleElement::zero()
    };
    let mut s_id = StuffleElement::zero();
    let mut id_s = StuffleElement::zero();
    for (pair, k) in &d {
        let (a, b) = (Combination::basis(pair[0].clone()), Combination::basis(pair[1].clone()));
        s_id.add_scaled(&stuffle_product(&antipode(&a).or_fail("antipode")?, &b).or_fail("stuffle")?, k);
        id_s.add_scaled(&stuffle_product(&a, &antipode(&b).or_fail("antipode")?).or_fail("stuffle")?, k);
    }
    c.check(s_id == expected && id_s == expected, "antipode identity", || w.to_string())
}

fn tensor_product(x: &Tensor<HopfMonomial>, y: &Tensor<HopfMonomial>) -> Tensor<HopfMonomial> {
    let mut out = Tensor::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_term(vec![a[0].mul(&b[0]), a[1].mul(&b[1])], ca * cb);
        }
    }
    out
}

fn hopf_axioms(c: &mut Checker) -> Outcome {
    for spec in [ladder_spec(6).or_fail("ladder")?, faa_di_bruno_spec(6).or_fail("faa di bruno")?] {
        let name = spec.name().to_string();
        c.check(spec.check_coassociativity(6).is_ok(), "coassociativity", || {
            format!("{name}: {}", spec.render(&spec.check_coassociativity(6).unwrap_err()))
        })?;
        for m in spec.monomials() {
            let x: HopfElement = Combination::basis(m.clone());
            let d = spec.coproduct(&x).or_fail("coproduct")?;
            let mut left = HopfElement::zero();
            let mut right = HopfElement::zero();
            for (pair, k) in &d {
                if pair[0].is_one() {
                    left.add_term(pair[1].clone(), k.clone());
                }
                if pair[1].is_one() {
                    right.add_term(pair[0].clone(), k.clone());
                }
            }
            c.check(left == x && right == x, "counit", || format!("{name}: {}", spec.render(m)))?;
            let mut s_id = HopfElement::zero();
            let mut id_s = HopfElement::zero();
            for (pair, k) in &d {
                let (a, b) = (Combination::basis(pair[0].clone()), Combination::basis(pair[1].clone()));
                s_id.add_scaled(&hopf_product(&spec.antipode(&a).or_fail("antipode")?, &b), k);
                id_s.add_scaled(&hopf_product(&a, &spec.antipode(&b).or_fail("antipode")?), k);
            }
            c.check(s_id.is_zero() && id_s.is_zero(), "antipode identity", || {
                format!("{name}: {}", spec.render(m))
            })?;
        }
        let ms = spec.monomials().to_vec();
        for a in &ms {
            for b in &ms {
                if a.degree() + b.degree() > spec.truncation() {
                    continue;
                }
                let prod = spec.coproduct(&Combination::basis(a.mul(b))).or_fail("coproduct")?;
                let da = spec.coproduct(&Combination::basis(a.clone())).or_fail("coproduct")?;
                let db = spec.coproduct(&Combination::basis(b.clone())).or_fail("coproduct")?;
                c.check(prod == tensor_product(&da, &db), "bialgebra compatibility", || {
                    format!("{name}: {} * {}", spec.render(a), spec.render(b))
                })?;
            }
        }
    }
    Ok(())
}

fn rb_identity(c: &mut Checker, rng: &mut Sampler) -> Outcome {
    let split = RotaBaxterSplit::PolePart;
    for _ in 0..300 {
        let x = rng.laurent_in(-4..=4);
        let y = rng.laurent_in(-4..=4);
        let input = || format!("x = {x}, y = {y}");
        c.check(split.identity_holds(&x, &y).or_fail("rota-baxter")?, "rota-baxter identity", input)?;
        let (p, m) = (split.plus(&x).or_fail("split")?, split.minus(&x).or_fail("split")?);
        c.eq(&(&p + &m), &x, "projector sum", || format!("x = {x}"))?;
        c.eq(&split.plus(&p).or_fail("split")?, &p, "idempotence", || format!("x = {x}"))?;
        let (py, my) = (split.plus(&y).or_fail("split")?, split.minus(&y).or_fail("split")?);
        let mm = &m * &my;
        c.check(mm.exponents().all(|e| e <= -2), "pole part closure", || format!("x = {x}, y = {y}"))?;
        c.check(split.in_plus(&(&p * &py)).or_fail("split")?, "regular part closure", || {
            format!("x = {x}, y = {y}")
        })?;
    }
    for _ in 0..50 {
        let x = rng.element(BasisKind::FreeCommutative);
        let y = rng.element(BasisKind::FreeCommutative);
        c.check(
            RotaBaxterSplit::TrivialPlus.identity_holds(&x, &y).or_fail("rota-baxter")?,
            "rota-baxter identity (trivial split)",
            || format!("x = {x}, y = {y}"),
        )?;
    }
    Ok(())
}

fn instances(ladder: u32, fdb: u32) -> Result<Vec<Arc<HopfAlgebraSpec>>> {
    Ok(vec![Arc::new(ladder_spec(ladder)?), Arc::new(faa_di_bruno_spec(fdb)?)])
}

fn word_tensor_product(spec: &HopfAlgebraSpec, t: &Tensor<HopfMonomial>) -> Tensor<Word<HopfMonomial>> {
    let mut out = Tensor::zero();
    for (pair, k) in t {
        let left = iota(spec, &Combination::basis(pair[0].clone())).expect("degree checked");
        let right = iota(spec, &Combination::basis(pair[1].clone())).expect("degree checked");
        for (a, ca) in &left {
            for (b, cb) in &right {
                out.add_term(vec![a.clone(), b.clone()], k * ca * cb);
            }
        }
    }
    out
}

fn universal_maps(c: &mut Checker, rng: &mut Sampler) -> Outcome {
    let k = BasisKind::Laurent;
    let split = RotaBaxterSplit::PolePart;

    let j_inv = functional_inverse_series(&StuffleFunctional::J);
    for len in 1..=5 {
        for _ in 0..4 {
            let w = rng.word(len);
            c.eq(
                &j_inv.eval_word(&w, k).or_fail("inverse")?,
                &StuffleFunctional::JInverse.eval_word(&w, k).or_fail("inverse")?,
                "inverse of j",
                || w.to_string(),
            )?;
            let generic = bogoliubov_prepare_functional(&StuffleFunctional::J, split, &w, k).or_fail("preparation")?;
            let closed = bogoliubov_j(split, &w).or_fail("preparation")?;
            c.eq(&generic, &closed, "preparation recursions", || w.to_string())?;
            c.eq(
                &StuffleFunctional::JPlus(split).eval_word(&w, k).or_fail("j+")?,
                &split.plus(&closed).or_fail("j+")?,
                "plus part of j",
                || w.to_string(),
            )?;
            c.eq(
                &StuffleFunctional::JMinus(split).eval_word(&w, k).or_fail("j-")?,
                &-split.minus(&closed).or_fail("j-")?,
                "minus part of j",
                || w.to_string(),
            )?;
        }
    }

    for _ in 0..40 {
        let p = 1 + rng.below(3);
        let q = 1 + rng.below(5 - p);
        let (a, b) = (rng.word(p), rng.word(q));
        let prod = stuffle_product(&Combination::basis(a.clone()), &Combination::basis(b.clone())).or_fail("stuffle")?;
        for f in [StuffleFunctional::JMinus(split), StuffleFunctional::JPlus(split)] {
            let lhs = f.eval(&prod, k).or_fail("functional")?;
            let rhs = &f.eval_word(&a, k).or_fail("functional")? * &f.eval_word(&b, k).or_fail("functional")?;
            c.eq(&lhs, &rhs, "multiplicativity", || format!("{f:?} on {a} * {b}"))?;
        }
    }

    for spec in instances(5, 5).or_fail("instances")? {
        let name = spec.name().to_string();
        let ms = spec.monomials().to_vec();
        let mut images: Vec<HopfWordElement> = Vec::new();
        for m in &ms {
            let x = Combination::basis(m.clone());
            let image = iota(&spec, &x).or_fail("iota")?;
            c.check(image == iota_recursive(&spec, &x).or_fail("iota")?, "iota recursion", || {
                format!("{name}: {}", spec.render(m))
            })?;
            let lhs = deconcat_coproduct(&image);
            let rhs = word_tensor_product(&spec, &spec.coproduct(&x).or_fail("coproduct")?);
            c.check(lhs == rhs, "iota is a coalgebra map", || format!("{name}: {}", spec.render(m)))?;
            c.check(!images.contains(&image), "iota is injective on monomials", || {
                format!("{name}: {}", spec.render(m))
            })?;
            images.push(image);
        }
        for a in &ms {
            for b in &ms {
                if a.degree() + b.degree() > 5 || b < a {
                    continue;
                }
                let lhs = iota(&spec, &Combination::basis(a.mul(b))).or_fail("iota")?;
                let rhs = stuffle_product(
                    &iota(&spec, &Combination::basis(a.clone())).or_fail("iota")?,
                    &iota(&spec, &Combination::basis(b.clone())).or_fail("iota")?,
                )
                .or_fail("stuffle")?;
                c.check(lhs == rhs, "iota is an algebra map", || {
                    format!("{name}: {} * {}", spec.render(a), spec.render(b))
                })?;
            }
        }
    }

    for spec in instances(4, 4).or_fail("instances")? {
        for _ in 0..3 {
            let phi = rng.lin_map(&spec, k);
            c.check(apply_t(&StuffleFunctional::J, &phi).or_fail("T")? == phi, "T(j, phi) = phi", || {
                format!("{}: {phi:?}", spec.name())
            })?;
            let f = rng.finite_functional("f", 2);
            let g = rng.finite_functional("g", 2);
            let lhs = apply_t(&convolve_functionals(&f, &g), &phi).or_fail("T")?;
            let rhs = apply_t(&f, &phi).or_fail("T")?.convolve(&apply_t(&g, &phi).or_fail("T")?).or_fail("convolution")?;
            c.check(lhs == rhs, "T is a homomorphism", || {
                let m = lhs.first_difference(&rhs).expect("maps differ");
                format!("{}: first difference at {}", spec.name(), spec.render(&m))
            })?;
        }
    }

    for _ in 0..3 {
        let f = rng.finite_functional("f", 2);
        let g = rng.finite_functional("g", 2);
        let h = rng.finite_functional("h", 2);
        let fj = odot(&f, &StuffleFunctional::J);
        let jf = odot(&StuffleFunctional::J, &f);
        let left = odot(&odot(&f, &g), &h);
        let right = odot(&f, &odot(&g, &h));
        for len in 1..=3 {
            for _ in 0..3 {
                let w = rng.word(len);
                let v = f.eval_word(&w, k).or_fail("functional")?;
                c.eq(&fj.eval_word(&w, k).or_fail("odot")?, &v, "f . j = f", || w.to_string())?;
                c.eq(&jf.eval_word(&w, k).or_fail("odot")?, &v, "j . f = f", || w.to_string())?;
                c.eq(
                    &left.eval_word(&w, k).or_fail("odot")?,
                    &right.eval_word(&w, k).or_fail("odot")?,
                    "odot associativity",
                    || w.to_string(),
                )?;
            }
        }
    }
    Ok(())
}

fn brb_equivalence(c: &mut Checker, rng: &mut Sampler) -> Outcome {
    let split = RotaBaxterSplit::PolePart;
    let k = BasisKind::Laurent;
    for spec in instances(6, 5).or_fail("instances")? {
        let name = spec.name().to_string();
        for _ in 0..4 {
            let phi = rng.lin_map(&spec, k);
            check_map(c, &name, &spec, &phi, split)?;
        }
        for _ in 0..3 {
            let chi = rng.character(&spec, k);
            let phi = chi.to_lin_map();
            check_map(c, &name, &spec, &phi, split)?;
            let d = closed_brb_character(&chi, split).or_fail("closed brb")?;
            let r = phi.brb_recursive(split).or_fail("recursive brb")?;
            c.check(
                d.plus.to_lin_map() == r.plus && d.minus.to_lin_map() == r.minus,
                "character decomposition on generators",
                || format!("{name}: {:?}", chi.generator_values().iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            )?;
            c.check(r.plus.is_character(6) && r.minus.is_character(6), "factors are characters", || {
                format!("{name}: {:?}", chi.generator_values().iter().map(|x| x.to_string()).collect::<Vec<_>>())
            })?;
        }
    }
    Ok(())
}

fn check_map(c: &mut Checker, name: &str, spec: &HopfAlgebraSpec, phi: &UnitalLinMap, split: RotaBaxterSplit) -> Outcome {
    let first_diff = |a: &UnitalLinMap, b: &UnitalLinMap| {
        let m = a.first_difference(b).expect("maps differ");
        format!("{name}: first difference at {}: {} vs {}", spec.render(&m), a.value(&m), b.value(&m))
    };
    let inv = closed_inverse(phi).or_fail("closed inverse")?;
    let rec = phi.inverse_recursive();
    c.check(inv == rec, "closed inverse = recursive inverse", || first_diff(&inv, &rec))?;
    let closed = closed_brb(phi, split).or_fail("closed brb")?;
    let recursive = phi.brb_recursive(split).or_fail("recursive brb")?;
    c.check(closed.plus == recursive.plus, "closed plus = recursive plus", || {
        first_diff(&closed.plus, &recursive.plus)
    })?;
    c.check(closed.minus == recursive.minus, "closed minus = recursive minus", || {
        first_diff(&closed.minus, &recursive.minus)
    })?;
    let lhs = closed.minus.convolve(phi).or_fail("convolution")?;
    c.check(lhs == closed.plus, "phi- * phi = phi+", || first_diff(&lhs, &closed.plus))?;
    c.check(
        closed.plus.in_plus_sector(split).or_fail("sector")? && closed.minus.in_minus_sector(split).or_fail("sector")?,
        "sectors",
        || format!("{name}: decomposition leaves its sector"),
    )?;
    let materialized = apply_t_materialized(&StuffleFunctional::JMinus(split), phi).or_fail("T")?;
    c.check(materialized == closed.minus, "folded = materialized", || {
        first_diff(&materialized, &closed.minus)
    })
}

fn diffeo(c: &mut Checker, rng: &mut Sampler) -> Outcome {
    let split = RotaBaxterSplit::PolePart;
    c.check(
        composition_law_holds(FaaDiBrunoOrientation::OuterLeft, 4).or_fail("convention")?
            && !composition_law_holds(FaaDiBrunoOrientation::InnerLeft, 4).or_fail("convention")?,
        "orientation convention",
        || "only the shipped orientation should turn convolution into composition".into(),
    )?;
    for _ in 0..5 {
        let f = rng.diffeo(8);
        let d = birkhoff_factorize_via(&f, split, BrbRoute::Closed).or_fail("factorization")?;
        c.check(d.composed_equals_plus(&f).or_fail("compose")?, "f- o f = f+", || f.to_string())?;
        c.check(d.sector_violation(split).or_fail("sector")?.is_none(), "sectors", || f.to_string())?;
        let inv = f.compositional_inverse();
        c.check(inv.compose(&f).or_fail("compose")?.is_identity(), "compositional inverse", || f.to_string())?;
    }
    for _ in 0..3 {
        let f = rng.diffeo(5);
        let closed = birkhoff_factorize_via(&f, split, BrbRoute::Closed).or_fail("factorization")?;
        let recursive = birkhoff_factorize_via(&f, split, BrbRoute::Recursive).or_fail("factorization")?;
        c.check(closed == recursive, "route independence", || f.to_string())?;
        let (g, h) = (rng.diffeo(5), rng.diffeo(5));
        let left = f.compose(&g).or_fail("compose")?.compose(&h).or_fail("compose")?;
        let right = f.compose(&g.compose(&h).or_fail("compose")?).or_fail("compose")?;
        c.check(left == right, "composition associativity", || format!("{f}; {g}; {h}"))?;
    }
    let identity = FormalDiffeo::identity(6, BasisKind::Laurent);
    c.check(identity.compositional_inverse() == identity, "inverse of identity", || identity.to_string())?;
    Ok(())
}
