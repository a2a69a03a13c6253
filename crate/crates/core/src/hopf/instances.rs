use num_traits::One;

use super::spec::{CoproductTerm, HopfAlgebraSpec, HopfGenerator};
use crate::algebra::{AlgebraElement, BasisKind, Monomial, Rational};
use crate::error::{Error, Result};
use crate::series::compose_truncated;

/// Ladder algebra: generators `l1..lN`, `deg ln = n`,
/// `D(ln) = sum_{k=0}^{n} lk (x) l(n-k)` with `l0 = 1`.
pub fn ladder_spec(n: u32) -> Result<HopfAlgebraSpec> {
    let generators: Vec<HopfGenerator> = (1..=n)
        .map(|d| HopfGenerator {
            name: format!("l{d}"),
            degree: d,
        })
        .collect();
    let scratch = HopfAlgebraSpec::new("ladder", generators.clone(), vec![Vec::new(); n as usize], n.max(1))?;
    let table = (1..=n as usize)
        .map(|d| {
            (1..d)
                .map(|k| (scratch.generator(k - 1), scratch.generator(d - k - 1), Rational::one()))
                .collect()
        })
        .collect();
    HopfAlgebraSpec::new("ladder", generators, table, n)
}

/// Which tensor factor of `D(a_n)` carries the coefficients of the outer
/// series in a composition `f o g`.
///
/// With `OuterLeft`, convolution of the coordinate characters follows
/// composition order: `phi_f * phi_g = phi_(f o g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaaDiBrunoOrientation {
    OuterLeft,
    InnerLeft,
}

pub const FAA_DI_BRUNO_CONVENTION: &str =
    "phi_f(a_n) = coefficient of x^(n+1) in f; D(a_n) carries the outer series on the left, so phi_f * phi_g = phi_(f o g) and phi_- * phi = phi_+ reads f_- o f = f_+";

/// Faa di Bruno algebra with the shipped orientation.
pub fn faa_di_bruno_spec(n: u32) -> Result<HopfAlgebraSpec> {
    faa_di_bruno_spec_oriented(n, FaaDiBrunoOrientation::OuterLeft)
}

/// Faa di Bruno algebra on coordinates `a1..aN` of `f(x) = x + sum a_m x^(m+1)`.
///
/// The structure constants are read off from the composition of two generic
/// truncated series with symbolic coefficients `u_k` (outer) and `v_k`
/// (inner).
pub fn faa_di_bruno_spec_oriented(n: u32, orientation: FaaDiBrunoOrientation) -> Result<HopfAlgebraSpec> {
    if n == 0 {
        return Err(Error::InvalidSpec("truncation degree must be at least 1".into()));
    }
    let generators: Vec<HopfGenerator> = (1..=n)
        .map(|d| HopfGenerator {
            name: format!("a{d}"),
            degree: d,
        })
        .collect();
    let scratch = HopfAlgebraSpec::new("faadibruno", generators.clone(), vec![Vec::new(); n as usize], n)?;

    let kind = BasisKind::FreeCommutative;
    let order = n as usize + 1;
    let generic = |prefix: &str| -> Vec<AlgebraElement> {
        let mut s = vec![AlgebraElement::zero(kind); order + 1];
        s[1] = AlgebraElement::one(kind);
        for k in 1..=n as usize {
            s[k + 1] = AlgebraElement::symbol(&format!("{prefix}{k}"));
        }
        s
    };
    let composed = compose_truncated(&generic("u"), &generic("v"), order, kind);

    let mut table: Vec<Vec<CoproductTerm>> = Vec::with_capacity(n as usize);
    for d in 1..=n as usize {
        let mut entries = Vec::new();
        for (mono, c) in composed[d + 1].terms() {
            let Monomial::Symbols(names) = mono else {
                unreachable!("symbolic composition")
            };
            let mut outer = Vec::new();
            let mut inner = Vec::new();
            for s in names {
                let idx: usize = s[1..].parse().expect("generated symbol name");
                match &s[..1] {
                    "u" => outer.push(idx - 1),
                    _ => inner.push(idx - 1),
                }
            }
            if outer.is_empty() || inner.is_empty() {
                // the primitive part a_n (x) 1 + 1 (x) a_n
                if !c.is_one() || names.len() != 1 {
                    return Err(Error::InvalidSpec(format!("unexpected term {c} * {mono} in composition")));
                }
                continue;
            }
            let (outer, inner) = (scratch.monomial(&outer), scratch.monomial(&inner));
            let (left, right) = match orientation {
                FaaDiBrunoOrientation::OuterLeft => (outer, inner),
                FaaDiBrunoOrientation::InnerLeft => (inner, outer),
            };
            entries.push((left, right, c.clone()));
        }
        table.push(entries);
    }
    let spec = HopfAlgebraSpec::new("faadibruno", generators, table, n)?;
    Ok(match orientation {
        FaaDiBrunoOrientation::OuterLeft => spec.with_convention(FAA_DI_BRUNO_CONVENTION),
        FaaDiBrunoOrientation::InnerLeft => spec.with_convention("inner series on the left (phi_f * phi_g = phi_(g o f))"),
    })
}

/// Looks an instance up by name.
pub fn instance(name: &str, n: u32) -> Result<HopfAlgebraSpec> {
    match name {
        "ladder" => ladder_spec(n),
        "faadibruno" | "faa-di-bruno" | "fdb" => faa_di_bruno_spec(n),
        other => Err(Error::InvalidSpec(format!(
            "unknown Hopf algebra instance `{other}` (expected ladder or faadibruno)"
        ))),
    }
}
