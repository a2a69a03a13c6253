//! Formal identity-tangent diffeomorphisms `f(x) = x + sum_(n>=2) f_n x^n`
//! truncated at a fixed order, and their Birkhoff factorization
//! `f_- o f = f_+` through the Faa di Bruno algebra.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, BasisKind, RotaBaxterSplit};
use crate::convolution::{Character, HopfMap};
use crate::error::{Error, Result};
use crate::hopf::{faa_di_bruno_spec_oriented, FaaDiBrunoOrientation, HopfAlgebraSpec};
use crate::series::compose_truncated;
use crate::universal::closed_brb_character;

#[derive(Debug, Clone, PartialEq)]
pub struct FormalDiffeo {
    kind: BasisKind,
    /// `series[n]` is the coefficient of `x^n`, for `0 <= n <= order`.
    series: Vec<AlgebraElement>,
}

impl FormalDiffeo {
    pub fn identity(order: usize, kind: BasisKind) -> Self {
        let mut series = vec![AlgebraElement::zero(kind); order + 1];
        if order >= 1 {
            series[1] = AlgebraElement::one(kind);
        }
        FormalDiffeo { kind, series }
    }

    /// Builds `x + sum c_n x^n` from `(n, c_n)` pairs with `2 <= n <= order`.
    /// Repeated indices are summed.
    pub fn new<I>(order: usize, kind: BasisKind, coefficients: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, AlgebraElement)>,
    {
        if order == 0 {
            return Err(Error::InvalidSpec("diffeomorphism order must be at least 1".into()));
        }
        let mut out = Self::identity(order, kind);
        for (n, c) in coefficients {
            if n < 2 || n > order {
                return Err(Error::CoefficientIndex(n));
            }
            out.series[n] = out.series[n].try_add(&c)?;
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.series.len() - 1
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    /// Coefficient of `x^n` (zero beyond the order).
    pub fn coefficient(&self, n: usize) -> AlgebraElement {
        self.series.get(n).cloned().unwrap_or_else(|| AlgebraElement::zero(self.kind))
    }

    /// `(n, f_n)` for `2 <= n <= order`.
    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &AlgebraElement)> {
        self.series.iter().enumerate().skip(2)
    }

    pub fn is_identity(&self) -> bool {
        self.coefficients().all(|(_, c)| c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        if self.kind != other.kind {
            return Err(Error::KindMismatch {
                left: self.kind,
                right: other.kind,
            });
        }
        Ok(())
    }

    /// `self o other`, truncated at the common order.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(FormalDiffeo {
            kind: self.kind,
            series: compose_truncated(&self.series, &other.series, self.order(), self.kind),
        })
    }

    /// The `g` with `self o g = g o self = id`, solved one coefficient at a time.
    pub fn compositional_inverse(&self) -> Self {
        let mut g = Self::identity(self.order(), self.kind);
        for n in 2..=self.order() {
            let partial = compose_truncated(&self.series, &g.series, n, self.kind);
            g.series[n] = -&partial[n];
        }
        g
    }
}

impl fmt::Display for FormalDiffeo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x")?;
        for (n, c) in self.coefficients() {
            if !c.is_zero() {
                write!(f, " + ({c})*x^{n}")?;
            }
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

fn check_faa_di_bruno(spec: &HopfAlgebraSpec, order: usize) -> Result<()> {
    if spec.name() != "faadibruno" {
        return Err(Error::InvalidSpec(format!(
            "diffeomorphisms live on the Faa di Bruno algebra, not `{}`",
            spec.name()
        )));
    }
    let needed = order.saturating_sub(1) as u32;
    if spec.truncation() < needed {
        return Err(Error::TruncationMismatch {
            order,
            needed,
            got: spec.truncation(),
        });
    }
    Ok(())
}

/// Coordinate character: `a_n -> f_(n+1)`.
pub fn diffeo_to_character(f: &FormalDiffeo, spec: Arc<HopfAlgebraSpec>) -> Result<Character> {
    check_faa_di_bruno(&spec, f.order())?;
    let values = (1..=spec.truncation() as usize).map(|n| f.coefficient(n + 1)).collect();
    Character::new(spec, f.kind, values)
}

/// Reads `f_(n+1) = phi(a_n)` back for `n + 1 <= order`.
pub fn character_to_diffeo<M: HopfMap + ?Sized>(phi: &M, order: usize) -> Result<FormalDiffeo> {
    let spec = phi.spec();
    check_faa_di_bruno(spec, order)?;
    FormalDiffeo::new(
        order,
        phi.kind(),
        (2..=order).map(|n| (n, phi.value(&spec.generator(n - 2)))),
    )
}

/// Which decomposition routine produces the character factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BrbRoute {
    /// Universal closed formulas, evaluated on generators.
    #[default]
    Closed,
    /// Recursive Bogoliubov preparation over the full monomial table.
    Recursive,
}

/// `f_- o f = f_+` with `f_+` pole-free and `f_-` purely polar.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffeoFactorization {
    pub plus: FormalDiffeo,
    pub minus: FormalDiffeo,
}

impl DiffeoFactorization {
    /// Whether `minus o original = plus` holds exactly.
    pub fn composed_equals_plus(&self, original: &FormalDiffeo) -> Result<bool> {
        Ok(self.minus.compose(original)? == self.plus)
    }

    /// First coefficient index violating the sector constraints.
    pub fn sector_violation(&self, split: RotaBaxterSplit) -> Result<Option<usize>> {
        for (n, c) in self.plus.coefficients() {
            if !split.in_plus(c)? {
                return Ok(Some(n));
            }
        }
        for (n, c) in self.minus.coefficients() {
            if !split.in_minus(c)? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }
}

pub fn birkhoff_factorize(f: &FormalDiffeo, split: RotaBaxterSplit) -> Result<DiffeoFactorization> {
    birkhoff_factorize_via(f, split, BrbRoute::Closed)
}

pub fn birkhoff_factorize_via(f: &FormalDiffeo, split: RotaBaxterSplit, route: BrbRoute) -> Result<DiffeoFactorization> {
    factorize_oriented(f, split, route, FaaDiBrunoOrientation::OuterLeft)
}

fn factorize_oriented(
    f: &FormalDiffeo,
    split: RotaBaxterSplit,
    route: BrbRoute,
    orientation: FaaDiBrunoOrientation,
) -> Result<DiffeoFactorization> {
    let order = f.order();
    if order < 2 {
        return Ok(DiffeoFactorization {
            plus: f.clone(),
            minus: FormalDiffeo::identity(order, f.kind),
        });
    }
    let spec = Arc::new(faa_di_bruno_spec_oriented(order as u32 - 1, orientation)?);
    let chi = diffeo_to_character(f, spec)?;
    let (plus, minus) = match route {
        BrbRoute::Closed => {
            let d = closed_brb_character(&chi, split)?;
            (character_to_diffeo(&d.plus, order)?, character_to_diffeo(&d.minus, order)?)
        }
        BrbRoute::Recursive => {
            let d = chi.to_lin_map().brb_recursive(split)?;
            (character_to_diffeo(&d.plus, order)?, character_to_diffeo(&d.minus, order)?)
        }
    };
    Ok(DiffeoFactorization { plus, minus })
}

/// Factorization computed on a Faa di Bruno algebra with the given
/// orientation; only the shipped orientation satisfies `f_- o f = f_+` in
/// general.
pub fn factorize_with_orientation(
    f: &FormalDiffeo,
    split: RotaBaxterSplit,
    orientation: FaaDiBrunoOrientation,
) -> Result<DiffeoFactorization> {
    factorize_oriented(f, split, BrbRoute::Closed, orientation)
}

/// Whether `phi_f * phi_g = phi_(f o g)` holds for generic symbolic series
/// of the given order under an orientation.
pub fn composition_law_holds(orientation: FaaDiBrunoOrientation, order: usize) -> Result<bool> {
    let kind = BasisKind::FreeCommutative;
    let generic = |prefix: &str| {
        FormalDiffeo::new(order, kind, (2..=order).map(|n| (n, AlgebraElement::symbol(&format!("{prefix}{n}")))))
    };
    let (f, g) = (generic("f")?, generic("g")?);
    let spec = Arc::new(faa_di_bruno_spec_oriented(order as u32 - 1, orientation)?);
    let phi_f = diffeo_to_character(&f, spec.clone())?.to_lin_map();
    let phi_g = diffeo_to_character(&g, spec.clone())?.to_lin_map();
    let phi_fg = diffeo_to_character(&f.compose(&g)?, spec)?.to_lin_map();
    Ok(phi_f.convolve(&phi_g)? == phi_fg)
}
