use std::fmt;

use super::{AlgebraElement, BasisKind, Monomial};
use crate::error::{Error, Result};

/// A splitting `A = A+ (+) A-` of the target algebra into two subalgebras.
///
/// `PolePart` separates strictly negative powers of `e` (the image of `p-`)
/// from the rest. `TrivialPlus` takes `p+ = Id` and `p- = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RotaBaxterSplit {
    PolePart,
    TrivialPlus,
}

impl RotaBaxterSplit {
    pub fn name(self) -> &'static str {
        match self {
            RotaBaxterSplit::PolePart => "pole-part",
            RotaBaxterSplit::TrivialPlus => "trivial-plus",
        }
    }

    /// `p-(x)`.
    pub fn minus(self, x: &AlgebraElement) -> Result<AlgebraElement> {
        match self {
            RotaBaxterSplit::PolePart => {
                if x.kind() != BasisKind::Laurent {
                    return Err(Error::SplitNeedsLaurent(x.kind()));
                }
                Ok(x.filter(|m| matches!(m, Monomial::Laurent(n) if *n < 0)))
            }
            RotaBaxterSplit::TrivialPlus => Ok(AlgebraElement::zero(x.kind())),
        }
    }

    /// `p+(x) = x - p-(x)`.
    pub fn plus(self, x: &AlgebraElement) -> Result<AlgebraElement> {
        Ok(x - &self.minus(x)?)
    }

    /// Whether `x` lies in `A+`.
    pub fn in_plus(self, x: &AlgebraElement) -> Result<bool> {
        Ok(self.minus(x)?.is_zero())
    }

    /// Whether `x` lies in `A-`.
    pub fn in_minus(self, x: &AlgebraElement) -> Result<bool> {
        Ok(self.plus(x)?.is_zero())
    }

    /// Checks `p+(x)p+(y) + p+(xy) = p+(x p+(y)) + p+(p+(x) y)` exactly.
    pub fn identity_holds(self, x: &AlgebraElement, y: &AlgebraElement) -> Result<bool> {
        let px = self.plus(x)?;
        let py = self.plus(y)?;
        let xy = x.try_mul(y)?;
        let lhs = &(&px * &py) + &self.plus(&xy)?;
        let rhs = &self.plus(&(x * &py))? + &self.plus(&(&px * y))?;
        Ok(lhs == rhs)
    }
}

impl fmt::Display for RotaBaxterSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RotaBaxterSplit {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pole-part" | "pole" | "minimal-subtraction" => Ok(RotaBaxterSplit::PolePart),
            "trivial-plus" | "trivial" => Ok(RotaBaxterSplit::TrivialPlus),
            other => Err(format!("unknown split `{other}` (expected pole-part or trivial-plus)")),
        }
    }
}
