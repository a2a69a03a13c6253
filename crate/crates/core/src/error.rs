use thiserror::Error;

use crate::algebra::BasisKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis kind mismatch: {left:?} vs {right:?}")]
    KindMismatch { left: BasisKind, right: BasisKind },

    #[error("pole-part split needs a Laurent element, got {0:?}")]
    SplitNeedsLaurent(BasisKind),

    #[error("degree {degree} exceeds truncation degree {truncation}")]
    DegreeExceedsTruncation { degree: u32, truncation: u32 },

    #[error("element has a component in degree 0")]
    NotAugmented,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("maps are defined over different Hopf algebras or targets")]
    SpecMismatch,

    #[error("invalid Hopf algebra presentation: {0}")]
    InvalidSpec(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series truncation order {order} needs a Faa di Bruno algebra of degree {needed}, got {got}")]
    TruncationMismatch { order: usize, needed: u32, got: u32 },

    #[error("coefficient index {0} out of range")]
    CoefficientIndex(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
