use thiserror::Error;

/// Errors raised by the algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("compositions have different weights ({left} and {right})")]
    WeightMismatch { left: usize, right: usize },
    #[error("element is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<usize>),
    #[error("expected an element of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("series has a zero constant term")]
    ZeroConstantTerm,
    #[error("truncation orders differ ({0} and {1})")]
    TruncationMismatch(usize, usize),
    #[error("functional does not restrict to the counit in degree 0")]
    NotUnital,
    #[error("character is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("{0} is not an odd index")]
    NotOdd(String),
    #[error("algebra `{0}` has no finite basis listing in degree {1}")]
    NotEnumerable(String, usize),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
