use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} is not valid for a system with {rank} generators")]
    InvalidGenerator { index: usize, rank: usize },
    #[error("unsupported Coxeter system: {0}")]
    UnsupportedSystem(String),
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("word of size {size} exceeds the limit {limit}")]
    WordTooLarge { size: usize, limit: usize },
    #[error("the word does not contain the element")]
    NotContained,
    #[error("the element is the identity; the subword complex would be a full simplex")]
    DegeneratePi,
    #[error("order is not a permutation of the facets")]
    NotAPermutation,
    #[error("{size} vertices exceed the limit {limit}")]
    TooManyVertices { size: usize, limit: usize },
    #[error("colon ideal at generator {index} is not generated by variables")]
    FailureAt { index: usize },
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("ideal has no generators")]
    ZeroIdeal,
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("instance is not in the special class")]
    NotSpecial,
    #[error("factorization mismatch: {0}")]
    FactorizationMismatch(String),
    #[error("complete-intersection generators disagree with the minimal non-faces: {0}")]
    CIGeneratorMismatch(String),
    #[error("closed formula disagrees with the general route: {0}")]
    FormulaMismatch(String),
    #[error("vertex decomposition mismatch: {0}")]
    VertexDecompositionMismatch(String),
    #[error("input too large for exhaustive computation: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}
