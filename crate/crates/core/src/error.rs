use thiserror::Error;

use crate::cat::CatError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error("type mismatch in {subtree}: {detail}")]
    TypeMismatch { subtree: String, detail: String },
    #[error("unbound reference {0}")]
    UnboundRef(String),
    #[error("missing structure: {0}")]
    MissingStructure(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("hint rejected: {0}")]
    HintInvalid(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("coherence failure in {equation}: {detail}")]
    CoherenceFailure { equation: String, detail: String },
    #[error("inverse failure at object {object}: {detail}")]
    InverseFailure { object: String, detail: String },
    #[error("common composites disagree: {0}")]
    CommonCompositeMismatch(String),
    #[error("synthesized structures disagree: {0}")]
    StructuresDisagree(String),
    #[error("snake equation fails: {0}")]
    SnakeFailure(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
