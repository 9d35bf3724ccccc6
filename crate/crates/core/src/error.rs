use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subalgebra embedding is not injective")]
    NotInjective,
    #[error("image is not a subalgebra: [{left}, {right}] leaves the span")]
    NotSubalgebra { left: String, right: String },
    #[error("invalid complement: {0}")]
    InvalidComplement(String),
    #[error("modules are over different Lie algebras")]
    AlgebraMismatch,
    #[error("invalid extension datum: {0}")]
    InvalidExtension(String),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("obstruction class is non-trivial, no splitting exists")]
    AlphaNontrivial,
    #[error("normal form inconsistency: {0}")]
    Rewriting(String),
    #[error("not a short exact sequence of modules: {0}")]
    NotExact(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{path}: {message}")]
    Validation { path: String, message: String },
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownExample(String),
    #[error("missing module: {0}")]
    MissingModule(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
