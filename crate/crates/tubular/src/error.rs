use thiserror::Error;

use crate::exact_linear::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("no nilpotency bound N <= {cap}: algebra is not finite-dimensional within the cap")]
    NotFiniteDimensional { cap: usize },
    #[error("relation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("algebra is not basic: {0}")]
    NotBasic(String),
    #[error("bad arrow assignment: {0}")]
    BadAssignment(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("module is zero")]
    ZeroModule,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("left and right socles differ")]
    SocleNotTwoSided,
    #[error("covering property fails: {0}")]
    NotCovering(String),
    #[error("module is not finitely supported on the covering window")]
    NotFinitelySupported,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{0} is not a ray vertex")]
    NotRayVertex(String),
    #[error("{0} is not a coray vertex")]
    NotCorayVertex(String),
    #[error("translation quiver does not have the shape of a tube with canonical coordinates: {0}")]
    NonCanonicalShape(String),
    #[error("subset is not closed")]
    NotClosed,
    #[error("unsupported tubular type {0}")]
    BadTubularType(String),
    #[error("bad input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
