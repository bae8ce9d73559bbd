use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("rank mismatch: expected rank {expected}, found generator index {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("empty word has no primitive root")]
    EmptyWord,

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("not a one-boundary surface: face tracing found {faces} faces")]
    NotOneBoundary { faces: usize },

    #[error("coincident rays")]
    CoincidentRays,

    #[error("degenerate pair: {0}")]
    DegeneratePair(String),

    #[error("closure has {components} components")]
    NotAKnot { components: usize },

    #[error("not a knot-group presentation: Alexander polynomial {polynomial} has value {value} at t = 1")]
    NotKnotGroup { polynomial: String, value: String },

    #[error("invalid fibered model: {0}")]
    InvalidModel(String),

    #[error("unknown knot `{0}`")]
    UnknownKnot(String),

    #[error("knot `{0}` is not fibered; brackets are only available for fibered models")]
    NotFibered(String),

    #[error("presentation does not have meridional shape: {0}")]
    ShapeMismatch(String),

    #[error("word is not in the commutator subgroup: meridian exponent sum is {0}")]
    NotInCover(i64),

    #[error("no minimum certified within bound {bound}; best candidate {best} over levels {low}..={high}")]
    OrbitNotCertified {
        bound: usize,
        best: String,
        low: i64,
        high: i64,
    },

    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Coarse classification used for stable exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Scope,
    Degenerate,
}

impl Error {
    pub fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NotFibered(_) => ErrorKind::Scope,
            Error::DegeneratePair(_) | Error::CoincidentRays => ErrorKind::Degenerate,
            _ => ErrorKind::Usage,
        }
    }

    /// Stable short code printed by the command-line tool.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E-PARSE",
            Error::RankMismatch { .. } => "E-RANK",
            Error::InvalidAutomorphism(_) => "E-AUTOMORPHISM",
            Error::EmptyWord => "E-EMPTY",
            Error::InvalidSurface(_) => "E-SURFACE",
            Error::NotOneBoundary { .. } => "E-FACES",
            Error::CoincidentRays => "E-COINCIDENT",
            Error::DegeneratePair(_) => "E-DEGENERATE",
            Error::NotAKnot { .. } => "E-COMPONENTS",
            Error::NotKnotGroup { .. } => "E-NOT-KNOT-GROUP",
            Error::InvalidModel(_) => "E-MODEL",
            Error::UnknownKnot(_) => "E-UNKNOWN-KNOT",
            Error::NotFibered(_) => "E-SCOPE",
            Error::ShapeMismatch(_) => "E-SHAPE",
            Error::NotInCover(_) => "E-NOT-IN-COVER",
            Error::OrbitNotCertified { .. } => "E-ORBIT",
            Error::Invalid(_) => "E-INVALID",
        }
    }
}
