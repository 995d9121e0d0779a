use thiserror::Error;

/// Errors raised while building or querying presented rings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("generator `{0}` must have positive degree")]
    ZeroDegreeGenerator(String),

    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),

    #[error("inconsistent presentation: relation has nonzero degree-0 part {0}")]
    InconsistentRelation(String),

    #[error("elements live over different generator sets")]
    UniverseMismatch,

    #[error("degree {degree} exceeds the computed cutoff {cutoff}")]
    DegreeOverflow { degree: u32, cutoff: u32 },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid bundle data: {0}")]
    InvalidBundle(String),

    #[error("bundle kind or rank does not fit this construction: {0}")]
    KindMismatch(String),

    #[error("missing Euler class for an oriented even-rank bundle")]
    MissingEulerClass,

    #[error("map degree mismatch: generator `{generator}` has degree {expected}, image has degree {found}")]
    MapDegreeMismatch {
        generator: String,
        expected: u32,
        found: u32,
    },

    #[error("not a ring map: relation `{relation}` maps to nonzero `{image}` in degree {degree}")]
    NotARingMap {
        relation: String,
        image: String,
        degree: u32,
    },

    #[error("a cutoff is required for this infinite-dimensional ring")]
    MissingCutoff,
}

pub type Result<T> = std::result::Result<T, Error>;
