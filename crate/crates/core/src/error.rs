use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not antisymmetric: entry ({row}, {col})")]
    NotAntisymmetric { row: usize, col: usize },

    #[error("pfaffian requires an even-sized matrix, got size {0}")]
    OddPfaffian(usize),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("variable `{0}` has no assigned value")]
    MissingVariable(String),

    #[error("polynomial variable lists are incompatible: {0:?} vs {1:?}")]
    IncompatibleRings(Vec<String>, Vec<String>),

    #[error("polynomial parse error at byte {pos}: {msg}")]
    PolyParse { pos: usize, msg: String },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFails(String, String, String),

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("torus has {generators} generators but the rank bound is {bound}")]
    RankBoundExceeded { generators: usize, bound: usize },

    #[error("torus verification failed: {0}")]
    Torus(String),

    #[error("generator {0} is not diagonalizable over the rationals")]
    NotRationallyDiagonalizable(usize),

    #[error("odd dimension {0}: no top power of a two-form")]
    OddDimension(usize),

    #[error(
        "no non-degenerate witness found with parameters bounded by {0}; \
         raise LIESYMP_WITNESS_BOUND to search a larger box"
    )]
    WitnessBoundExceeded(u64),

    #[error("invalid catalog parameters for `{entry}`: {reason}")]
    InvalidParams { entry: String, reason: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
