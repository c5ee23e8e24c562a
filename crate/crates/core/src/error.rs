use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty mosaic code")]
    EmptyCode,
    #[error("code length {0} is not a perfect square")]
    NonSquareLength(usize),
    #[error("invalid character {0:?} in mosaic code (expected 0-9 or 'a')")]
    InvalidDigit(char),
    #[error("tile kind {0} is out of range 0..=10")]
    InvalidTile(u8),
    #[error("mosaic rows are not square")]
    NonSquareGrid,
    #[error("mosaic is not suitably connected")]
    NotSuitablyConnected,

    #[error("invalid torus knot parameters (p, q) = ({p}, {q}): {reason}")]
    InvalidTorusParams { p: i64, q: i64, reason: &'static str },
    #[error("invalid braid plan: {0}")]
    InvalidPlan(String),
    #[error("full-braid size must be at least 3, got {0}")]
    FullBraidTooSmall(usize),
    #[error("cannot reduce to q = {q}: {reason}")]
    InvalidRemovalTarget { q: i64, reason: String },
    #[error("boundary permutation undefined: {0}")]
    PermutationUndefined(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {generator} requires parameter {param}")]
    MissingParameter { generator: String, param: &'static str },

    #[error("invalid enumeration prefix: {0}")]
    InvalidPrefix(String),

    #[error("PD code parse error: {0}")]
    PdParse(String),
    #[error("diagram has no crossings")]
    Crossingless,
    #[error("expected {expected} component(s), found {found}")]
    ComponentCount { expected: usize, found: usize },

    #[error("skein budget of {0} nodes exceeded")]
    BudgetExceeded(usize),
    #[error("determinant {0} is not an Alexander polynomial of a knot")]
    NotAKnotPolynomial(String),
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
    #[error("Alexander determinant exceeded the exact coefficient range")]
    CoefficientOverflow,

    #[error("table error: {0}")]
    Table(String),
    #[error("appendix file error at line {line}: {message}")]
    AppendixParse { line: usize, message: String },
    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}
