use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Lehmer code {code:?} for n = {n}")]
    InvalidCode { code: Vec<usize>, n: usize },

    #[error("size mismatch: expected n = {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("cannot embed a permutation of size {from} into S_{to}")]
    Embed { from: usize, to: usize },

    #[error("{u} -> {w} is not a cover in Bruhat order")]
    NotACover { u: String, w: String },

    #[error("u not ≤ w in Bruhat order (u = {u}, w = {w})")]
    NotBruhatLeq { u: String, w: String },

    #[error("invalid rc-graph: {0}")]
    InvalidRcGraph(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("integer overflow in polynomial arithmetic")]
    Overflow,

    #[error("polynomial uses x{var} but only {n} variables are available")]
    TooManyVariables { var: usize, n: usize },

    #[error("polynomial is not in the span of Schubert polynomials of S_{n}: {reason}")]
    NotInSpan { n: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
