use thiserror::Error;

/// Errors produced by the exact-arithmetic layers.
///
/// Structural misuse that cannot be reached through validated input
/// (mixing elements of different fields inside low-level arithmetic,
/// incompatible matrix shapes in `add`/`mul`) panics instead; every
/// user-reachable failure surfaces as one of these variants.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial must be monic: {0}")]
    NotMonic(String),
    #[error("polynomial must have nonzero degree: {0}")]
    ConstantPoly(String),
    #[error("polynomial has zero constant term: {0}")]
    ZeroConstantTerm(String),
    #[error("division by zero polynomial")]
    ZeroDivisor,
    #[error("{0} is not primitive over F_{1}")]
    NotPrimitive(String, u64),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("elements belong to different fields")]
    ParentMismatch,
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("minimal polynomial of the matrix does not match the field modulus")]
    ModulusMismatch,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{what} exceeds the feasible range ({detail})")]
    Infeasible { what: &'static str, detail: String },
    #[error("cannot parse {what}: offending token `{token}`")]
    Parse { what: &'static str, token: String },
    #[error("keystream packing requires q = 2 and m <= 64 (got q = {q}, m = {m})")]
    KeystreamUnsupported { q: u64, m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn infeasible(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Infeasible {
            what,
            detail: detail.into(),
        }
    }

    pub fn parse(what: &'static str, token: impl Into<String>) -> Self {
        Error::Parse {
            what,
            token: token.into(),
        }
    }
}
