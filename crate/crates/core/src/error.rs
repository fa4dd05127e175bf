use alloc::string::String;
use core::fmt;

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials with different isobaric degree or part bound were added.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Sequences over different part bounds `k` were combined.
    PartBoundMismatch {
        left: usize,
        right: usize,
    },
    /// Backward companion rows need an invertible companion matrix (`t_k != 0`).
    SingularCore,
    /// The Stirling-ratio matrix divides by a vanishing `B_m(q)`.
    DegenerateQ {
        q: Rational,
        n: usize,
    },
    /// Local value lists of different truncation length.
    LengthMismatch {
        left: usize,
        right: usize,
    },
    /// A local multiplicative function must start with `v0 = 1`.
    NotNormalized,
    UnknownFunction(String),
    NotPrime(u64),
    /// Schur hook leg length outside `0..k`.
    HookOutOfRange {
        r: usize,
        k: usize,
    },
    /// A Hessenberg matrix whose cells do not form an isobaric polynomial.
    NotIsobaric,
    /// Symbolic companion rows are only available from row 0 on.
    NegativeSymbolicRow(i64),
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { left, right } => write!(
                f,
                "polynomial shape mismatch: (n={}, k={}) vs (n={}, k={})",
                left.0, left.1, right.0, right.1
            ),
            Error::PartBoundMismatch { left, right } => {
                write!(f, "part bound mismatch: k={} vs k={}", left, right)
            }
            Error::SingularCore => write!(f, "singular core: t_k = 0, backward rows undefined"),
            Error::DegenerateQ { q, n } => write!(
                f,
                "degenerate q = {} for the Stirling-ratio matrix of size {}",
                q, n
            ),
            Error::LengthMismatch { left, right } => {
                write!(f, "value list length mismatch: {} vs {}", left, right)
            }
            Error::NotNormalized => write!(f, "local function must satisfy v0 = 1"),
            Error::UnknownFunction(name) => write!(f, "unknown arithmetic function `{}`", name),
            Error::NotPrime(p) => write!(f, "{} is not a prime", p),
            Error::HookOutOfRange { r, k } => {
                write!(f, "hook leg length {} out of range 0..{}", r, k)
            }
            Error::NotIsobaric => write!(f, "matrix cells do not define an isobaric polynomial"),
            Error::NegativeSymbolicRow(n) => {
                write!(
                    f,
                    "row {} requires an inverse companion matrix; use a numeric core",
                    n
                )
            }
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
