use std::fmt;

use thiserror::Error;

/// Outcomes of the change-of-ordering routines that are verdicts on the
/// input rather than failures of the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diagnostic {
    /// The eliminant does not vanish on the ideal: the random projection
    /// only recovered a proper factor.
    BadVector,
    /// Some `x_k - h_k(x_n)` is not in the ideal.
    NotInShapePosition,
    /// Plain sparse FGLM cannot tell the two apart.
    NotInShapePositionOrBadVector,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Diagnostic::BadVector => "Bad vector",
            Diagnostic::NotInShapePosition => "Not in shape position",
            Diagnostic::NotInShapePositionOrBadVector => "Not in shape position or bad vector",
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("singular Hankel system: sequence order below {0}")]
    SingularHankel(usize),
    #[error("colon ideal does not look zero-dimensional (gave up after {0} monomials)")]
    NotZeroDimensional(usize),
    #[error("{0}")]
    Diagnostic(Diagnostic),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
