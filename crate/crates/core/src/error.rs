use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring {name}: {reason}")]
    InvalidRing { name: String, reason: String },

    #[error("zero ring rejected: {0}")]
    ZeroRing(String),

    #[error("{what} has size {size}, above the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("not a subring: {0}")]
    NotASubring(String),

    #[error("not a ring homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid partial order: {0}")]
    InvalidOrder(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("claim {claim} does not accept a {kind} instance")]
    SignatureMismatch { claim: String, kind: &'static str },

    #[error("refutation of {claim} did not survive independent re-check: {detail}")]
    WitnessRejected { claim: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn cap_check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
