//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("cannot embed order {from} into order {to}")]
    OrderMismatch { from: u32, to: u32 },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("substitution needs {0}")]
    Substitution(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inexact division: {0}")]
    Inexact(String),
    #[error("not stabilized: {0}")]
    Unstable(String),
    #[error("consistency check failed: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
