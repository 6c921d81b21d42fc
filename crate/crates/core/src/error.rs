use thiserror::Error;

use crate::closed_form::DivisionSite;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A subscript (or a value derived from subscripts, such as `2mn + m`)
    /// left the supported index range.
    #[error("index overflow: {0} exceeds the supported magnitude 2^62")]
    IndexOverflow(String),

    /// Arguments are well-formed but outside the domain of the formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed request: wrong arity, empty range, unknown name.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A division that must be exact left a remainder. Never expected; it
    /// indicates a bug in sign or parity handling.
    #[error("inexact division at {site}: {dividend} = q * {divisor} + {remainder}")]
    InexactDivision {
        site: DivisionSite,
        dividend: String,
        divisor: String,
        remainder: String,
    },

    /// Two routes to the same quantity disagreed.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for the internal-consistency class (as opposed to bad input).
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InexactDivision { .. } | Error::Inconsistent(_))
    }
}
