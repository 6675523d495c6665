//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration entry point was asked for more than it is willing to do.
    #[error("enumeration bound exceeded: requested {requested}, maximum {max}")]
    BoundExceeded { requested: usize, max: usize },

    /// An operation received a symbol outside the family it requires.
    #[error("symbol {symbol} does not belong to {family}")]
    NotInFamily { family: String, symbol: String },

    /// `sgn_twist` only acts on even-orthogonal symbols.
    #[error("symbol with defect {defect} is not in an even-orthogonal family")]
    NotOrthogonal { defect: i64 },

    /// `theta_bar` is only defined when the insertion size is non-negative.
    #[error("theta-bar undefined: tau = {tau} < 0")]
    UndefinedThetaBar { tau: i64 },

    /// Admissibility for symplectic/orthogonal pairs is stated for even ell only.
    #[error("admissibility for symplectic/orthogonal pairs needs even ell, got {ell}")]
    OddAdmissibilityBound { ell: usize },

    /// The two families do not form a supported dual pair.
    #[error("invalid dual pair: {0}")]
    InvalidPair(String),

    /// A family tag needs an even size (symplectic and even-orthogonal kinds).
    #[error("family {0} requires an even size")]
    OddFamilySize(String),

    /// A string could not be parsed as a family, pair, symbol or partition.
    #[error("parse error: {0}")]
    Parse(String),

    /// The degree product formula must divide exactly; a remainder means the
    /// inputs were inconsistent.
    #[error("inexact polynomial division (first bad exponent {exponent})")]
    InexactDivision { exponent: usize },

    /// An internal cross-check failed; this indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
