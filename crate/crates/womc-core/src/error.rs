use core::fmt;

use crate::image::Scheme;

/// Failures shared by the linear-algebra kernel and the encoders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes disagree (vector length, matrix size, universe size).
    Dimension(&'static str),
    /// A parameter record or message violates its validity conditions.
    Invalid(&'static str),
    /// The constrained linear system has no solution for this right-hand side.
    NoSolution,
    /// Every candidate seed was tried and none passed the goodness test.
    NoGoodMatrix,
    /// The requested write would clear a cell that is already set.
    WriteOnceViolation,
    /// The image is at the wrong round for the requested operation.
    Round { expected: u8, found: u8 },
    /// The image belongs to a different scheme than the operation.
    Scheme { expected: Scheme, found: Scheme },
    /// The work implied by the parameters exceeds the configured budget.
    Budget { cells: u64, limit: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(what) => write!(f, "dimension mismatch: {what}"),
            Error::Invalid(what) => write!(f, "invalid parameter: {what}"),
            Error::NoSolution => write!(f, "linear system has no solution under the given constraints"),
            Error::NoGoodMatrix => write!(f, "no seed in the ensemble satisfies the goodness test"),
            Error::WriteOnceViolation => write!(f, "write would clear an already-set cell"),
            Error::Round { expected, found } => {
                write!(f, "image is at round {found}, operation requires round {expected}")
            }
            Error::Scheme { expected, found } => {
                write!(f, "image belongs to scheme {found}, operation requires {expected}")
            }
            Error::Budget { cells, limit } => {
                write!(f, "table of {cells} cells exceeds the budget of {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
