use thiserror::Error;

/// Errors raised by the algebraic layers of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid order {0}: must be at least 2")]
    InvalidOrder(usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not invertible (zero divisor)")]
    NotInvertible,

    #[error("coordinate is not admissible: its delta is not invertible")]
    NonInvertibleCoordinate,

    #[error("degree {degree} out of range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },

    #[error("expected an element of degree zero")]
    NotDegreeZero,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
