use thiserror::Error;

/// Crate-wide error type.
///
/// Construction-time validation failures and numeric breakdowns share one
/// enum so the CLI can map any of them onto a stable machine-readable code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("adjacency matrix is not square: {rows} rows, offending row has {cols} entries")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("adjacency diagonal must be zero, entry ({index},{index}) is {value}")]
    NonzeroDiagonal { index: usize, value: f64 },
    #[error("adjacency weight at ({row},{col}) must be finite and nonnegative, got {value}")]
    NegativeWeight { row: usize, col: usize, value: f64 },
    #[error("stubbornness[{index}] must be finite and strictly positive, got {value}")]
    NonpositiveStubbornness { index: usize, value: f64 },
    #[error("graph is disconnected: node {node} is unreachable")]
    DisconnectedGraph { node: usize },
    #[error("{what}: expected length {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("pressure must be strictly positive and finite, got {rho}")]
    NonpositiveRho { rho: f64 },
    #[error("non-finite input in {what}")]
    NonfiniteInput { what: &'static str },
    #[error("linear solve broke down: zero pivot at column {index}")]
    SingularSystem { index: usize },
    #[error("pressure schedule overflow at step {step}: rho = {rho} exceeds cap {cap}")]
    ScheduleOverflow { step: u64, rho: f64, cap: f64 },
    #[error("contraction factor at step {step} lies outside [0, 1]: {alpha}")]
    AlphaOutOfRange { step: u64, alpha: f64 },
    #[error("q must lie in [0, 1), got {q}")]
    QOutOfRange { q: f64 },
    #[error("operator-norm power iteration did not converge within {iterations} iterations")]
    NormIterationDiverged { iterations: usize },
    #[error("state coincides with the fixed point; contraction ratio is undefined")]
    AtFixedPoint,
    #[error("invalid parameter: {what}")]
    InvalidParameter { what: &'static str },
}

impl Error {
    /// Stable machine-readable code used on the CLI diagnostic stream.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonSquareMatrix { .. } => "NonSquareMatrix",
            Error::NonzeroDiagonal { .. } => "NonzeroDiagonal",
            Error::NegativeWeight { .. } => "NegativeWeight",
            Error::NonpositiveStubbornness { .. } => "NonpositiveStubbornness",
            Error::DisconnectedGraph { .. } => "DisconnectedGraph",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NonpositiveRho { .. } => "NonpositiveRho",
            Error::NonfiniteInput { .. } => "NonfiniteInput",
            Error::SingularSystem { .. } => "SingularSystem",
            Error::ScheduleOverflow { .. } => "ScheduleOverflow",
            Error::AlphaOutOfRange { .. } => "AlphaOutOfRange",
            Error::QOutOfRange { .. } => "QOutOfRange",
            Error::NormIterationDiverged { .. } => "NormIterationDiverged",
            Error::AtFixedPoint => "AtFixedPoint",
            Error::InvalidParameter { .. } => "InvalidParameter",
        }
    }
}
