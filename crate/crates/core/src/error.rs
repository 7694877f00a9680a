use thiserror::Error;

/// Failures raised by the polynomial, dual-space and detection routines.
///
/// Variants fall into two families: misuse of the API (bad dimensions,
/// malformed input) and mathematical failures (rank ambiguity,
/// non-stabilization, exhausted retries). [`Error::is_mathematical`]
/// separates them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no initial term")]
    ZeroPolynomial,

    #[error("an ideal needs at least one generator")]
    EmptyIdeal,

    #[error("generator {index} is the zero polynomial")]
    ZeroGenerator { index: usize },

    #[error("generator {index} does not vanish at the point (constant term of magnitude {magnitude:e})")]
    PointNotOnVariety { index: usize, magnitude: f64 },

    #[error("the linear change of coordinates is singular")]
    SingularChange,

    #[error("numerical rank is ambiguous: singular value {value:e} is within a decade below the threshold {threshold:e}")]
    RankAmbiguity { value: f64, threshold: f64 },

    #[error("basis is not reduced: initial terms are not pairwise distinct")]
    UnreducedBasis,

    #[error("incompatible dual spaces: {0}")]
    IncompatibleSpaces(String),

    #[error("dual space did not stabilize by degree {max_degree}")]
    NotStabilized { max_degree: usize },

    #[error("eliminating dual space is incomplete (cap {cap} reached); the ideal is not in regular position")]
    IncompleteEliminatingDual { cap: usize },

    #[error("not in regular position relative to the first variable: {0}")]
    NotRegularPosition(String),

    #[error("Hilbert function did not stabilize by degree {k_cap}: {values:?}")]
    HilbertNotStable { k_cap: usize, values: Vec<usize> },

    #[error("containment violated: a functional lies outside the target span (relative residual {residual:e})")]
    ContainmentViolation { residual: f64 },

    #[error("generator {index} is not homogeneous")]
    NonHomogeneous { index: usize },

    #[error("the ideal is not locally a curve at the origin: {0}")]
    NotACurve(String),

    #[error("no regular position found after {attempts} random changes of coordinates (seeds {seeds:?})")]
    RetryExhausted { attempts: usize, seeds: Vec<u64> },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// `true` for failures of the mathematics (rank decisions, stabilization,
    /// regular position) as opposed to malformed input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::RankAmbiguity { .. }
                | Error::NotStabilized { .. }
                | Error::IncompleteEliminatingDual { .. }
                | Error::NotRegularPosition(_)
                | Error::HilbertNotStable { .. }
                | Error::ContainmentViolation { .. }
                | Error::NotACurve(_)
                | Error::RetryExhausted { .. }
                | Error::SingularChange
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
