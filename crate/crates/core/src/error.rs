//! Error type shared by all modules.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation is only defined for the oscillator ground state.
    #[error("level {level} unsupported: {reason}")]
    UnsupportedLevel { level: u32, reason: &'static str },

    /// The requested point is a removable singularity; use the documented
    /// analytic limit instead.
    #[error("singular input: {0}")]
    SingularInput(String),

    /// Inputs that make the expression itself degenerate (e.g. a zero
    /// denominator that is not a limit).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Adaptive quadrature could not reach the requested accuracy.
    #[error("quadrature error estimate {estimate:.3e} exceeds tolerance {tolerance:.3e}")]
    QuadratureAccuracy { estimate: f64, tolerance: f64 },

    /// The multi-photon pulse assumptions do not hold for this plan.
    #[error("pulse assumption violated: N x P_int = {n_p_int:.3e} >= {limit:.3e}")]
    PulseAssumption { n_p_int: f64, limit: f64 },

    /// An aggregate was requested over an empty record set.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// A configuration field failed validation.
    #[error("invalid {field}: {reason}")]
    Validation { field: &'static str, reason: String },
}
