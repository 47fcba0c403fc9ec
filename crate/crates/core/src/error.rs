use thiserror::Error;

/// Errors raised while building rules, weights or interpolants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A weight-function parameter lies outside its domain (e.g. `alpha <= -1`).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A caller-supplied argument is unusable (too few points, duplicate nodes, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested rule variant does not exist for the weight family.
    #[error("variant unsupported for family: {variant} rule requested for {family}")]
    UnsupportedVariant { family: String, variant: String },

    /// An operation was called on data that violates its precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The tridiagonal eigensolver exhausted its iteration budget.
    #[error("eigenvalue iteration failed to converge at index {index}")]
    NoConvergence { index: usize },

    /// A computed node left the support of the weight function.
    #[error("computed node {node} lies outside the support ({lower}, {upper})")]
    NodeOutOfSupport { node: f64, lower: f64, upper: f64 },
}

impl Error {
    /// True for failures of the numerical kernels, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. } | Error::NodeOutOfSupport { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
