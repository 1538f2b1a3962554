use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precondition on an input parameter failed.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A structural contract between inputs was violated (shape mismatch,
    /// asymmetric input, grid/path mismatch).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A bidiagonal matrix had a zero pivot on its diagonal.
    #[error("singular matrix: zero diagonal entry at index {index}")]
    Singular { index: usize },

    /// The soft-edge length scale is undefined for these parameters.
    #[error("degenerate soft-edge scaling: denominator {denominator:e} vanishes")]
    DegenerateScaling { denominator: f64 },

    /// A discretized operator produced an unusable spectrum.
    #[error("degenerate discretization: {0}")]
    DegenerateDiscretization(String),

    /// Empirical statistics were requested on an empty sample.
    #[error("empty sample")]
    EmptySample,
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// True for errors caused by bad user input rather than numerical breakdown.
    pub fn is_parameter_error(&self) -> bool {
        matches!(
            self,
            Error::Parameter(_) | Error::Contract(_) | Error::EmptySample
        )
    }
}
