use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the model layers. Parse errors of input documents live in
/// [`crate::scenario::ScenarioError`].
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{name} = {value} rad is outside the covered range [{min}, {max}]")]
    AngleOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error(
        "resolution too coarse: element size {element_size} m must be smaller than {dimension} m"
    )]
    ResolutionTooCoarse { element_size: f64, dimension: f64 },

    #[error("{operation} requires a {expected} anchor")]
    ModeMismatch {
        operation: &'static str,
        expected: &'static str,
    },

    #[error("media profile '{0}' is uncalibrated (zeta unset)")]
    Uncalibrated(String),

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }
}
