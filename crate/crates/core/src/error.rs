use thiserror::Error;

/// Failures of constructions and conversions.
///
/// Law violations found by a validator are not errors: validators return a
/// [`ValidationReport`](crate::ValidationReport). An `Error` means the input
/// could not be processed at all, or a construction was asked to run on an
/// input that does not satisfy its precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Source/target frames of spans or cells do not line up.
    #[error("frame mismatch: {0}")]
    Frame(String),
    /// A pasting or morphism expression is not well typed.
    #[error("ill-typed expression: {0}")]
    IllTyped(String),
    /// Tables are non-total, reference unknown elements, or contain duplicates.
    #[error("malformed structure: {0}")]
    Malformed(String),
    /// A construction received data that violates the laws it requires.
    #[error("invalid input ({subject}): {detail}")]
    Invalid { subject: String, detail: String },
    /// The data does not have the shape a translation needs (e.g. not an `F*` span).
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A structure file could not be parsed.
    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },
    /// An enumeration would exceed the configured bounds.
    #[error("bounds exceeded: {0}")]
    Bounds(String),
    /// A conversion between two file kinds is not defined.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(subject: impl Into<String>, report: &crate::ValidationReport) -> Self {
        Error::Invalid {
            subject: subject.into(),
            detail: report.summary(),
        }
    }
}
