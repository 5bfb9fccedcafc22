use thiserror::Error;

/// Reasons a kernel construction or a synthesizer can refuse its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type error: {0}")]
    Type(String),
    #[error("language error: {0}")]
    Language(String),
    #[error("theory error: {0}")]
    Theory(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("eigenvariable error: {0}")]
    Eigenvariable(String),
    #[error("class error: {0}")]
    Class(String),
    #[error("certificate error: {0}")]
    Certificate(String),
    #[error("the goal list is empty")]
    EmptyGoal,
}

impl Error {
    /// Stable, machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Type(_) => "type-error",
            Error::Language(_) => "language-error",
            Error::Theory(_) => "theory-error",
            Error::Shape(_) => "shape-error",
            Error::Eigenvariable(_) => "eigenvariable-error",
            Error::Class(_) => "class-error",
            Error::Certificate(_) => "certificate-error",
            Error::EmptyGoal => "empty-goal",
        }
    }

    /// The message without its category prefix.
    pub fn detail(&self) -> &str {
        match self {
            Error::Type(m)
            | Error::Language(m)
            | Error::Theory(m)
            | Error::Shape(m)
            | Error::Eigenvariable(m)
            | Error::Class(m)
            | Error::Certificate(m) => m,
            Error::EmptyGoal => "the goal list is empty",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
