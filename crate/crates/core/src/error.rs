use thiserror::Error;

/// Which side of an identity an evaluation error came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideTag {
    Lhs,
    Rhs,
}

impl std::fmt::Display for SideTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SideTag::Lhs => f.write_str("lhs"),
            SideTag::Rhs => f.write_str("rhs"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("sampling exhausted for {id}: {attempts} rejected draws in a row")]
    Exhausted { id: String, attempts: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{side} term {term}: {source}")]
    Evaluation {
        side: SideTag,
        term: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// The innermost error, with any side/term tagging peeled off.
    pub fn root(&self) -> &Error {
        match self {
            Error::Evaluation { source, .. } => source.root(),
            other => other,
        }
    }

    /// True for failures caused by numerical non-convergence or overflow rather
    /// than by a bad argument.
    pub fn is_numerical(&self) -> bool {
        matches!(self.root(), Error::Convergence(_) | Error::Overflow(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
