use thiserror::Error;

/// A positioned diagnostic from the model/expression parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: error: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    /// Bad invocation: unknown names, missing declarations, invalid
    /// bounds, unreadable files.
    #[error("{0}")]
    Input(String),
    /// An identity the engine guarantees failed to verify; a bug, not a
    /// user error.
    #[error("internal identity check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into())
    }

    /// Process exit code: 2 for user errors, 3 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<jetvar_core::Error> for CliError {
    fn from(err: jetvar_core::Error) -> Self {
        match err {
            jetvar_core::Error::Internal(msg) => CliError::Internal(msg.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
