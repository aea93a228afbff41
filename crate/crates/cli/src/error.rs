use std::fmt;
use std::path::PathBuf;

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.pos + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot parse `{input}` {source}")]
    Parse { input: String, source: ParseError },

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("malformed complex file {}: {message}", path.display())]
    ComplexFile { path: PathBuf, message: String },

    #[error("oracle disagrees with the engine: {0}")]
    OracleMismatch(String),

    #[error(transparent)]
    Core(#[from] upsilon_core::Error),
}

impl CliError {
    pub fn parse(input: &str, source: ParseError) -> Self {
        CliError::Parse { input: input.to_string(), source }
    }

    /// 1 for parse and usage errors, 2 for validation failures, 3 when an
    /// oracle guard trips.
    pub fn exit_code(&self) -> i32 {
        use upsilon_core::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::ComplexFile { .. } | CliError::OracleMismatch(_) => 2,
            CliError::Core(e) => match e {
                E::GuardExceeded { .. } => 3,
                E::ParseRational(_)
                | E::OutOfDomain(_)
                | E::Precondition(_)
                | E::NotBreakingPoint(_)
                | E::InvalidHalfPlane(_)
                | E::InvalidRegion(_)
                | E::DivisionByZero => 1,
                _ => 2,
            },
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
