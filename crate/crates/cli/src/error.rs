use std::fmt;

use affinemod_core::Error as CoreError;
use serde::Serialize;

/// Lexical or syntax error, or a name-resolution failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Tokens that would have been accepted at this position.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Exit classes of the command-line tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitClass {
    Success,
    Parse,
    Precondition,
    ResourceCap,
    Invariant,
}

impl ExitClass {
    pub fn code(self) -> i32 {
        match self {
            ExitClass::Success => 0,
            ExitClass::Parse => 2,
            ExitClass::Precondition => 3,
            ExitClass::ResourceCap => 4,
            ExitClass::Invariant => 5,
        }
    }

    pub fn of(e: &CoreError) -> Self {
        match e {
            CoreError::BudgetExceeded { .. } => ExitClass::ResourceCap,
            CoreError::Invariant(_) => ExitClass::Invariant,
            CoreError::Parse { .. } => ExitClass::Parse,
            CoreError::RingMismatch { .. }
            | CoreError::UnknownVariable(_)
            | CoreError::SizeMismatch { .. }
            | CoreError::ZeroPolynomial(_)
            | CoreError::Precondition(_) => ExitClass::Precondition,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_class(&self) -> ExitClass {
        match self {
            CliError::Parse(_) => ExitClass::Parse,
            CliError::Io { .. } => ExitClass::Precondition,
        }
    }
}
