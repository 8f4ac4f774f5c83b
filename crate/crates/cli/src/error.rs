use crr_core::CrrError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version`; the payload is the text to print.
    #[error("{0}")]
    Info(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numeric(CrrError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("output encoding: {0}")]
    Encode(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Info(_) => 0,
            Self::Usage(_) => 2,
            Self::Numeric(_) | Self::Io(_) | Self::Encode(_) => 1,
        }
    }
}

impl From<CrrError> for CliError {
    fn from(e: CrrError) -> Self {
        match e {
            CrrError::InvalidParameter { .. }
            | CrrError::Hypothesis(_)
            | CrrError::IllConditionedFit(_)
            | CrrError::Grid(_) => Self::Usage(e.to_string()),
            _ => Self::Numeric(e),
        }
    }
}

impl From<clap::Error> for CliError {
    fn from(e: clap::Error) -> Self {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Self::Info(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::Encode(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::Encode(e.to_string())
    }
}
