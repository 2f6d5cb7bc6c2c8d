use std::fmt;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invalid(String),
    Io(String),
    Guarantee(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::Guarantee(_) => 3,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o: {m}"),
            CliError::Guarantee(m) => write!(f, "{m}"),
        }
    }
}

impl From<belldist::Error> for CliError {
    fn from(e: belldist::Error) -> Self {
        match e {
            belldist::Error::ReductionGuarantee { .. } => CliError::Guarantee(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}
