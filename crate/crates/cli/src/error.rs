use std::fmt;

/// Command failure, carrying the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// exit 1
    Verification(String),
    /// exit 2
    Invalid(String),
    /// exit 3
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Verification(_) => 1,
            Self::Invalid(_) => 2,
            Self::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Verification(m) => write!(f, "verification failed: {m}"),
            Self::Invalid(m) => write!(f, "invalid input: {m}"),
            Self::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<harmonic_casimir::Error> for CliError {
    fn from(e: harmonic_casimir::Error) -> Self {
        use harmonic_casimir::Error as E;
        match e {
            E::InvalidInput(m) => Self::Invalid(m),
            other @ (E::Instability(_) | E::Divergent { .. } | E::NumericalFailure { .. }) => {
                Self::Numerical(other.to_string())
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Invalid(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::Invalid(format!("csv error: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::Invalid(format!("json error: {e}"))
    }
}
