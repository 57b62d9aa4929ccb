use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// The order unit is not strictly positive under functional `index` (0-based).
    #[error("functional {index} is nonpositive on the unit; the unit is not interior to the cone")]
    NonpositiveOnUnit { index: usize },

    #[error("enumeration cap exceeded: |Lambda| = {size} > cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("index set {set} is not bisaturated")]
    NotBisaturated { set: String },

    #[error("failed to generate a valid instance after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
