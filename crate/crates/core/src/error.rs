use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// `CapExceeded` is deliberately separate from the validation variants: it
/// signals that an exhaustive computation was refused because its search
/// space is over the configured budget, so callers can fall back to a
/// reduced mode (or exit with a distinct status) instead of treating it as
/// bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("duplicate edge: {0}")]
    DuplicateEdge(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} needs {required} items which exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        required: String,
        cap: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
