use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid type {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: String,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("cross-check mismatch: {0}")]
    CrossCheck(String),
    #[error("model error: {0}")]
    Model(String),
}

impl Error {
    /// True for mathematical disagreements between independent routes.
    pub fn is_cross_check(&self) -> bool {
        matches!(self, Error::CrossCheck(_) | Error::Model(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
