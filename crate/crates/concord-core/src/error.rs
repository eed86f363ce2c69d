//! Error type shared by all modules.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InvalidInput` covers violated preconditions on user-supplied data
/// (malformed matrices, out-of-range parameters); `Inapplicable` means the
/// input was well-formed but the requested computation does not apply to it
/// (for example a Moebius-band obstruction on a knot with non-cyclic double
/// branched cover homology); `Internal` marks conditions that indicate a bug
/// in the library itself and should never be reachable from valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inapplicable: {0}")]
    Inapplicable(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn inapplicable(msg: impl Into<String>) -> Self {
        Error::Inapplicable(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
