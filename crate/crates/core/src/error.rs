use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid peak set: {0}")]
    InvalidPeakSet(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Full enumeration of S_n was refused because n exceeds the configured cap.
    #[error("enumeration of S_{n} refused: n = {n} exceeds cap {cap} (raise the cap explicitly to allow long runs)")]
    CapExceeded { n: usize, cap: usize },

    #[error("finite-difference fit failed: {0}")]
    FitFailed(String),

    /// An expression of the form 2p(S;n) came out odd; this signals a bug, not bad input.
    #[error("parity violation (internal error): {0}")]
    ParityViolation(String),

    #[error("empty domain: {0}")]
    EmptyDomain(String),

    #[error("no closed form for this pattern: {0}")]
    UnsupportedPattern(String),
}

pub type Result<T> = std::result::Result<T, Error>;
