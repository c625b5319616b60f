use thiserror::Error;

/// Errors surfaced by the simulation and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter or derived configuration is unusable.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two spectral amplitudes live on different frequency grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// Time tags must be sorted by timestamp before correlation.
    #[error("time-tag stream is not sorted at record {index}")]
    UnsortedStream { index: usize },

    /// A time-tag or histogram file could not be decoded.
    #[error("format error at byte {offset}: {message}")]
    Format { offset: u64, message: String },

    /// A least-squares fit failed to converge; the message carries diagnostics.
    #[error("fit did not converge: {0}")]
    NonConvergence(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
