use thiserror::Error;

/// Errors surfaced by graph construction, decomposition and the exact solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("chain order n must be at least 1")]
    ZeroOrder,

    #[error("unknown vertex {0} for a chain with 4n = {1} positions per side")]
    UnknownVertex(String, usize),

    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("vertex pairing does not commute with adjacency")]
    PairingMismatch,

    #[error("symmetric eigensolver failed to converge at dimension {0}")]
    EigenSolveFailed(usize),

    #[error("second-smallest Laplacian eigenvalue {0:e} is below the 1e-12 guard")]
    NearSingularSpectrum(f64),

    #[error("matrix entry does not fit in 64 bits for JSON export")]
    EntryTooLarge,

    #[error("invalid graph JSON: {0}")]
    BadGraphJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
