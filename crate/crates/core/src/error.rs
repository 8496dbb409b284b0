use thiserror::Error;

/// Errors produced while building nodal systems and interpolants.
#[derive(Debug, Error)]
pub enum Error {
    #[error("jacobi parameters out of range: alpha={alpha}, beta={beta} (both must exceed -1)")]
    InvalidParams { alpha: f64, beta: f64 },

    #[error("polynomial degree must be at least 1")]
    InvalidDegree,

    #[error("derivative order {0} unsupported (only orders 1 and 2)")]
    UnsupportedOrder(u32),

    #[error("zero-finding failed for degree {n}: {detail}")]
    RootFinding { n: usize, detail: String },

    #[error("szego transform undefined at z = 0")]
    SzegoAtOrigin,

    #[error("degenerate nodal system: nodes {i} and {j} coincide")]
    DegenerateSystem { i: usize, j: usize },

    #[error("expected {expected} node values, got {got}")]
    ValueCount { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
