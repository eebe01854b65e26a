use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature failed to converge: {context} (achieved {achieved:.3e}, requested {requested:.3e})")]
    QuadratureNonConvergence {
        context: String,
        achieved: f64,
        requested: f64,
    },

    #[error("hypergeometric series did not converge: 2F1({a}, {b}; {c}; {z}) after {terms} terms")]
    HypergeometricNonConvergence {
        a: f64,
        b: f64,
        c: f64,
        z: f64,
        terms: usize,
    },

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("parse error in {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("parameter-set invariant violated: {0}")]
    InvariantViolation(String),

    #[error("no tabulated radius for Z={0}")]
    RadiusLookup(u32),

    #[error("eigensolver failure: {0}")]
    EigenSolver(String),

    #[error("target state not found in spectrum: {0}")]
    StateNotFound(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("unsupported request: {0}")]
    Unsupported(String),
}
