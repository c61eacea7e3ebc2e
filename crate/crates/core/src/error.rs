use thiserror::Error;

/// Errors surfaced by the simulation/measurement laboratory.
#[derive(Debug, Error)]
pub enum Error {
    #[error("config: {0}")]
    Config(String),

    #[error("config parse error: {0}")]
    ConfigParse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("particle {particle} exploded to a non-finite position at step {step}")]
    Explosion { particle: usize, step: usize },

    #[error("index out of range: {0}")]
    IndexRange(String),

    #[error("store mismatch: {0}")]
    StoreMismatch(String),

    #[error("CFL violation: {0}")]
    Cfl(String),

    #[error("PDE solver produced a negative cell ({value:.3e} at cell {cell}, step {step})")]
    NegativeDensity { value: f64, cell: usize, step: usize },

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("negative quadratic form beyond tolerance: {0:.3e}")]
    NegativeForm(f64),

    #[error("rate fit rejected: {0}")]
    Fit(String),

    #[error("decode error: {0}")]
    Decode(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
