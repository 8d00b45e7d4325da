use thiserror::Error;

/// Errors produced by matrix construction, decompositions and the analysis
/// pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("dimension {n} exceeds the desk-scale guard {guard}")]
    DimensionGuard { n: usize, guard: usize },

    #[error("matrix is not symmetric within tolerance (max asymmetry {asymmetry:.3e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("singular input: {0}")]
    Singular(String),

    #[error("zero denominator in rational entry")]
    ZeroDenominator,

    #[error("Lyapunov equation has a spectrum obstruction (vectorized system is singular)")]
    SpectrumObstruction,

    #[error("eigenvalue iteration did not converge after {iterations} steps; {} of {n} eigenvalues found", partial.len())]
    EigenNonConvergence {
        iterations: usize,
        n: usize,
        /// (re, im) pairs of the eigenvalues that did deflate.
        partial: Vec<(f64, f64)>,
    },

    #[error("sector angle must satisfy 0 < theta <= pi/2, got {0}")]
    InvalidSectorAngle(f64),

    #[error("damping ratio must satisfy 0 < zeta < 1, got {0}")]
    InvalidDampingRatio(f64),

    #[error("fractional order must satisfy 1 <= gamma < 2, got {0}")]
    InvalidFractionalOrder(f64),

    #[error("principal-minor enumeration too large for n = {n} (guard {guard}); raise the guard or use exact mode")]
    EnumerationTooLarge { n: usize, guard: usize },

    #[error("symbolic determinant too large for n = {n} (guard {guard})")]
    SymbolicGuard { n: usize, guard: usize },

    #[error("second additive compound undefined for n = {0} (need n >= 2)")]
    CompoundUndefined(usize),

    #[error("perturbation class mismatch: {0}")]
    ClassMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("sampling budget must be positive")]
    EmptyBudget,

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
