use thiserror::Error;

/// Violations of exact-domain preconditions (dimensions, indices, homogeneity).
#[derive(Debug, Clone, Error, PartialEq)]
pub enum DomainError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dilation parameter must be positive")]
    NonPositiveDilation,
    #[error("dilation sign must be +1 or -1, got {0}")]
    InvalidSign(i8),
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operation undefined for the zero element")]
    ZeroElement,
    #[error("operator is not homogeneous")]
    NotHomogeneous,
    #[error("operation requires n = 1, got n = {n}")]
    RankOneOnly { n: usize },
    #[error("representation parameter lambda must be nonzero")]
    ZeroLambda,
    #[error("truncation size must be >= 1")]
    InvalidTruncation,
    #[error("oscillator frequency must be positive, got {omega}")]
    InvalidFrequency { omega: f64 },
    #[error("power must be >= 1")]
    InvalidPower,
}

/// Failures in the floating-point layers (grids, quadrature, linear algebra).
#[derive(Debug, Clone, Error)]
pub enum NumericError {
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),
    #[error("grid is not symmetric under inversion")]
    AsymmetricGrid,
    #[error("samples contain non-finite values")]
    NonFiniteSamples,
    #[error("functions live on different grids")]
    MismatchedGrids,
    #[error("samples carry no analytic tag and no finite-difference order was declared")]
    InsufficientSmoothness,
    #[error("truncated operator is numerically singular (condition estimate {cond:.3e})")]
    SingularOperator { cond: f64 },
    #[error("truncation remainder bound {bound:.3e} exceeds tolerance {tol:.3e}")]
    TruncationRemainder { bound: f64, tol: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("quadrature failed to converge: {0}")]
    QuadratureDiverged(String),
    #[error("dense eigenvalue computation failed to converge")]
    EigenFailed,
    #[error("solver precondition failed: solvability verdict is {verdict}")]
    HypothesisNotSatisfied { verdict: String },
    #[error(transparent)]
    Domain(#[from] DomainError),
}
