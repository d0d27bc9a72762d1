use thiserror::Error;

/// Errors raised by the geometry, representation and character routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("inner interval is not compactly contained in the outer interval")]
    NotCompactInclusion,

    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("parameter `{name}` = {value} is outside {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("parameter {value} hits the singularity of tan(s/2)")]
    ParameterAtSingularity { value: f64 },

    #[error("lowest weight must be positive, got {0}")]
    BadWeight(f64),

    #[error("truncation dimension {dim} is below the minimum {min}")]
    TooSmall { dim: usize, min: usize },

    #[error("regularized inverse of H failed: {0}")]
    SingularH(String),

    #[error("character diverges or overflows at s = {s}")]
    DivergentSpectrum { s: f64 },

    #[error("fit needs at least {needed} grid points in (0, 1), got {got}")]
    InsufficientGrid { needed: usize, got: usize },

    #[error("dimension must be at least 1, got {0}")]
    BadDimension(u32),

    #[error("even spatial dimension d = {0} is not supported")]
    EvenDimensionUnsupported(u32),

    #[error("radius must exceed 1, got {0}")]
    RadiusNotGreaterThanOne(f64),

    #[error("interval {0} is unbounded in the real-line picture")]
    UnboundedInterval(String),

    #[error("integer overflow computing {0}")]
    Overflow(String),

    #[error("series for {0} did not converge")]
    NoConvergence(String),

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}
