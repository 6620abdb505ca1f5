//! Crate-wide error type.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when fitting, sampling, or evaluating
/// corrections.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A scale parameter (variance or mean absolute deviation) must be
    /// strictly positive.
    #[error("scale parameter must be positive, got {value}")]
    NonPositiveScale { value: f64 },

    /// An observation or parameter was NaN or infinite.
    #[error("non-finite value encountered: {context}")]
    NonFinite { context: &'static str },

    /// Too few observations for the requested operation.
    #[error("need at least {min} observations, got {got}")]
    InsufficientData { min: usize, got: usize },

    /// All observations identical; scale estimates collapse to zero.
    #[error("degenerate sample: all observations are equal")]
    DegenerateSample,

    /// The expected Hessian is singular, so tr(I J^-1) does not exist.
    #[error("singular expected Hessian: trace correction undefined")]
    SingularHessian,

    /// The finite-sample correction n*k/(n-k-2) needs n > k + 2.
    #[error("corrected penalty undefined for n = {n}, k = {k} (need n > k + 2)")]
    UndefinedCorrection { n: usize, k: usize },

    /// A closed form has a pole or is otherwise undefined at this sample size.
    #[error("value undefined at sample size n = {n} (need n >= {min})")]
    UndefinedForSampleSize { n: usize, min: usize },

    /// A count, size, or option was outside its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Resampling kept producing degenerate draws.
    #[error("gave up after {attempts} consecutive degenerate resamples")]
    ResamplingFailed { attempts: u32 },
}
