use thiserror::Error;

/// Errors raised by plan construction, layout conversion and the kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FftError {
    #[error("shape has no dimensions")]
    EmptyShape,
    #[error("dimension {dim} has zero extent")]
    ZeroExtent { dim: usize },
    #[error("dimension {dim} has size {size}, which is not a positive power of the radix")]
    NotAPowerOfRadix { dim: usize, size: usize },
    #[error("radix {0} is not supported (expected 2, 4 or 8)")]
    UnsupportedRadix(usize),
    #[error("expected {expected} elements, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("buffer of length {actual} does not match plan of size {expected}")]
    ShapeMismatch { expected: usize, actual: usize },
    #[error("dimension index {dim} out of range for a {ndim}-dimensional plan")]
    DimensionOutOfRange { dim: usize, ndim: usize },
    #[error("index {index} out of range for {digits} base-{radix} digits")]
    IndexOutOfRange {
        index: usize,
        radix: usize,
        digits: u32,
    },
    #[error("prepared filter was built for {filter}, but plan is {plan}")]
    FilterPlanMismatch { filter: String, plan: String },
}

pub type Result<T, E = FftError> = std::result::Result<T, E>;
