//! Radix-2/4/8 Cooley-Tukey FFTs on split-complex, first-index-fastest
//! tensors, and two FFT-based circular convolution pipelines:
//!
//! * [`convolve_standard`] permutes before each butterfly sweep (two
//!   digit-reversal passes per call);
//! * [`convolve_permfree`] pairs transposed forward butterflies with a filter
//!   spectrum permuted once up front ([`prepare_filter`]), and performs no
//!   permutation per call.
//!
//! ```
//! use pafft::{fft_backward, fft_forward, ComplexBuffer, Plan, Radix, TensorShape};
//!
//! let plan = Plan::new(Radix::R4, TensorShape::new(vec![16, 64])?)?;
//! let mut x = ComplexBuffer::delta(plan.len(), 0);
//! fft_forward(&mut x, &plan)?;
//! assert!(x.re().iter().all(|&v| v == 1.0));
//! fft_backward(&mut x, &plan)?;
//! assert_eq!(x.re()[0], 1.0);
//! # Ok::<(), pafft::FftError>(())
//! ```

pub mod buffer;
pub mod butterfly;
pub mod convolution;
pub mod error;
pub mod oracle;
pub mod permutation;
pub mod plan;
pub mod shape;
pub mod transform;

pub use num_complex::Complex64;

pub use buffer::{buffer_from_tensor, tensor_from_buffer, ComplexBuffer};
pub use butterfly::{
    butterfly_conjugate, butterfly_forward, butterfly_tensor, butterfly_transposed,
    ButterflyVariant, Radix8Constants, RADIX8_CONSTANTS,
};
pub use convolution::{
    convolve_permfree, convolve_standard, filter_from_impulse, hadamard_inplace, prepare_filter,
    PreparedFilter,
};
pub use error::{FftError, Result};
pub use permutation::{
    digit_reverse, permutation_passes, permute_1d, permute_tensor, reset_permutation_passes,
};
pub use plan::{Plan, PlanFingerprint, Radix, TwiddleTable};
pub use shape::TensorShape;
pub use transform::{fft_backward, fft_backward_unordered, fft_forward, fft_forward_unordered};
