//! Whole-tensor transform drivers.
//!
//! Ordered transforms permute first and then sweep the butterflies; the
//! unordered ones skip the permutation, so their output (forward) or expected
//! input (backward) is in digit-reversed order. Normalization by
//! `n_1 * ... * n_d` happens only in the backward transforms, as a separate
//! final sweep.

use crate::buffer::ComplexBuffer;
use crate::butterfly::{butterfly_tensor_in_place, ButterflyVariant};
use crate::error::Result;
use crate::permutation::permute_tensor;
use crate::plan::Plan;

/// `x := DFT(x)`.
pub fn fft_forward(x: &mut ComplexBuffer, plan: &Plan) -> Result<()> {
    permute_tensor(x, plan)?;
    fft_forward_unordered(x, plan)
}

/// `x := DFT^{-1}(x)`, including the `1/(n_1 ... n_d)` scaling.
pub fn fft_backward(x: &mut ComplexBuffer, plan: &Plan) -> Result<()> {
    permute_tensor(x, plan)?;
    fft_backward_unordered(x, plan)
}

/// `x := (A_{n_d} (x) ... (x) A_{n_1}) x`: the DFT of `P x`.
pub fn fft_forward_unordered(x: &mut ComplexBuffer, plan: &Plan) -> Result<()> {
    plan.check_len(x.len())?;
    let (re, im) = x.parts_mut();
    butterfly_tensor_in_place(re, im, plan, ButterflyVariant::Forward);
    Ok(())
}

/// `x := (conj(A_{n_d}) (x) ... (x) conj(A_{n_1})) x / (n_1 ... n_d)`: the
/// inverse DFT of `P x`.
pub fn fft_backward_unordered(x: &mut ComplexBuffer, plan: &Plan) -> Result<()> {
    plan.check_len(x.len())?;
    let (re, im) = x.parts_mut();
    butterfly_tensor_in_place(re, im, plan, ButterflyVariant::Conjugate);
    normalize(x, plan);
    Ok(())
}

/// Divides by the total size. Sizes are powers of two, so the reciprocal is
/// exact and multiplying by it equals dividing.
pub(crate) fn normalize(x: &mut ComplexBuffer, plan: &Plan) {
    x.scale(1.0 / plan.len() as f64);
}
