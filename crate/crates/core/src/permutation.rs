//! Digit-reversal permutations.
//!
//! `P_{r,n}` reorders element `j` to the position whose base-`r` digit string
//! is the reverse of `j`'s. It is symmetric and its own inverse, so every
//! routine here works in place by swapping `x[j]` with `x[rev[j]]` once per
//! pair.
//!
//! Each call to [`permute_1d`] or [`permute_tensor`] bumps a thread-local pass
//! counter, read with [`permutation_passes`]. Benchmarks and tests use it to
//! check how many permutation sweeps a pipeline performs.

use std::cell::Cell;

use crate::buffer::ComplexBuffer;
use crate::error::{FftError, Result};
use crate::plan::Plan;

thread_local! {
    static PASSES: Cell<u64> = const { Cell::new(0) };
}

/// Number of permutation passes executed on the current thread.
pub fn permutation_passes() -> u64 {
    PASSES.with(Cell::get)
}

/// Resets the current thread's pass counter to zero.
pub fn reset_permutation_passes() {
    PASSES.with(|c| c.set(0));
}

fn record_pass() {
    PASSES.with(|c| c.set(c.get() + 1));
}

/// Reverses the `digits` base-`radix` digits of `j`.
///
/// `digit_reverse(6, 2, 3) == 3` (`110` becomes `011`).
pub fn digit_reverse(mut j: usize, radix: usize, digits: u32) -> Result<usize> {
    let out_of_range = || FftError::IndexOutOfRange {
        index: j,
        radix,
        digits,
    };
    let bound = radix.checked_pow(digits).ok_or_else(out_of_range)?;
    if radix < 2 || j >= bound {
        return Err(out_of_range());
    }
    let mut rev = 0;
    for _ in 0..digits {
        rev = rev * radix + j % radix;
        j /= radix;
    }
    Ok(rev)
}

/// `x := P_{r,n} x` for the dimension `dim` of `plan`, where `x` holds a
/// single fiber of length `n_dim`.
pub fn permute_1d(x: &mut ComplexBuffer, plan: &Plan, dim: usize) -> Result<()> {
    plan.check_dim(dim)?;
    let n = plan.dims()[dim];
    if x.len() != n {
        return Err(FftError::ShapeMismatch {
            expected: n,
            actual: x.len(),
        });
    }
    record_pass();
    if plan.depths()[dim] > 1 {
        let (re, im) = x.parts_mut();
        swap_reversed(re, im, plan.rev_map(dim));
    }
    Ok(())
}

/// `vec(X) := (P_{r,n_d} (x) ... (x) P_{r,n_1}) vec(X)`: every coordinate of
/// the multi-index is digit-reversed independently.
///
/// Runs as one sweep over linear offsets. The reversed offset of each mode-1
/// fiber is kept incrementally with a mixed-radix counter over the outer modes.
pub fn permute_tensor(x: &mut ComplexBuffer, plan: &Plan) -> Result<()> {
    plan.check_len(x.len())?;
    record_pass();
    let (re, im) = x.parts_mut();
    permute_in_place(re, im, plan);
    Ok(())
}

pub(crate) fn permute_in_place(re: &mut [f64], im: &mut [f64], plan: &Plan) {
    let dims = plan.dims();
    let depths = plan.depths();
    if depths.iter().all(|&t| t == 1) {
        return;
    }
    if dims.len() == 1 {
        swap_reversed(re, im, plan.rev_map(0));
        return;
    }

    let n1 = dims[0];
    let rev1 = plan.rev_map(0);
    let strides: Vec<usize> = (0..dims.len()).map(|q| plan.shape().stride(q)).collect();
    let fibers = re.len() / n1;

    // Counter over modes 2..d and the matching reversed base offset.
    let mut counter = vec![0usize; dims.len()];
    let mut rev_base = 0usize;
    for fiber in 0..fibers {
        let base = fiber * n1;
        for (i, &ri) in rev1.iter().enumerate() {
            let off = base + i;
            let roff = rev_base + ri;
            if off < roff {
                re.swap(off, roff);
                im.swap(off, roff);
            }
        }
        for q in 1..dims.len() {
            let rev_q = plan.rev_map(q);
            rev_base -= rev_q[counter[q]] * strides[q];
            counter[q] += 1;
            if counter[q] < dims[q] {
                rev_base += rev_q[counter[q]] * strides[q];
                break;
            }
            counter[q] = 0;
        }
    }
}

fn swap_reversed(re: &mut [f64], im: &mut [f64], rev: &[usize]) {
    for (j, &rj) in rev.iter().enumerate() {
        if j < rj {
            re.swap(j, rj);
            im.swap(j, rj);
        }
    }
}
