//! Stage-sweep butterfly kernels `x := A x`, `x := conj(A) x` and `x := A^T x`
//! for radices 2, 4 and 8, where `A_{r,n} = B_{r,t,n} ... B_{r,1,n}`.
//!
//! Forward and conjugate sweeps run the stages in ascending order
//! (`k = r, r^2, ..., n`); the transposed sweep runs them descending. Within
//! a stage, blocks are the outer loop and the in-block index `j` the inner
//! one. The stage twiddle `omega_k^m` is read from the dimension's master
//! table at index `m * n / k`.

mod radix2;
mod radix4;
mod radix8;

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::buffer::ComplexBuffer;
use crate::error::{FftError, Result};
use crate::plan::{Plan, Radix, TwiddleTable};

/// Which of the three stage operators a sweep applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ButterflyVariant {
    /// `A_{r,n}`
    Forward,
    /// `conj(A_{r,n})`, without any `1/n` scaling.
    Conjugate,
    /// `A_{r,n}^T`
    Transposed,
}

/// The two non-trivial eighth roots used by the radix-8 kernels:
/// `a = (1 - i)/sqrt(2) = omega_8` and `b = -(1 + i)/sqrt(2) = omega_8^3 = -i a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Radix8Constants {
    pub a: Complex64,
    pub b: Complex64,
}

pub const RADIX8_CONSTANTS: Radix8Constants = Radix8Constants {
    a: Complex64::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
    b: Complex64::new(-FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
};

/// `x := A_{r,n} x` on one fiber of dimension `dim`.
pub fn butterfly_forward(x: &mut ComplexBuffer, plan: &Plan, dim: usize) -> Result<()> {
    butterfly_1d(x, plan, dim, ButterflyVariant::Forward)
}

/// `x := conj(A_{r,n}) x` on one fiber of dimension `dim`.
pub fn butterfly_conjugate(x: &mut ComplexBuffer, plan: &Plan, dim: usize) -> Result<()> {
    butterfly_1d(x, plan, dim, ButterflyVariant::Conjugate)
}

/// `x := A_{r,n}^T x` on one fiber of dimension `dim`.
pub fn butterfly_transposed(x: &mut ComplexBuffer, plan: &Plan, dim: usize) -> Result<()> {
    butterfly_1d(x, plan, dim, ButterflyVariant::Transposed)
}

fn butterfly_1d(
    x: &mut ComplexBuffer,
    plan: &Plan,
    dim: usize,
    variant: ButterflyVariant,
) -> Result<()> {
    plan.check_dim(dim)?;
    let n = plan.dims()[dim];
    if x.len() != n {
        return Err(FftError::ShapeMismatch {
            expected: n,
            actual: x.len(),
        });
    }
    let (re, im) = x.parts_mut();
    apply_line(plan.radix(), variant, re, im, plan.twiddles(dim));
    Ok(())
}

/// Applies the 1D variant along every mode-q fiber, q = 1..d, i.e.
/// `(K_{n_d} (x) ... (x) K_{n_1}) vec(X)`.
///
/// Mode-1 fibers are contiguous and processed in place. Fibers of higher
/// modes are gathered into one scratch line of length `max(n_q)`, transformed
/// and scattered back.
pub fn butterfly_tensor(
    x: &mut ComplexBuffer,
    plan: &Plan,
    variant: ButterflyVariant,
) -> Result<()> {
    plan.check_len(x.len())?;
    let (re, im) = x.parts_mut();
    butterfly_tensor_in_place(re, im, plan, variant);
    Ok(())
}

pub(crate) fn butterfly_tensor_in_place(
    re: &mut [f64],
    im: &mut [f64],
    plan: &Plan,
    variant: ButterflyVariant,
) {
    let radix = plan.radix();
    let dims = plan.dims();

    let n1 = dims[0];
    let tw = plan.twiddles(0);
    for (fre, fim) in re.chunks_exact_mut(n1).zip(im.chunks_exact_mut(n1)) {
        apply_line(radix, variant, fre, fim, tw);
    }
    if dims.len() == 1 {
        return;
    }

    let longest = dims.iter().copied().max().unwrap_or(0);
    let mut line_re = vec![0.0; longest];
    let mut line_im = vec![0.0; longest];
    for (q, &n) in dims.iter().enumerate().skip(1) {
        let stride = plan.shape().stride(q);
        let span = n * stride;
        let tw = plan.twiddles(q);
        let (lre, lim) = (&mut line_re[..n], &mut line_im[..n]);
        for outer in (0..re.len()).step_by(span) {
            for base in outer..outer + stride {
                for (i, (r, m)) in lre.iter_mut().zip(lim.iter_mut()).enumerate() {
                    *r = re[base + i * stride];
                    *m = im[base + i * stride];
                }
                apply_line(radix, variant, lre, lim, tw);
                for (i, (r, m)) in lre.iter().zip(lim.iter()).enumerate() {
                    re[base + i * stride] = *r;
                    im[base + i * stride] = *m;
                }
            }
        }
    }
}

fn apply_line(
    radix: Radix,
    variant: ButterflyVariant,
    re: &mut [f64],
    im: &mut [f64],
    tw: &TwiddleTable,
) {
    debug_assert_eq!(re.len(), tw.len());
    match (radix, variant) {
        (Radix::R2, ButterflyVariant::Forward) => radix2::forward::<false>(re, im, tw),
        (Radix::R2, ButterflyVariant::Conjugate) => radix2::forward::<true>(re, im, tw),
        (Radix::R2, ButterflyVariant::Transposed) => radix2::transposed(re, im, tw),
        (Radix::R4, ButterflyVariant::Forward) => radix4::forward::<false>(re, im, tw),
        (Radix::R4, ButterflyVariant::Conjugate) => radix4::forward::<true>(re, im, tw),
        (Radix::R4, ButterflyVariant::Transposed) => radix4::transposed(re, im, tw),
        (Radix::R8, ButterflyVariant::Forward) => radix8::forward::<false>(re, im, tw),
        (Radix::R8, ButterflyVariant::Conjugate) => radix8::forward::<true>(re, im, tw),
        (Radix::R8, ButterflyVariant::Transposed) => radix8::transposed(re, im, tw),
    }
}

#[inline(always)]
fn load(re: &[f64], im: &[f64], i: usize) -> Complex64 {
    Complex64::new(re[i], im[i])
}

#[inline(always)]
fn store(re: &mut [f64], im: &mut [f64], i: usize, z: Complex64) {
    re[i] = z.re;
    im[i] = z.im;
}

/// `omega_k^m` read at table index `idx = m * n / k`, conjugated when `CONJ`.
#[inline(always)]
fn twiddle<const CONJ: bool>(tw: &TwiddleTable, idx: usize) -> Complex64 {
    let w = tw.get(idx);
    if CONJ {
        w.conj()
    } else {
        w
    }
}

/// `-i z` for the forward kernels, `+i z` for the conjugate ones.
#[inline(always)]
fn rotate<const CONJ: bool>(z: Complex64) -> Complex64 {
    if CONJ {
        Complex64::new(-z.im, z.re)
    } else {
        Complex64::new(z.im, -z.re)
    }
}
