//! Circular convolution `x -> DFT^{-1}(g o DFT(x))` for a filter spectrum `g`.
//!
//! [`convolve_standard`] runs the textbook pipeline with two permutation
//! passes per call. [`convolve_permfree`] uses
//! `conj(A) (g_hat o (A^T x)) / n` where `g_hat = P g` is computed once by
//! [`prepare_filter`], so the online phase performs no permutation at all.

use crate::buffer::ComplexBuffer;
use crate::butterfly::{butterfly_tensor_in_place, ButterflyVariant};
use crate::error::{FftError, Result};
use crate::permutation::permute_tensor;
use crate::plan::{Plan, PlanFingerprint};
use crate::transform::{fft_forward, normalize};

/// Filter spectrum stored in digit-reversed order, bound to the plan that
/// produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct PreparedFilter {
    ghat: ComplexBuffer,
    fingerprint: PlanFingerprint,
}

impl PreparedFilter {
    /// The permuted spectrum `g_hat = (P_{n_d} (x) ... (x) P_{n_1}) vec(G)`.
    pub fn spectrum(&self) -> &ComplexBuffer {
        &self.ghat
    }

    pub fn fingerprint(&self) -> &PlanFingerprint {
        &self.fingerprint
    }

    pub fn into_spectrum(self) -> ComplexBuffer {
        self.ghat
    }
}

/// Offline phase: permutes a copy of the spectrum `g` (natural order).
pub fn prepare_filter(g: &ComplexBuffer, plan: &Plan) -> Result<PreparedFilter> {
    let mut ghat = g.clone();
    permute_tensor(&mut ghat, plan)?;
    Ok(PreparedFilter {
        ghat,
        fingerprint: plan.fingerprint(),
    })
}

/// Spectrum `g = DFT(h)` of an impulse response `h`.
pub fn filter_from_impulse(h: &ComplexBuffer, plan: &Plan) -> Result<ComplexBuffer> {
    let mut g = h.clone();
    fft_forward(&mut g, plan)?;
    Ok(g)
}

/// `x := x o y`, element-wise complex product.
pub fn hadamard_inplace(x: &mut ComplexBuffer, y: &ComplexBuffer) -> Result<()> {
    if x.len() != y.len() {
        return Err(FftError::LengthMismatch {
            expected: x.len(),
            actual: y.len(),
        });
    }
    let (xr, xi) = x.parts_mut();
    for (((a, b), &c), &d) in xr.iter_mut().zip(xi.iter_mut()).zip(y.re()).zip(y.im()) {
        let re = *a * c - *b * d;
        let im = *a * d + *b * c;
        *a = re;
        *b = im;
    }
    Ok(())
}

/// Standard pipeline: `P`, `A`, `o g`, `P`, `conj(A)`, `/ n`.
pub fn convolve_standard(x: &mut ComplexBuffer, g: &ComplexBuffer, plan: &Plan) -> Result<()> {
    plan.check_len(x.len())?;
    plan.check_len(g.len())?;
    permute_tensor(x, plan)?;
    {
        let (re, im) = x.parts_mut();
        butterfly_tensor_in_place(re, im, plan, ButterflyVariant::Forward);
    }
    hadamard_inplace(x, g)?;
    permute_tensor(x, plan)?;
    {
        let (re, im) = x.parts_mut();
        butterfly_tensor_in_place(re, im, plan, ButterflyVariant::Conjugate);
    }
    normalize(x, plan);
    Ok(())
}

/// Permutation-free online phase: `A^T`, `o g_hat`, `conj(A)`, `/ n`.
pub fn convolve_permfree(
    x: &mut ComplexBuffer,
    filter: &PreparedFilter,
    plan: &Plan,
) -> Result<()> {
    plan.check_len(x.len())?;
    let fingerprint = plan.fingerprint();
    if filter.fingerprint != fingerprint {
        return Err(FftError::FilterPlanMismatch {
            filter: filter.fingerprint.to_string(),
            plan: fingerprint.to_string(),
        });
    }
    {
        let (re, im) = x.parts_mut();
        butterfly_tensor_in_place(re, im, plan, ButterflyVariant::Transposed);
    }
    hadamard_inplace(x, &filter.ghat)?;
    {
        let (re, im) = x.parts_mut();
        butterfly_tensor_in_place(re, im, plan, ButterflyVariant::Conjugate);
    }
    // TODO: fold 1/n into g_hat at preparation time to drop this sweep; the
    // diagonal scaling commutes with conj(A).
    normalize(x, plan);
    Ok(())
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::oracle::{naive_circular_convolution, tolerance};
    use crate::permutation::{permutation_passes, reset_permutation_passes};
    use crate::plan::Radix;
    use crate::shape::TensorShape;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn plan(r: Radix, dims: &[usize]) -> Plan {
        Plan::new(r, TensorShape::new(dims.to_vec()).unwrap()).unwrap()
    }

    fn wavy(n: usize, a: f64, b: f64) -> ComplexBuffer {
        (0..n)
            .map(|k| c((k as f64 * a).sin(), (k as f64 * b).cos()))
            .collect()
    }

    #[test]
    fn prepare_filter_examples() {
        let p = plan(Radix::R2, &[4]);
        let ones = ComplexBuffer::filled(4, c(1.0, 0.0));
        assert_eq!(prepare_filter(&ones, &p).unwrap().spectrum(), &ones);

        let g = ComplexBuffer::from_real(vec![0.0, 1.0, 2.0, 3.0]);
        let f = prepare_filter(&g, &p).unwrap();
        assert_eq!(f.spectrum().re(), &[0.0, 2.0, 1.0, 3.0]);
        assert_eq!(f.fingerprint(), &p.fingerprint());

        let p2 = plan(Radix::R2, &[2]);
        let g = ComplexBuffer::from_real(vec![5.0, -1.0]);
        assert_eq!(prepare_filter(&g, &p2).unwrap().spectrum(), &g);
    }

    #[test]
    fn prepared_spectrum_unpermutes_exactly() {
        let p = plan(Radix::R4, &[16, 64]);
        let g = wavy(p.len(), 0.3, 0.7);
        let mut back = prepare_filter(&g, &p).unwrap().into_spectrum();
        permute_tensor(&mut back, &p).unwrap();
        assert!(back.bitwise_eq(&g));
    }

    #[test]
    fn impulse_spectra() {
        let p = plan(Radix::R2, &[4]);
        let g = filter_from_impulse(&ComplexBuffer::delta(4, 0), &p).unwrap();
        assert_eq!(g, ComplexBuffer::filled(4, c(1.0, 0.0)));

        let g = filter_from_impulse(&ComplexBuffer::filled(4, c(1.0, 0.0)), &p).unwrap();
        assert!(g.max_abs_diff(&ComplexBuffer::from_real(vec![4.0, 0.0, 0.0, 0.0])) <= 1e-15);

        // column 1 of F_4: omega_4^j = (-i)^j
        let g = filter_from_impulse(&ComplexBuffer::delta(4, 1), &p).unwrap();
        let expected: ComplexBuffer = [c(1.0, 0.0), c(0.0, -1.0), c(-1.0, 0.0), c(0.0, 1.0)]
            .into_iter()
            .collect();
        assert!(g.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn hadamard_examples() {
        let mut x = wavy(8, 0.5, 0.25);
        let before = x.clone();
        hadamard_inplace(&mut x, &ComplexBuffer::filled(8, c(1.0, 0.0))).unwrap();
        assert_eq!(x, before);

        let mut x: ComplexBuffer = [c(1.0, 1.0)].into_iter().collect();
        hadamard_inplace(&mut x, &[c(1.0, -1.0)].into_iter().collect()).unwrap();
        assert_eq!(x.get(0), c(2.0, 0.0));

        let mut x: ComplexBuffer = [c(0.0, 1.0)].into_iter().collect();
        let y = x.clone();
        hadamard_inplace(&mut x, &y).unwrap();
        assert_eq!(x.get(0), c(-1.0, 0.0));

        assert!(matches!(
            hadamard_inplace(&mut x, &ComplexBuffer::zeros(2)),
            Err(FftError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn identity_and_zero_filters() {
        for (r, dims) in [
            (Radix::R2, vec![32]),
            (Radix::R4, vec![4, 16]),
            (Radix::R8, vec![64]),
        ] {
            let p = plan(r, &dims);
            let x = wavy(p.len(), 0.9, 0.1);
            let tol = tolerance(p.len(), x.max_abs());
            let ones = ComplexBuffer::filled(p.len(), c(1.0, 0.0));

            let mut y = x.clone();
            convolve_standard(&mut y, &ones, &p).unwrap();
            assert!(y.max_abs_diff(&x) <= tol);

            let mut y = x.clone();
            convolve_permfree(&mut y, &prepare_filter(&ones, &p).unwrap(), &p).unwrap();
            assert!(y.max_abs_diff(&x) <= tol);

            let mut y = x.clone();
            convolve_standard(&mut y, &ComplexBuffer::zeros(p.len()), &p).unwrap();
            assert_eq!(y.max_abs(), 0.0);
        }
    }

    #[test]
    fn shift_filter() {
        let p = plan(Radix::R2, &[4]);
        let x = ComplexBuffer::from_real(vec![1.0, 2.0, 3.0, 4.0]);
        let g: ComplexBuffer = [c(1.0, 0.0), c(0.0, -1.0), c(-1.0, 0.0), c(0.0, 1.0)]
            .into_iter()
            .collect();
        let shape = p.shape();
        let expected = naive_circular_convolution(&x, &ComplexBuffer::delta(4, 1), shape).unwrap();
        assert_eq!(expected.re(), &[4.0, 1.0, 2.0, 3.0]);
        let tol = tolerance(4, 4.0);

        let mut y = x.clone();
        convolve_standard(&mut y, &g, &p).unwrap();
        assert!(y.max_abs_diff(&expected) <= tol);

        let mut y = x.clone();
        convolve_permfree(&mut y, &prepare_filter(&g, &p).unwrap(), &p).unwrap();
        assert!(y.max_abs_diff(&expected) <= tol);
    }

    #[test]
    fn mismatched_filter_is_rejected() {
        let p = plan(Radix::R2, &[16]);
        let q = plan(Radix::R4, &[16]);
        let filter = prepare_filter(&ComplexBuffer::filled(16, c(1.0, 0.0)), &p).unwrap();
        let mut x = wavy(16, 0.1, 0.2);
        assert!(matches!(
            convolve_permfree(&mut x, &filter, &q),
            Err(FftError::FilterPlanMismatch { .. })
        ));
        let r = plan(Radix::R2, &[4, 4]);
        assert!(convolve_permfree(&mut x, &filter, &r).is_err());
        assert!(convolve_standard(&mut x, &ComplexBuffer::zeros(8), &p).is_err());
    }

    #[test]
    fn permutation_pass_counts() {
        let p = plan(Radix::R4, &[16, 16]);
        let g = wavy(p.len(), 0.2, 0.4);
        let mut x = wavy(p.len(), 0.6, 0.8);

        reset_permutation_passes();
        let filter = prepare_filter(&g, &p).unwrap();
        assert_eq!(permutation_passes(), 1);

        reset_permutation_passes();
        convolve_standard(&mut x, &g, &p).unwrap();
        assert_eq!(permutation_passes(), 2);

        reset_permutation_passes();
        convolve_permfree(&mut x, &filter, &p).unwrap();
        assert_eq!(permutation_passes(), 0);
    }
}
