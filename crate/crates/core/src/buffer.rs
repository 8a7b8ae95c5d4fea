use num_complex::Complex64;

use crate::error::{FftError, Result};
use crate::shape::TensorShape;

/// Split-complex vector: real and imaginary parts in two parallel arrays.
///
/// All kernels in this crate mutate a `ComplexBuffer` in place.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexBuffer {
    re: Vec<f64>,
    im: Vec<f64>,
}

impl ComplexBuffer {
    pub fn zeros(len: usize) -> Self {
        Self {
            re: vec![0.0; len],
            im: vec![0.0; len],
        }
    }

    /// Buffer with every element equal to `value`.
    pub fn filled(len: usize, value: Complex64) -> Self {
        Self {
            re: vec![value.re; len],
            im: vec![value.im; len],
        }
    }

    /// Unit impulse at linear offset `at`.
    pub fn delta(len: usize, at: usize) -> Self {
        let mut buf = Self::zeros(len);
        buf.re[at] = 1.0;
        buf
    }

    pub fn from_parts(re: Vec<f64>, im: Vec<f64>) -> Result<Self> {
        if re.len() != im.len() {
            return Err(FftError::LengthMismatch {
                expected: re.len(),
                actual: im.len(),
            });
        }
        Ok(Self { re, im })
    }

    /// Purely real buffer.
    pub fn from_real(re: Vec<f64>) -> Self {
        let im = vec![0.0; re.len()];
        Self { re, im }
    }

    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty()
    }

    pub fn re(&self) -> &[f64] {
        &self.re
    }

    pub fn im(&self) -> &[f64] {
        &self.im
    }

    /// Mutable views of both component arrays.
    pub fn parts_mut(&mut self) -> (&mut [f64], &mut [f64]) {
        (&mut self.re, &mut self.im)
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.re, self.im)
    }

    pub fn get(&self, i: usize) -> Complex64 {
        Complex64::new(self.re[i], self.im[i])
    }

    pub fn set(&mut self, i: usize, value: Complex64) {
        self.re[i] = value.re;
        self.im[i] = value.im;
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Complex64> + '_ {
        self.re
            .iter()
            .zip(&self.im)
            .map(|(&re, &im)| Complex64::new(re, im))
    }

    pub fn to_complex_vec(&self) -> Vec<Complex64> {
        self.iter().collect()
    }

    /// Largest absolute component, `max_j max(|re_j|, |im_j|)`.
    pub fn max_abs(&self) -> f64 {
        self.re
            .iter()
            .chain(&self.im)
            .fold(0.0, |acc: f64, v| acc.max(v.abs()))
    }

    /// Squared Euclidean norm.
    pub fn norm_sqr(&self) -> f64 {
        self.re.iter().chain(&self.im).map(|v| v * v).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.re.iter().chain(&self.im).all(|v| v.is_finite())
    }

    /// Multiplies every component by a real factor.
    pub fn scale(&mut self, factor: f64) {
        for v in self.re.iter_mut().chain(self.im.iter_mut()) {
            *v *= factor;
        }
    }

    /// Largest per-component absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &ComplexBuffer) -> f64 {
        assert_eq!(self.len(), other.len());
        self.re
            .iter()
            .zip(&other.re)
            .chain(self.im.iter().zip(&other.im))
            .fold(0.0, |acc: f64, (a, b)| acc.max((a - b).abs()))
    }

    /// Bit-for-bit equality of every component (distinguishes `0.0` from `-0.0`).
    pub fn bitwise_eq(&self, other: &ComplexBuffer) -> bool {
        self.len() == other.len()
            && self
                .re
                .iter()
                .zip(&other.re)
                .chain(self.im.iter().zip(&other.im))
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

impl FromIterator<Complex64> for ComplexBuffer {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let (re, im) = iter.into_iter().map(|z| (z.re, z.im)).unzip();
        Self { re, im }
    }
}

impl From<&[Complex64]> for ComplexBuffer {
    fn from(values: &[Complex64]) -> Self {
        values.iter().copied().collect()
    }
}

/// Lays out a tensor given in natural (last index fastest) order in the
/// first-index-fastest order used by every kernel.
///
/// A 2x2 matrix `[[a, b], [c, d]]` becomes `[a, c, b, d]`.
pub fn buffer_from_tensor(values: &[Complex64], shape: &TensorShape) -> Result<ComplexBuffer> {
    check_len(values.len(), shape)?;
    let mut buf = ComplexBuffer::zeros(values.len());
    let mut index = vec![0; shape.ndim()];
    for (natural, &value) in values.iter().enumerate() {
        unravel_natural(natural, shape.dims(), &mut index);
        buf.set(shape.offset(&index), value);
    }
    Ok(buf)
}

/// Inverse of [`buffer_from_tensor`].
pub fn tensor_from_buffer(buf: &ComplexBuffer, shape: &TensorShape) -> Result<Vec<Complex64>> {
    check_len(buf.len(), shape)?;
    let mut values = vec![Complex64::new(0.0, 0.0); buf.len()];
    let mut index = vec![0; shape.ndim()];
    for (natural, slot) in values.iter_mut().enumerate() {
        unravel_natural(natural, shape.dims(), &mut index);
        *slot = buf.get(shape.offset(&index));
    }
    Ok(values)
}

fn check_len(len: usize, shape: &TensorShape) -> Result<()> {
    if len != shape.len() {
        return Err(FftError::LengthMismatch {
            expected: shape.len(),
            actual: len,
        });
    }
    Ok(())
}

// Last index fastest.
fn unravel_natural(mut offset: usize, dims: &[usize], index: &mut [usize]) {
    for (slot, &n) in index.iter_mut().zip(dims).rev() {
        *slot = offset % n;
        offset /= n;
    }
}
