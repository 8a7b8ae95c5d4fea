//! Brute-force references for the fast kernels.
//!
//! Every root of unity is evaluated directly with `exp` for its own `(j, k)`
//! pair; nothing here touches [`TwiddleTable`](crate::plan::TwiddleTable) or
//! the reversal maps. The cost is O(n^2), so keep inputs small (total size up
//! to a few thousand).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::buffer::ComplexBuffer;
use crate::error::{FftError, Result};
use crate::shape::TensorShape;

/// Transform direction. `Backward` includes the `1/n` normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => -1.0,
            Direction::Backward => 1.0,
        }
    }
}

/// Absolute per-component tolerance for a transform of total size `n` on
/// inputs of magnitude `scale`: `1e-12 * log2(n) * scale`.
pub fn tolerance(n: usize, scale: f64) -> f64 {
    1e-12 * (n as f64).log2().max(1.0) * scale
}

/// Absolute tolerance of a fast convolution against the direct sum:
/// `1e-10 * sqrt(n) * max|x| * max|h|`.
pub fn convolution_tolerance(n: usize, max_x: f64, max_h: f64) -> f64 {
    1e-10 * (n as f64).sqrt() * max_x * max_h
}

/// `y_j = sum_k exp(-+2 pi i j k / n) x_k`, divided by `n` for `Backward`.
pub fn naive_dft(x: &[Complex64], direction: Direction) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(FftError::EmptyShape);
    }
    let mut y = unnormalized_dft(x, direction.sign());
    if direction == Direction::Backward {
        let n = x.len() as f64;
        y.iter_mut().for_each(|v| *v /= n);
    }
    Ok(y)
}

fn unnormalized_dft(x: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|j| {
            x.iter()
                .enumerate()
                .fold(Complex64::new(0.0, 0.0), |acc, (k, &xk)| {
                    let phase = sign * 2.0 * PI * ((j * k) % n) as f64 / n as f64;
                    acc + Complex64::from_polar(1.0, phase) * xk
                })
        })
        .collect()
}

/// Multi-dimensional DFT by naive 1D transforms along each mode, modes 1..d
/// in order. `Backward` divides by the total size once at the end.
pub fn naive_dft_tensor(
    x: &ComplexBuffer,
    shape: &TensorShape,
    direction: Direction,
) -> Result<ComplexBuffer> {
    let order: Vec<usize> = (0..shape.ndim()).collect();
    naive_dft_tensor_ordered(x, shape, direction, &order)
}

/// As [`naive_dft_tensor`], but with the modes visited in `mode_order`.
pub fn naive_dft_tensor_ordered(
    x: &ComplexBuffer,
    shape: &TensorShape,
    direction: Direction,
    mode_order: &[usize],
) -> Result<ComplexBuffer> {
    if x.len() != shape.len() {
        return Err(FftError::ShapeMismatch {
            expected: shape.len(),
            actual: x.len(),
        });
    }
    let mut data = x.to_complex_vec();
    for &q in mode_order {
        let n = shape.dims()[q];
        let stride = shape.stride(q);
        let mut line = vec![Complex64::new(0.0, 0.0); n];
        for outer in (0..data.len()).step_by(n * stride) {
            for base in outer..outer + stride {
                for (i, v) in line.iter_mut().enumerate() {
                    *v = data[base + i * stride];
                }
                for (i, v) in unnormalized_dft(&line, direction.sign())
                    .into_iter()
                    .enumerate()
                {
                    data[base + i * stride] = v;
                }
            }
        }
    }
    if direction == Direction::Backward {
        let n = shape.len() as f64;
        data.iter_mut().for_each(|v| *v /= n);
    }
    Ok(data.into_iter().collect())
}

/// Direct circular convolution `y[i] = sum_j h[j] x[(i - j) mod shape]`,
/// with the modular difference taken per mode.
pub fn naive_circular_convolution(
    x: &ComplexBuffer,
    h: &ComplexBuffer,
    shape: &TensorShape,
) -> Result<ComplexBuffer> {
    for len in [x.len(), h.len()] {
        if len != shape.len() {
            return Err(FftError::ShapeMismatch {
                expected: shape.len(),
                actual: len,
            });
        }
    }
    let dims = shape.dims();
    let mut out = ComplexBuffer::zeros(shape.len());
    let (mut ii, mut jj, mut kk) = (
        vec![0; dims.len()],
        vec![0; dims.len()],
        vec![0; dims.len()],
    );
    for i in 0..shape.len() {
        shape.unravel(i, &mut ii);
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..shape.len() {
            shape.unravel(j, &mut jj);
            for q in 0..dims.len() {
                kk[q] = (ii[q] + dims[q] - jj[q]) % dims[q];
            }
            acc += h.get(j) * x.get(shape.offset(&kk));
        }
        out.set(i, acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn delta_transforms_to_ones() {
        let mut x = vec![c(0.0, 0.0); 8];
        x[0] = c(1.0, 0.0);
        let y = naive_dft(&x, Direction::Forward).unwrap();
        assert!(close(&y, &[c(1.0, 0.0); 8], 1e-15));
    }

    #[test]
    fn four_point_by_hand() {
        // y_0 = 1+2+3+4, y_1 = 1 - 2i - 3 + 4i, y_2 = 1 - 2 + 3 - 4, y_3 = 1 + 2i - 3 - 4i
        let x = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)];
        let y = naive_dft(&x, Direction::Forward).unwrap();
        let expected = [c(10.0, 0.0), c(-2.0, 2.0), c(-2.0, 0.0), c(-2.0, -2.0)];
        assert!(close(&y, &expected, 1e-14));
        let back = naive_dft(&y, Direction::Backward).unwrap();
        assert!(close(&back, &x, 1e-12 * 4.0));
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(
            naive_dft(&[], Direction::Forward),
            Err(FftError::EmptyShape)
        );
    }

    #[test]
    fn tensor_of_one_mode_equals_vector_dft() {
        let x: Vec<_> = (0..8).map(|k| c(k as f64, 1.0 - k as f64)).collect();
        let shape = TensorShape::vector(8).unwrap();
        let buf: ComplexBuffer = x.iter().copied().collect();
        let y = naive_dft_tensor(&buf, &shape, Direction::Forward).unwrap();
        let expected = naive_dft(&x, Direction::Forward).unwrap();
        assert!(close(&y.to_complex_vec(), &expected, 0.0));
    }

    #[test]
    fn tensor_delta_and_mode_order() {
        let shape = TensorShape::new(vec![4, 8]).unwrap();
        let delta = ComplexBuffer::delta(32, 0);
        let y = naive_dft_tensor(&delta, &shape, Direction::Forward).unwrap();
        assert!(close(&y.to_complex_vec(), &[c(1.0, 0.0); 32], 1e-15));

        let x: ComplexBuffer = (0..32)
            .map(|k| c((k * 7 % 5) as f64, (k % 3) as f64))
            .collect();
        let a = naive_dft_tensor_ordered(&x, &shape, Direction::Forward, &[0, 1]).unwrap();
        let b = naive_dft_tensor_ordered(&x, &shape, Direction::Forward, &[1, 0]).unwrap();
        assert!(a.max_abs_diff(&b) <= 1e-12 * 32.0);
    }

    #[test]
    fn convolution_examples() {
        let shape = TensorShape::vector(4).unwrap();
        let x = ComplexBuffer::from_real(vec![1.0, 2.0, 3.0, 4.0]);
        let y = naive_circular_convolution(&x, &ComplexBuffer::delta(4, 0), &shape).unwrap();
        assert_eq!(y, x);
        let y = naive_circular_convolution(&x, &ComplexBuffer::delta(4, 1), &shape).unwrap();
        assert_eq!(y.re(), &[4.0, 1.0, 2.0, 3.0]);

        let shape = TensorShape::vector(2).unwrap();
        let ones = ComplexBuffer::from_real(vec![1.0, 1.0]);
        let y = naive_circular_convolution(&ones, &ones, &shape).unwrap();
        assert_eq!(y.re(), &[2.0, 2.0]);
    }

    #[test]
    fn convolution_is_commutative() {
        let shape = TensorShape::new(vec![4, 2]).unwrap();
        let x: ComplexBuffer = (0..8)
            .map(|k| c(k as f64 - 3.0, (k * k % 5) as f64))
            .collect();
        let h: ComplexBuffer = (0..8).map(|k| c((k % 3) as f64, -(k as f64))).collect();
        let xh = naive_circular_convolution(&x, &h, &shape).unwrap();
        let hx = naive_circular_convolution(&h, &x, &shape).unwrap();
        assert!(xh.max_abs_diff(&hx) <= 1e-12);
    }
}
