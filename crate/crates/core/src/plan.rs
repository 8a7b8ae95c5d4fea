use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{FftError, Result};
use crate::shape::TensorShape;

/// Radix of the Cooley-Tukey factorization. Only 2, 4 and 8 are supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radix {
    R2,
    R4,
    R8,
}

impl Radix {
    pub const ALL: [Radix; 3] = [Radix::R2, Radix::R4, Radix::R8];

    pub const fn value(self) -> usize {
        match self {
            Radix::R2 => 2,
            Radix::R4 => 4,
            Radix::R8 => 8,
        }
    }

    /// `log2(r)`.
    pub const fn bits(self) -> u32 {
        match self {
            Radix::R2 => 1,
            Radix::R4 => 2,
            Radix::R8 => 3,
        }
    }

    /// Returns `t` such that `n = r^t` with `t >= 1`, if one exists.
    pub fn depth_of(self, n: usize) -> Option<u32> {
        if n < 2 || !n.is_power_of_two() {
            return None;
        }
        let log2 = n.trailing_zeros();
        log2.is_multiple_of(self.bits()).then(|| log2 / self.bits())
    }
}

impl TryFrom<usize> for Radix {
    type Error = FftError;

    fn try_from(r: usize) -> Result<Self> {
        match r {
            2 => Ok(Radix::R2),
            4 => Ok(Radix::R4),
            8 => Ok(Radix::R8),
            other => Err(FftError::UnsupportedRadix(other)),
        }
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Master twiddle table for one dimension of size `n`: `w[j] = exp(-2 pi i j / n)`.
///
/// Stage twiddles are read by stride: `omega_k^j = w[j * (n / k)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwiddleTable {
    re: Vec<f64>,
    im: Vec<f64>,
}

impl TwiddleTable {
    pub fn new(n: usize) -> Self {
        let (re, im) = (0..n)
            .map(|j| {
                if j == 0 {
                    return (1.0, 0.0);
                }
                let (sin, cos) = (2.0 * PI * j as f64 / n as f64).sin_cos();
                (cos, -sin)
            })
            .unzip();
        Self { re, im }
    }

    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty()
    }

    #[inline(always)]
    pub fn get(&self, j: usize) -> Complex64 {
        Complex64::new(self.re[j], self.im[j])
    }

    pub fn re(&self) -> &[f64] {
        &self.re
    }

    pub fn im(&self) -> &[f64] {
        &self.im
    }
}

/// Identifies the `(radix, shape)` pair a plan was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanFingerprint {
    pub radix: Radix,
    pub dims: Vec<usize>,
}

impl fmt::Display for PlanFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "radix-{} ", self.radix)?;
        for (q, n) in self.dims.iter().enumerate() {
            if q > 0 {
                f.write_str("x")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Precomputed state for one `(radix, shape)` pair: per-dimension twiddle
/// tables and digit-reversal maps. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct Plan {
    radix: Radix,
    shape: TensorShape,
    depths: Vec<u32>,
    twiddles: Vec<TwiddleTable>,
    rev_maps: Vec<Vec<usize>>,
}

impl Plan {
    pub fn new(radix: Radix, shape: TensorShape) -> Result<Self> {
        let depths = shape
            .dims()
            .iter()
            .enumerate()
            .map(|(dim, &size)| {
                radix
                    .depth_of(size)
                    .ok_or(FftError::NotAPowerOfRadix { dim, size })
            })
            .collect::<Result<Vec<_>>>()?;

        // Dimensions often repeat (e.g. 1024x1024); build each size once.
        let mut twiddles: Vec<TwiddleTable> = Vec::with_capacity(shape.ndim());
        let mut rev_maps: Vec<Vec<usize>> = Vec::with_capacity(shape.ndim());
        for (q, &n) in shape.dims().iter().enumerate() {
            match shape.dims()[..q].iter().position(|&m| m == n) {
                Some(p) => {
                    twiddles.push(twiddles[p].clone());
                    rev_maps.push(rev_maps[p].clone());
                }
                None => {
                    twiddles.push(TwiddleTable::new(n));
                    rev_maps.push(reversal_map(radix, n));
                }
            }
        }

        Ok(Self {
            radix,
            shape,
            depths,
            twiddles,
            rev_maps,
        })
    }

    /// Convenience constructor for a one-dimensional plan.
    pub fn new_1d(radix: Radix, n: usize) -> Result<Self> {
        Self::new(radix, TensorShape::vector(n)?)
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    pub fn shape(&self) -> &TensorShape {
        &self.shape
    }

    pub fn dims(&self) -> &[usize] {
        self.shape.dims()
    }

    /// Total element count.
    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of radix-r digits `t_q` in each dimension, `n_q = r^{t_q}`.
    pub fn depths(&self) -> &[u32] {
        &self.depths
    }

    pub fn twiddles(&self, dim: usize) -> &TwiddleTable {
        &self.twiddles[dim]
    }

    /// Digit-reversal map of dimension `dim`: `rev[j] = digit_reverse(j, r, t_dim)`.
    pub fn rev_map(&self, dim: usize) -> &[usize] {
        &self.rev_maps[dim]
    }

    pub fn fingerprint(&self) -> PlanFingerprint {
        PlanFingerprint {
            radix: self.radix,
            dims: self.shape.dims().to_vec(),
        }
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if dim >= self.shape.ndim() {
            return Err(FftError::DimensionOutOfRange {
                dim,
                ndim: self.shape.ndim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.len() {
            return Err(FftError::ShapeMismatch {
                expected: self.len(),
                actual: len,
            });
        }
        Ok(())
    }
}

/// Builds the reversal map in O(n): reversing `j` equals reversing `j / r`
/// one digit shorter, then placing `j mod r` as the most significant digit.
fn reversal_map(radix: Radix, n: usize) -> Vec<usize> {
    let r = radix.value();
    let top = n / r;
    let mut rev = vec![0usize; n];
    for j in 1..n {
        rev[j] = rev[j / r] / r + (j % r) * top;
    }
    rev
}
