use std::fmt;

use crate::error::{FftError, Result};

/// Ordered list of dimension sizes `[n_1, ..., n_d]`.
///
/// Buffers described by a shape are linearized with the first index varying
/// fastest: `offset(i_1, ..., i_d) = i_1 + n_1 * (i_2 + n_2 * (i_3 + ...))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorShape {
    dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.is_empty() {
            return Err(FftError::EmptyShape);
        }
        if let Some(dim) = dims.iter().position(|&n| n == 0) {
            return Err(FftError::ZeroExtent { dim });
        }
        Ok(Self { dims })
    }

    /// Shorthand for a one-dimensional shape.
    pub fn vector(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ndim(&self) -> usize {
        self.dims.len()
    }

    /// Total element count, `n_1 * ... * n_d`.
    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distance between consecutive elements along `dim` in the linear layout.
    pub fn stride(&self, dim: usize) -> usize {
        self.dims[..dim].iter().product()
    }

    /// Linear offset of a multi-index (first index fastest).
    pub fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.dims.len());
        index
            .iter()
            .zip(&self.dims)
            .rev()
            .fold(0, |acc, (&i, &n)| acc * n + i)
    }

    /// Inverse of [`offset`](Self::offset), writing into `index`.
    pub fn unravel(&self, mut offset: usize, index: &mut [usize]) {
        for (slot, &n) in index.iter_mut().zip(&self.dims) {
            *slot = offset % n;
            offset /= n;
        }
    }
}

impl fmt::Display for TensorShape {
    /// Renders as an `x`-joined list, e.g. `1024x1024`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, n) in self.dims.iter().enumerate() {
            if q > 0 {
                f.write_str("x")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TensorShape {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let dims = s
            .split(['x', 'X'])
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("invalid dimension {part:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::new(dims).map_err(|e| e.to_string())
    }
}
