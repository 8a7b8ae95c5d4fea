//! Operation-count model for the kernels.
//!
//! FLOP per transform: `c_r * n * log2(n)` with `c_2 = 5`, `c_4 = 4.25` and
//! `c_8 = 4.08`. Memory traffic counts 16-byte complex elements: each of the
//! `log_r(n)` butterfly stages reads and writes `n` elements, and a
//! permutation pass adds another `n` reads and `n` writes. These are model
//! values, not measurements.

use pafft::Radix;

use crate::harness::{BenchError, BenchOp};

const BYTES_PER_ELEMENT: f64 = 16.0;

fn flop_coefficient(radix: Radix) -> f64 {
    match radix {
        Radix::R2 => 5.0,
        Radix::R4 => 4.25,
        Radix::R8 => 4.08,
    }
}

/// `log_r(n)` for `n = r^t`, `t >= 0`.
fn stages(n: usize, radix: Radix) -> Result<u32, BenchError> {
    if n == 1 {
        return Ok(0);
    }
    radix.depth_of(n).ok_or(BenchError::NotARadixPower {
        n,
        radix: radix.value(),
    })
}

/// FLOP of one transform of total size `n`. For a tensor, the per-fiber
/// costs summed over all modes reduce to the same formula with `n` the total
/// size.
pub fn estimate_flop(n: usize, radix: Radix) -> Result<f64, BenchError> {
    let t = stages(n, radix)?;
    Ok(flop_coefficient(radix) * n as f64 * (t * radix.bits()) as f64)
}

/// Modeled bytes moved by one transform: `16 * 2n * (1 + log_r n)` with the
/// permutation pass, `16 * 2n * log_r n` without.
pub fn estimate_bytes(n: usize, radix: Radix, permutation_free: bool) -> Result<f64, BenchError> {
    let t = stages(n, radix)? as f64;
    let passes = if permutation_free { t } else { 1.0 + t };
    Ok(BYTES_PER_ELEMENT * 2.0 * n as f64 * passes)
}

/// Arithmetic intensity in FLOP/byte.
///
/// With the permutation this is `c_r log2(n) / (32 (1 + log_r n))`, which
/// grows towards `c_r log2(r) / 32`. Without it the intensity is that limit
/// for every `n`: 0.15625, 0.265625 and 0.3825 for radices 2, 4 and 8.
pub fn estimate_ai(n: usize, radix: Radix, permutation_free: bool) -> Result<f64, BenchError> {
    if permutation_free {
        stages(n, radix)?;
        return Ok(flop_coefficient(radix) * radix.bits() as f64 / (2.0 * BYTES_PER_ELEMENT));
    }
    Ok(estimate_flop(n, radix)? / estimate_bytes(n, radix, false)?)
}

/// `(flop, bytes)` for one execution of `op` on `n` elements.
///
/// Convolutions count two transforms plus the Hadamard product (6 FLOP per
/// element; reads two elements and writes one).
pub fn op_estimates(op: BenchOp, n: usize, radix: Radix) -> Result<(f64, f64), BenchError> {
    let nf = n as f64;
    let permute_bytes = BYTES_PER_ELEMENT * 2.0 * nf;
    let hadamard = (6.0 * nf, BYTES_PER_ELEMENT * 3.0 * nf);
    Ok(match op {
        BenchOp::Permute | BenchOp::PrepareFilter => {
            stages(n, radix)?;
            (0.0, permute_bytes)
        }
        BenchOp::Fft | BenchOp::Ifft => {
            (estimate_flop(n, radix)?, estimate_bytes(n, radix, false)?)
        }
        BenchOp::FftUnordered | BenchOp::IfftUnordered => {
            (estimate_flop(n, radix)?, estimate_bytes(n, radix, true)?)
        }
        BenchOp::ConvStd => (
            2.0 * estimate_flop(n, radix)? + hadamard.0,
            2.0 * estimate_bytes(n, radix, false)? + hadamard.1,
        ),
        BenchOp::ConvPa => (
            2.0 * estimate_flop(n, radix)? + hadamard.0,
            2.0 * estimate_bytes(n, radix, true)? + hadamard.1,
        ),
    })
}
