//! Oracle comparisons over a fixed grid of radices and shapes.

use std::io::Write;

use pafft::oracle::{
    convolution_tolerance, naive_circular_convolution, naive_dft_tensor, tolerance, Direction,
};
use pafft::{
    convolve_permfree, convolve_standard, fft_backward, fft_backward_unordered, fft_forward,
    fft_forward_unordered, filter_from_impulse, permute_tensor, prepare_filter, ComplexBuffer,
    Plan, Radix, TensorShape,
};

use crate::harness::{bench_inputs, BenchError};

/// Largest total size at which the direct convolution sum is evaluated.
pub const NAIVE_CONVOLUTION_LIMIT: usize = 4096;

/// The built-in shapes: every 1D power of each radix up to 4096, a spread of
/// 2D shapes up to 64x64 and 3D shapes up to 16x16x16.
pub fn grid() -> Vec<(Radix, TensorShape)> {
    let mut cases = Vec::new();
    for radix in Radix::ALL {
        let mut n = radix.value();
        while n <= 4096 {
            cases.push((radix, vec![n]));
            n *= radix.value();
        }
    }
    let multi: [(Radix, &[&[usize]]); 3] = [
        (
            Radix::R2,
            &[
                &[2, 2],
                &[4, 8],
                &[16, 16],
                &[2, 64],
                &[64, 32],
                &[64, 64],
                &[2, 4, 8],
                &[8, 2, 16],
                &[16, 16, 16],
            ],
        ),
        (
            Radix::R4,
            &[
                &[4, 4],
                &[16, 64],
                &[64, 16],
                &[64, 64],
                &[4, 4, 4],
                &[16, 4, 16],
                &[16, 16, 16],
            ],
        ),
        (Radix::R8, &[&[8, 8], &[8, 64], &[64, 64], &[8, 8, 8]]),
    ];
    for (radix, shapes) in multi {
        cases.extend(shapes.iter().map(|dims| (radix, dims.to_vec())));
    }
    cases
        .into_iter()
        .map(|(radix, dims)| (radix, TensorShape::new(dims).expect("valid grid shape")))
        .collect()
}

/// Outcome of one comparison. `error` and `tolerance` are both zero for the
/// bitwise checks, where `passed` records exact equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn within(name: &'static str, error: f64, tolerance: f64) -> Self {
        Self {
            name,
            error,
            tolerance,
            passed: error <= tolerance,
        }
    }

    fn exact(name: &'static str, passed: bool) -> Self {
        Self {
            name,
            error: 0.0,
            tolerance: 0.0,
            passed,
        }
    }
}

pub fn check_forward(plan: &Plan, x: &ComplexBuffer) -> Result<Check, BenchError> {
    let mut y = x.clone();
    fft_forward(&mut y, plan)?;
    let expected = naive_dft_tensor(x, plan.shape(), Direction::Forward)?;
    Ok(Check::within(
        "forward",
        y.max_abs_diff(&expected),
        tolerance(plan.len(), x.max_abs()),
    ))
}

pub fn check_backward(plan: &Plan, x: &ComplexBuffer) -> Result<Check, BenchError> {
    let mut y = x.clone();
    fft_backward(&mut y, plan)?;
    let expected = naive_dft_tensor(x, plan.shape(), Direction::Backward)?;
    Ok(Check::within(
        "backward",
        y.max_abs_diff(&expected),
        tolerance(plan.len(), x.max_abs()),
    ))
}

/// Standard against permutation-free convolution, then both against the
/// direct sum when the size allows it.
pub fn check_convolution(
    plan: &Plan,
    x: &ComplexBuffer,
    h: &ComplexBuffer,
) -> Result<Vec<Check>, BenchError> {
    let g = filter_from_impulse(h, plan)?;
    let mut standard = x.clone();
    convolve_standard(&mut standard, &g, plan)?;
    let mut permfree = x.clone();
    convolve_permfree(&mut permfree, &prepare_filter(&g, plan)?, plan)?;
    let mut checks = vec![Check::within(
        "conv-std-vs-pa",
        standard.max_abs_diff(&permfree),
        tolerance(plan.len(), x.max_abs()),
    )];
    if plan.len() <= NAIVE_CONVOLUTION_LIMIT {
        let direct = naive_circular_convolution(x, h, plan.shape())?;
        let tol = convolution_tolerance(plan.len(), x.max_abs(), h.max_abs());
        checks.push(Check::within(
            "conv-std-vs-direct",
            standard.max_abs_diff(&direct),
            tol,
        ));
        checks.push(Check::within(
            "conv-pa-vs-direct",
            permfree.max_abs_diff(&direct),
            tol,
        ));
    }
    Ok(checks)
}

pub fn check_decomposition(plan: &Plan, x: &ComplexBuffer) -> Result<Vec<Check>, BenchError> {
    let mut full = x.clone();
    fft_forward(&mut full, plan)?;
    let mut split = x.clone();
    permute_tensor(&mut split, plan)?;
    fft_forward_unordered(&mut split, plan)?;
    let forward = full.bitwise_eq(&split);

    let mut full = x.clone();
    fft_backward(&mut full, plan)?;
    let mut split = x.clone();
    permute_tensor(&mut split, plan)?;
    fft_backward_unordered(&mut split, plan)?;
    let backward = full.bitwise_eq(&split);

    Ok(vec![
        Check::exact("forward-decomposition", forward),
        Check::exact("backward-decomposition", backward),
    ])
}

pub fn check_involution(plan: &Plan, x: &ComplexBuffer) -> Result<Check, BenchError> {
    let mut y = x.clone();
    permute_tensor(&mut y, plan)?;
    permute_tensor(&mut y, plan)?;
    Ok(Check::exact("involution", y.bitwise_eq(x)))
}

/// Every check for one grid case, on inputs drawn from `seed`.
pub fn verify_case(radix: Radix, shape: &TensorShape, seed: u64) -> Result<Vec<Check>, BenchError> {
    let plan = Plan::new(radix, shape.clone())?;
    let (x, h) = bench_inputs(plan.len(), seed);
    let mut checks = vec![check_forward(&plan, &x)?, check_backward(&plan, &x)?];
    checks.extend(check_convolution(&plan, &x, &h)?);
    checks.extend(check_decomposition(&plan, &x)?);
    checks.push(check_involution(&plan, &x)?);
    Ok(checks)
}

/// Runs the grid, writing one line per case. Returns whether all checks passed.
pub fn run_verify(seed: u64, out: &mut dyn Write) -> Result<bool, BenchError> {
    let mut all_passed = true;
    for (radix, shape) in grid() {
        let checks = verify_case(radix, &shape, seed)?;
        let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
        if failed.is_empty() {
            writeln!(out, "ok   radix-{radix} {shape} ({} checks)", checks.len())?;
        } else {
            all_passed = false;
            for c in failed {
                writeln!(
                    out,
                    "FAIL radix-{radix} {shape} {}: error {:.3e} > tolerance {:.3e}",
                    c.name, c.error, c.tolerance
                )?;
            }
        }
    }
    Ok(all_passed)
}
