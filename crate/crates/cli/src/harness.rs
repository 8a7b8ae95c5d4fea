use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use pafft::oracle::tolerance;
use pafft::{
    convolve_permfree, convolve_standard, fft_backward, fft_backward_unordered, fft_forward,
    fft_forward_unordered, filter_from_impulse, permutation_passes, permute_tensor, prepare_filter,
    ComplexBuffer, FftError, Plan, Radix, TensorShape,
};
use thiserror::Error;

use crate::cost::op_estimates;
use crate::signal::{random_buffer, rng};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Plan(#[from] FftError),
    #[error("{n} is not a power of radix {radix}")]
    NotARadixPower { n: usize, radix: usize },
    #[error("reps must be at least 1")]
    NoReps,
    #[error("nothing to tabulate")]
    NoRecords,
    #[error("self-check failed for {op}: {detail}")]
    SelfCheck { op: BenchOp, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Operations the harness can time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchOp {
    Permute,
    Fft,
    FftUnordered,
    Ifft,
    IfftUnordered,
    ConvStd,
    ConvPa,
    PrepareFilter,
}

impl BenchOp {
    pub const ALL: [BenchOp; 8] = [
        BenchOp::Permute,
        BenchOp::Fft,
        BenchOp::FftUnordered,
        BenchOp::Ifft,
        BenchOp::IfftUnordered,
        BenchOp::ConvStd,
        BenchOp::ConvPa,
        BenchOp::PrepareFilter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchOp::Permute => "permute",
            BenchOp::Fft => "fft",
            BenchOp::FftUnordered => "fft-unordered",
            BenchOp::Ifft => "ifft",
            BenchOp::IfftUnordered => "ifft-unordered",
            BenchOp::ConvStd => "conv-std",
            BenchOp::ConvPa => "conv-pa",
            BenchOp::PrepareFilter => "prepare-filter",
        }
    }
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BenchOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = BenchOp::ALL.iter().map(|op| op.name()).collect();
                format!("unknown op {s:?} (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub ops: Vec<BenchOp>,
    pub radix: Radix,
    pub shape: TensorShape,
    pub reps: usize,
    pub warmup: usize,
    pub seed: u64,
}

impl BenchConfig {
    pub const DEFAULT_REPS: usize = 5;
    pub const DEFAULT_WARMUP: usize = 1;

    pub fn new(op: BenchOp, radix: Radix, shape: TensorShape) -> Self {
        Self {
            ops: vec![op],
            radix,
            shape,
            reps: Self::DEFAULT_REPS,
            warmup: Self::DEFAULT_WARMUP,
            seed: 0,
        }
    }
}

/// One timing row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub op: BenchOp,
    pub radix: Radix,
    pub shape: TensorShape,
    pub total_n: usize,
    pub reps: usize,
    pub warmup: usize,
    pub median_seconds: f64,
    pub min_seconds: f64,
    pub flop_estimate: f64,
    pub bytes_estimate: f64,
    pub ai_estimate: f64,
    /// Permutation passes executed inside the timed region, summed over reps.
    pub timed_permutations: u64,
}

/// Times every op of `config` on the same seeded input.
///
/// Each rep restores the input outside the timed region, so all reps see
/// identical data. Filter preparation for `conv-pa` happens before timing.
/// Before timing, `permute` is checked to be an involution and the two
/// convolution pipelines are checked to agree.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    if config.reps == 0 {
        return Err(BenchError::NoReps);
    }
    let plan = Plan::new(config.radix, config.shape.clone())?;
    let n = plan.len();
    let (input, impulse) = bench_inputs(n, config.seed);
    pin_to_current_cpu();

    config
        .ops
        .iter()
        .map(|&op| {
            let mut kernel = Kernel::new(op, &plan, &impulse)?;
            kernel.self_check(&input)?;
            let mut work = input.clone();
            for _ in 0..config.warmup {
                work.clone_from(&input);
                kernel.run(&mut work)?;
            }
            let mut samples = Vec::with_capacity(config.reps);
            let before = permutation_passes();
            for _ in 0..config.reps {
                work.clone_from(&input);
                let start = Instant::now();
                kernel.run(&mut work)?;
                let elapsed = start.elapsed();
                black_box(&work);
                samples.push(elapsed.max(Duration::from_nanos(1)).as_secs_f64());
            }
            let timed_permutations = permutation_passes() - before;
            let (median_seconds, min_seconds) = median_and_min(&mut samples);
            let (flop_estimate, bytes_estimate) = op_estimates(op, n, config.radix)?;
            Ok(BenchRecord {
                op,
                radix: config.radix,
                shape: config.shape.clone(),
                total_n: n,
                reps: config.reps,
                warmup: config.warmup,
                median_seconds,
                min_seconds,
                flop_estimate,
                bytes_estimate,
                ai_estimate: if bytes_estimate > 0.0 {
                    flop_estimate / bytes_estimate
                } else {
                    0.0
                },
                timed_permutations,
            })
        })
        .collect()
}

/// The input signal and filter impulse response drawn for a run: `n` values
/// each, signal first, from one generator seeded with `seed`.
pub fn bench_inputs(n: usize, seed: u64) -> (ComplexBuffer, ComplexBuffer) {
    let mut source = rng(seed);
    let input = random_buffer(n, &mut source);
    let impulse = random_buffer(n, &mut source);
    (input, impulse)
}

fn median_and_min(samples: &mut [f64]) -> (f64, f64) {
    samples.sort_by(f64::total_cmp);
    let mid = samples.len() / 2;
    let median = if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        0.5 * (samples[mid - 1] + samples[mid])
    };
    (median, samples[0])
}

/// An op bound to its plan and any precomputed filter state.
struct Kernel<'a> {
    op: BenchOp,
    plan: &'a Plan,
    spectrum: Option<ComplexBuffer>,
    prepared: Option<pafft::PreparedFilter>,
}

impl<'a> Kernel<'a> {
    fn new(op: BenchOp, plan: &'a Plan, impulse: &ComplexBuffer) -> Result<Self, BenchError> {
        let needs_spectrum = matches!(
            op,
            BenchOp::ConvStd | BenchOp::ConvPa | BenchOp::PrepareFilter
        );
        let spectrum = if needs_spectrum {
            Some(filter_from_impulse(impulse, plan)?)
        } else {
            None
        };
        let prepared = match (&spectrum, op) {
            (Some(g), BenchOp::ConvPa) => Some(prepare_filter(g, plan)?),
            _ => None,
        };
        Ok(Self {
            op,
            plan,
            spectrum,
            prepared,
        })
    }

    fn run(&mut self, x: &mut ComplexBuffer) -> Result<(), BenchError> {
        let plan = self.plan;
        match self.op {
            BenchOp::Permute => permute_tensor(x, plan)?,
            BenchOp::Fft => fft_forward(x, plan)?,
            BenchOp::FftUnordered => fft_forward_unordered(x, plan)?,
            BenchOp::Ifft => fft_backward(x, plan)?,
            BenchOp::IfftUnordered => fft_backward_unordered(x, plan)?,
            BenchOp::ConvStd => convolve_standard(x, self.spectrum()?, plan)?,
            BenchOp::ConvPa => {
                let filter = self.prepared.as_ref().expect("prepared in Kernel::new");
                convolve_permfree(x, filter, plan)?
            }
            BenchOp::PrepareFilter => {
                black_box(prepare_filter(self.spectrum()?, plan)?);
            }
        }
        Ok(())
    }

    fn spectrum(&self) -> Result<&ComplexBuffer, BenchError> {
        Ok(self
            .spectrum
            .as_ref()
            .expect("spectrum computed in Kernel::new"))
    }

    fn self_check(&self, input: &ComplexBuffer) -> Result<(), BenchError> {
        let plan = self.plan;
        let fail = |detail: String| BenchError::SelfCheck {
            op: self.op,
            detail,
        };
        match self.op {
            BenchOp::Permute => {
                let mut x = input.clone();
                permute_tensor(&mut x, plan)?;
                permute_tensor(&mut x, plan)?;
                if !x.bitwise_eq(input) {
                    return Err(fail("permutation applied twice is not the identity".into()));
                }
            }
            BenchOp::ConvStd | BenchOp::ConvPa => {
                let g = self.spectrum()?;
                let mut standard = input.clone();
                convolve_standard(&mut standard, g, plan)?;
                let mut permfree = input.clone();
                convolve_permfree(&mut permfree, &prepare_filter(g, plan)?, plan)?;
                let diff = standard.max_abs_diff(&permfree);
                let tol = tolerance(plan.len(), input.max_abs().max(standard.max_abs()));
                if diff > tol {
                    return Err(fail(format!(
                        "pipelines differ by {diff:.3e} (tolerance {tol:.3e})"
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// Pins the calling thread to the processor it is running on. Best effort.
#[cfg(target_os = "linux")]
fn pin_to_current_cpu() {
    // SAFETY: cpu_set_t is plain data; both calls only read/write the local set.
    unsafe {
        let cpu = libc::sched_getcpu();
        if cpu < 0 {
            return;
        }
        let mut set: libc::cpu_set_t = std::mem::zeroed();
        libc::CPU_SET(cpu as usize, &mut set);
        libc::sched_setaffinity(0, std::mem::size_of::<libc::cpu_set_t>(), &set);
    }
}

#[cfg(not(target_os = "linux"))]
fn pin_to_current_cpu() {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::estimate_flop;

    fn config(ops: &[BenchOp], radix: Radix, dims: &[usize]) -> BenchConfig {
        BenchConfig {
            ops: ops.to_vec(),
            radix,
            shape: TensorShape::new(dims.to_vec()).unwrap(),
            reps: 3,
            warmup: 1,
            seed: 42,
        }
    }

    #[test]
    fn op_names_round_trip() {
        for op in BenchOp::ALL {
            assert_eq!(op.name().parse::<BenchOp>().unwrap(), op);
        }
        assert!("fftw".parse::<BenchOp>().is_err());
    }

    #[test]
    fn records_are_consistent() {
        let records = run_bench(&config(&BenchOp::ALL, Radix::R4, &[64, 16])).unwrap();
        assert_eq!(records.len(), BenchOp::ALL.len());
        for r in &records {
            assert!(r.median_seconds >= r.min_seconds && r.min_seconds > 0.0);
            assert!(r.flop_estimate >= 0.0 && r.bytes_estimate > 0.0 && r.ai_estimate >= 0.0);
            assert_eq!(r.total_n, 1024);
        }
        let fft = records.iter().find(|r| r.op == BenchOp::Fft).unwrap();
        assert_eq!(fft.flop_estimate, estimate_flop(1024, Radix::R4).unwrap());
    }

    #[test]
    fn timed_region_permutation_counts() {
        let records = run_bench(&config(
            &[
                BenchOp::ConvStd,
                BenchOp::ConvPa,
                BenchOp::Fft,
                BenchOp::FftUnordered,
            ],
            Radix::R2,
            &[256],
        ))
        .unwrap();
        let passes: Vec<u64> = records.iter().map(|r| r.timed_permutations).collect();
        assert_eq!(passes, vec![6, 0, 3, 0]);
    }

    #[test]
    fn same_seed_same_permuted_output() {
        let plan = Plan::new_1d(Radix::R8, 512).unwrap();
        let outputs: Vec<ComplexBuffer> = (0..2)
            .map(|_| {
                let (mut x, _) = bench_inputs(512, 9);
                permute_tensor(&mut x, &plan).unwrap();
                x
            })
            .collect();
        assert!(outputs[0].bitwise_eq(&outputs[1]));

        let mut cfg = config(&[BenchOp::Permute], Radix::R8, &[64]);
        assert!(run_bench(&cfg).is_ok());
        cfg.reps = 0;
        assert!(matches!(run_bench(&cfg), Err(BenchError::NoReps)));
    }

    #[test]
    fn plan_errors_propagate() {
        let cfg = config(&[BenchOp::Fft], Radix::R8, &[16]);
        assert!(matches!(
            run_bench(&cfg),
            Err(BenchError::Plan(FftError::NotAPowerOfRadix {
                dim: 0,
                size: 16
            }))
        ));
    }

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median_and_min(&mut [3.0, 1.0, 2.0]), (2.0, 1.0));
        assert_eq!(median_and_min(&mut [4.0, 1.0, 2.0, 3.0]), (2.5, 1.0));
    }
}
