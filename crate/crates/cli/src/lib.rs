//! Timing harness, cost model and oracle verification for the `pafft`
//! kernels. The `pafft` binary is a thin clap front end over this crate.

pub mod cost;
pub mod harness;
pub mod signal;
pub mod table;
pub mod verify;

pub use cost::{estimate_ai, estimate_bytes, estimate_flop, op_estimates};
pub use harness::{bench_inputs, run_bench, BenchConfig, BenchError, BenchOp, BenchRecord};
pub use table::{emit_table, TableFormat};
