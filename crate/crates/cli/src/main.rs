use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use pafft::{Radix, TensorShape};
use pafft_cli::verify::run_verify;
use pafft_cli::{emit_table, run_bench, BenchConfig, BenchOp, TableFormat};

#[derive(Parser)]
#[command(name = "pafft", version, about = "Time and verify the pafft kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time one or more ops on a seeded random input.
    Bench(BenchArgs),
    /// Compare every kernel against the naive oracles on a built-in grid.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Comma-separated ops: permute, fft, fft-unordered, ifft,
    /// ifft-unordered, conv-std, conv-pa, prepare-filter.
    #[arg(long, value_delimiter = ',', required = true)]
    op: Vec<BenchOp>,
    #[arg(long, value_parser = parse_radix)]
    radix: Radix,
    /// Tensor extents, e.g. 1048576 or 1024x1024.
    #[arg(long)]
    dims: TensorShape,
    #[arg(long, default_value_t = BenchConfig::DEFAULT_REPS, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    reps: usize,
    #[arg(long, default_value_t = BenchConfig::DEFAULT_WARMUP)]
    warmup: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "csv")]
    format: TableFormat,
    /// Write the table here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_radix(s: &str) -> Result<Radix, String> {
    let value: usize = s.parse().map_err(|_| format!("invalid radix {s:?}"))?;
    Radix::try_from(value).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Bench(args) => bench(args).map(|()| true),
        Command::Verify { seed } => run_verify(seed, &mut io::stdout().lock()).map_err(Into::into),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn bench(args: BenchArgs) -> Result<()> {
    let config = BenchConfig {
        ops: args.op,
        radix: args.radix,
        shape: args.dims,
        reps: args.reps,
        warmup: args.warmup,
        seed: args.seed,
    };
    eprintln!(
        "# radix={} dims={} reps={} warmup={} seed={} timer=monotonic statistic=median",
        config.radix, config.shape, config.reps, config.warmup, config.seed
    );
    let records = run_bench(&config)?;
    let table = emit_table(&records, args.format)?;
    match args.out {
        Some(path) => {
            let mut file =
                File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            file.write_all(table.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => io::stdout().write_all(table.as_bytes())?,
    }
    Ok(())
}
