//! Shared fixtures for the criterion benches.

use pafft::{filter_from_impulse, prepare_filter, ComplexBuffer, Plan, PreparedFilter, Radix};
use pafft_cli::bench_inputs;

/// 1D sizes swept by the benches, chosen to be powers of every radix.
pub const SIZES: [usize; 3] = [1 << 6, 1 << 12, 1 << 18];

/// A plan with its seeded signal, filter spectrum and prepared filter.
pub struct Fixture {
    pub plan: Plan,
    pub signal: ComplexBuffer,
    pub spectrum: ComplexBuffer,
    pub prepared: PreparedFilter,
}

impl Fixture {
    pub fn new(radix: Radix, n: usize) -> Self {
        let plan = Plan::new_1d(radix, n).expect("bench sizes are radix powers");
        let (signal, impulse) = bench_inputs(n, 0);
        let spectrum = filter_from_impulse(&impulse, &plan).expect("sizes match");
        let prepared = prepare_filter(&spectrum, &plan).expect("sizes match");
        Self {
            plan,
            signal,
            spectrum,
            prepared,
        }
    }
}
