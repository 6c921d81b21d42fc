//! Median-of-repetitions timing of closed form against the oracle.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::closed_form::{self, SumFamily, SumSpec};
use crate::error::{Error, Result};
use crate::kernel::Index;
use crate::oracle::naive_power_sum;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub family: SumFamily,
    pub m: Index,
    pub n: Index,
    pub closed_form_time: Duration,
    pub oracle_time: Duration,
    /// `oracle_time / closed_form_time`
    pub speedup: f64,
    pub values_equal: bool,
}

pub fn bench(family: SumFamily, m: impl Into<Index>, n: impl Into<Index>, repetitions: usize) -> Result<BenchResult> {
    let spec = SumSpec::new(family, m, n)?;
    bench_with(&spec, repetitions, closed_form::closed_form)
}

/// Same as [`bench`] with the closed-form route supplied by the caller.
///
/// Refuses to report (returns [`Error::Inconsistent`]) if the two routes
/// disagree on any repetition.
pub fn bench_with<F>(spec: &SumSpec, repetitions: usize, closed: F) -> Result<BenchResult>
where
    F: Fn(&SumSpec) -> Result<BigInt>,
{
    if spec.n.get() < 1 {
        return Err(Error::Parameter(format!("bench needs n >= 1, got {}", spec.n)));
    }
    if repetitions == 0 {
        return Err(Error::Parameter("bench needs at least one repetition".into()));
    }

    let mut closed_times = Vec::with_capacity(repetitions);
    let mut oracle_times = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        let fast = closed(spec)?;
        closed_times.push(start.elapsed());

        let start = Instant::now();
        let slow = naive_power_sum(spec.family, spec.m, spec.n)?;
        oracle_times.push(start.elapsed());

        if fast != slow {
            return Err(Error::Inconsistent(format!(
                "{} at m = {}, n = {}: closed form {fast} != oracle {slow}",
                spec.family, spec.m, spec.n
            )));
        }
    }

    let closed_form_time = median(&mut closed_times);
    let oracle_time = median(&mut oracle_times);
    // Clamp so a sub-nanosecond closed form cannot divide by zero.
    let speedup = oracle_time.as_secs_f64() / closed_form_time.as_secs_f64().max(1e-9);
    Ok(BenchResult {
        family: spec.family,
        m: spec.m,
        n: spec.n,
        closed_form_time,
        oracle_time,
        speedup,
        values_equal: true,
    })
}

pub fn median(samples: &mut [Duration]) -> Duration {
    assert!(!samples.is_empty(), "median of no samples");
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}
