use std::ops::Range;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::check::{CheckReport, SweepStats};
use super::VerifyError;
use crate::families::DEFAULT_ENUMERATION_CAP;

/// Resource limits for enumerations and sweeps.
#[derive(Debug, Clone)]
pub struct Budget {
    pub deadline: Option<Instant>,
    /// Largest lex prefix any check will materialize.
    pub enumeration_cap: usize,
    /// Largest `m` for checks that visit all `2^m` subsets of a prefix.
    pub max_subset_bits: u32,
    /// Largest scalar range (`n_max`, `a_max`) a sweep will walk.
    pub max_range: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            deadline: None,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            max_subset_bits: 24,
            max_range: 5_000_000,
        }
    }
}

impl Budget {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn check(&self) -> Result<(), VerifyError> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(VerifyError::Budget("time limit reached".into())),
            _ => Ok(()),
        }
    }

    pub(crate) fn range(&self, name: &str, bound: &BigUint) -> Result<u64, VerifyError> {
        bound
            .to_u64()
            .filter(|&b| b <= self.max_range)
            .ok_or_else(|| {
                VerifyError::Budget(format!(
                    "{name} = {bound} exceeds sweep limit {}",
                    self.max_range
                ))
            })
    }

    pub(crate) fn subset_bits(&self, m: u32) -> Result<(), VerifyError> {
        if m > self.max_subset_bits {
            return Err(VerifyError::Budget(format!(
                "2^{m} subsets exceeds the limit of 2^{}",
                self.max_subset_bits
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub jobs: usize,
    pub budget: Budget,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: 1,
            budget: Budget::default(),
        }
    }
}

impl SweepOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        SweepOptions {
            jobs: jobs.max(1),
            ..Default::default()
        }
    }
}

/// Running counts plus the first failure seen in parameter order.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub stats: SweepStats,
    pub failure: Option<CheckReport>,
}

impl Tally {
    pub fn observe(&mut self, holds: bool, equal: bool, on_fail: impl FnOnce() -> CheckReport) {
        self.stats.checked += 1;
        if !holds {
            self.stats.failed += 1;
            if self.failure.is_none() {
                self.failure = Some(on_fail());
            }
        } else if equal {
            self.stats.equal += 1;
        } else {
            self.stats.strict += 1;
        }
    }

    pub fn observe_report(&mut self, report: CheckReport) {
        let (holds, equal) = (report.holds, report.equality);
        self.observe(holds, equal, || report);
    }

    /// `later` must cover parameters after ours.
    pub fn merge(mut self, later: Tally) -> Tally {
        self.stats.checked += later.stats.checked;
        self.stats.equal += later.stats.equal;
        self.stats.strict += later.stats.strict;
        self.stats.failed += later.stats.failed;
        if self.failure.is_none() {
            self.failure = later.failure;
        }
        self
    }
}

const MAX_CHUNK: u64 = 1 << 14;

/// Folds `step` over `range` in chunks on `opts.jobs` workers. Chunk
/// results are merged strictly in range order, so the outcome is the same
/// for any worker count.
pub(crate) fn fold_range<A, I, S, M>(
    opts: &SweepOptions,
    range: Range<u64>,
    init: I,
    step: S,
    merge: M,
) -> Result<A, VerifyError>
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, u64) + Sync,
    M: Fn(A, A) -> A,
{
    let len = range.end.saturating_sub(range.start);
    let jobs = opts.jobs.max(1) as u64;
    let chunk = (len / (jobs * 16)).clamp(1, MAX_CHUNK);
    let starts: Vec<u64> = (range.start..range.end).step_by(chunk as usize).collect();
    let run = |&start: &u64| -> Result<A, VerifyError> {
        opts.budget.check()?;
        let mut acc = init();
        for x in start..(start + chunk).min(range.end) {
            step(&mut acc, x);
        }
        Ok(acc)
    };
    let parts: Vec<A> = if jobs == 1 {
        starts.iter().map(run).collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .map_err(|e| VerifyError::Budget(format!("cannot start worker pool: {e}")))?;
        pool.install(|| starts.par_iter().map(run).collect::<Result<_, _>>())?
    };
    Ok(parts.into_iter().fold(init(), merge))
}

/// Evaluates `f` on every point of `range`, in order.
pub(crate) fn map_range<T, F>(
    opts: &SweepOptions,
    range: Range<u64>,
    f: F,
) -> Result<Vec<T>, VerifyError>
where
    T: Send,
    F: Fn(u64) -> T + Sync,
{
    fold_range(
        opts,
        range,
        Vec::new,
        |acc, x| acc.push(f(x)),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}
