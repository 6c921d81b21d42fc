//! Grid sweeps: closed form against the oracle for every `(family, m, n)`,
//! and both sides of every identity over an argument grid.
//!
//! Points are evaluated in parallel. Failures are collected, never
//! short-circuited, and sorted so that a report depends only on its grid.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{self, DivisionSite, SumFamily, SumSpec};
use crate::error::{Error, Result};
use crate::identities::{eval_identity, IdentityId};
use crate::kernel::Index;
use crate::oracle::naive_power_sum;

/// Inclusive interval of indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRange {
    pub min: i64,
    pub max: i64,
}

impl IndexRange {
    pub fn new(min: i64, max: i64) -> Self {
        IndexRange { min, max }
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.max - self.min + 1) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.max < self.min
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + Clone {
        self.min..=self.max
    }

    fn validate(&self, what: &str) -> Result<()> {
        if self.is_empty() {
            return Err(Error::Parameter(format!(
                "{what} range [{}, {}] is empty",
                self.min, self.max
            )));
        }
        Index::new(self.min)?;
        Index::new(self.max)?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub families: BTreeSet<SumFamily>,
    pub m_range: IndexRange,
    pub n_range: IndexRange,
    pub include_identities: bool,
    pub identity_arg_range: IndexRange,
}

impl GridSpec {
    /// The full sweep: all families, `m` in `[-6, 6]`, `n` in `[0, 12]`, and
    /// identities on `[-30, 30]`.
    pub fn standard() -> Self {
        GridSpec {
            families: SumFamily::ALL.into_iter().collect(),
            m_range: IndexRange::new(-6, 6),
            n_range: IndexRange::new(0, 12),
            include_identities: true,
            identity_arg_range: IndexRange::new(-30, 30),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.families.is_empty() && !self.include_identities {
            return Err(Error::Parameter("grid selects neither families nor identities".into()));
        }
        self.m_range.validate("m")?;
        self.n_range.validate("n")?;
        if self.n_range.min < 0 {
            return Err(Error::Parameter(format!(
                "n range must start at 0 or above, got {}",
                self.n_range.min
            )));
        }
        if self.include_identities {
            self.identity_arg_range.validate("identity argument")?;
        }
        Ok(())
    }

    /// Number of points `run_grid` evaluates.
    pub fn case_count(&self) -> usize {
        let mut count = 0;
        let n_len = self.n_range.len();
        for family in &self.families {
            let m_len = self
                .m_range
                .iter()
                .filter(|&m| !(m == 0 && family.requires_nonzero_m()))
                .count();
            count += m_len * n_len;
        }
        if self.include_identities {
            let r = self.identity_arg_range.len();
            for id in IdentityId::ALL {
                count += r.pow(id.arity() as u32);
            }
        }
        count
    }
}

/// What a report record is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    Family(SumFamily),
    Identity(IdentityId),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Family(family) => family.fmt(f),
            Subject::Identity(id) => id.fmt(f),
        }
    }
}

/// A disagreement. For identities, `closed` is the left side and `oracle` the
/// right side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub subject: Subject,
    pub args: Vec<i64>,
    pub closed: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisibilityFailure {
    pub site: DivisionSite,
    pub family: SumFamily,
    pub args: Vec<i64>,
    pub remainder: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub cases_run: usize,
    pub mismatches: Vec<Mismatch>,
    pub divisibility_failures: Vec<DivisibilityFailure>,
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn success(&self) -> bool {
        self.mismatches.is_empty() && self.divisibility_failures.is_empty()
    }

    /// Equality ignoring the timing field.
    pub fn same_outcome(&self, other: &VerifyReport) -> bool {
        self.cases_run == other.cases_run
            && self.mismatches == other.mismatches
            && self.divisibility_failures == other.divisibility_failures
    }
}

enum Outcome {
    Pass,
    Mismatch(Mismatch),
    Divisibility(DivisibilityFailure),
}

/// Runs the grid with the library's closed forms.
pub fn run_grid(spec: &GridSpec) -> Result<VerifyReport> {
    run_grid_with(spec, closed_form::closed_form)
}

/// Runs the grid with a caller-supplied closed-form evaluator in place of the
/// library's. Used to check that the detector actually detects.
pub fn run_grid_with<F>(spec: &GridSpec, closed: F) -> Result<VerifyReport>
where
    F: Fn(&SumSpec) -> Result<BigInt> + Sync,
{
    spec.validate()?;
    let start = Instant::now();

    let mut sums = Vec::new();
    for &family in &spec.families {
        for m in spec.m_range.iter() {
            if m == 0 && family.requires_nonzero_m() {
                continue;
            }
            for n in spec.n_range.iter() {
                sums.push(SumSpec::new(family, Index::new(m)?, Index::new(n)?)?);
            }
        }
    }

    let mut identity_cases = Vec::new();
    if spec.include_identities {
        let range = spec.identity_arg_range;
        for id in IdentityId::ALL {
            if id.arity() == 2 {
                for u in range.iter() {
                    for v in range.iter() {
                        identity_cases.push((id, vec![u, v]));
                    }
                }
            } else {
                identity_cases.extend(range.iter().map(|u| (id, vec![u])));
            }
        }
    }

    let mut outcomes: Vec<Outcome> = sums.par_iter().map(|s| check_sum(s, &closed)).collect();
    outcomes.par_extend(
        identity_cases
            .par_iter()
            .map(|(id, args)| check_identity(*id, args)),
    );

    let cases_run = outcomes.len();
    let mut mismatches = Vec::new();
    let mut divisibility_failures = Vec::new();
    for outcome in outcomes {
        match outcome {
            Outcome::Pass => {}
            Outcome::Mismatch(m) => mismatches.push(m),
            Outcome::Divisibility(d) => divisibility_failures.push(d),
        }
    }
    mismatches.sort();
    divisibility_failures.sort();

    Ok(VerifyReport {
        cases_run,
        mismatches,
        divisibility_failures,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn check_sum<F>(spec: &SumSpec, closed: &F) -> Outcome
where
    F: Fn(&SumSpec) -> Result<BigInt>,
{
    let args = vec![spec.m.get(), spec.n.get()];
    let oracle = match naive_power_sum(spec.family, spec.m, spec.n) {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    };
    match closed(spec) {
        Ok(value) => {
            let value = value.to_string();
            if value == oracle {
                Outcome::Pass
            } else {
                Outcome::Mismatch(Mismatch { subject: Subject::Family(spec.family), args, closed: value, oracle })
            }
        }
        Err(Error::InexactDivision { site, remainder, .. }) => Outcome::Divisibility(DivisibilityFailure {
            site,
            family: spec.family,
            args,
            remainder,
        }),
        Err(e) => Outcome::Mismatch(Mismatch {
            subject: Subject::Family(spec.family),
            args,
            closed: format!("error: {e}"),
            oracle,
        }),
    }
}

fn check_identity(id: IdentityId, args: &[i64]) -> Outcome {
    let subject = Subject::Identity(id);
    let indices: Result<Vec<Index>> = args.iter().map(|&a| Index::new(a)).collect();
    match indices.and_then(|ix| eval_identity(id, &ix)) {
        Ok(inst) if inst.holds() => Outcome::Pass,
        Ok(inst) => Outcome::Mismatch(Mismatch {
            subject,
            args: args.to_vec(),
            closed: inst.lhs.to_string(),
            oracle: inst.rhs.to_string(),
        }),
        Err(e) => Outcome::Mismatch(Mismatch {
            subject,
            args: args.to_vec(),
            closed: format!("error: {e}"),
            oracle: String::new(),
        }),
    }
}
