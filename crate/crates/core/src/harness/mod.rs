//! Named verification checks, grouped into suites, and the command line
//! front end.

mod checks;
pub mod cli;
mod manifest;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::Budget;
use crate::oracle::Oracle;

pub use checks::{registry, Check};
pub use manifest::MANIFEST;

/// A group of related checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    GammaCalculus,
    TypeA,
    TypeB,
    TypeD,
    Derangements,
    Bijections,
    SignedSums,
    QRefined,
    All,
}

impl Suite {
    pub const LISTED: [Suite; 9] = [
        Suite::GammaCalculus,
        Suite::TypeA,
        Suite::TypeB,
        Suite::TypeD,
        Suite::Derangements,
        Suite::Bijections,
        Suite::SignedSums,
        Suite::QRefined,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GammaCalculus => "gamma_calculus",
            Suite::TypeA => "typeA",
            Suite::TypeB => "typeB",
            Suite::TypeD => "typeD",
            Suite::Derangements => "derangements",
            Suite::Bijections => "bijections",
            Suite::SignedSums => "signed_sums",
            Suite::QRefined => "q_refined",
            Suite::All => "all",
        }
    }

    pub fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::LISTED
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite `{s}`")))
    }
}

/// Largest `n` enumerated per group kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Symmetric group: permutations, derangements, conjugacy classes.
    pub a: usize,
    /// Hyperoctahedral group.
    pub b: usize,
    /// Even-signed permutations.
    pub d: usize,
}

impl Limits {
    pub fn uniform(n: usize) -> Limits {
        Limits { a: n, b: n, d: n }
    }
}

impl Default for Limits {
    fn default() -> Limits {
        Limits { a: 8, b: 6, d: 6 }
    }
}

/// Context handed to every check.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub limits: Limits,
    pub oracle: Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A concrete disagreement, with both sides serialized.
    Fail {
        witness: String,
        left: String,
        right: String,
    },
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub claim: &'static str,
    /// Inclusive `n` range that was actually exercised, if any.
    pub n_range: Option<(usize, usize)>,
    pub status: Status,
    pub duration: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail { .. })
    }

    /// One report line, plus witness lines on failure.
    pub fn render(&self, timings: bool) -> String {
        let range = match self.n_range {
            Some((lo, hi)) if lo == hi => format!("n={lo}"),
            Some((lo, hi)) => format!("n={lo}..{hi}"),
            None => "n=none".into(),
        };
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail { .. } => "FAIL",
            Status::Skipped(_) => "SKIP",
        };
        let mut line = format!("{tag:<4}  {:<28} {range:<10} {}", self.id, self.claim);
        if timings {
            line.push_str(&format!(" [{} ms]", self.duration.as_millis()));
        }
        match &self.status {
            Status::Fail {
                witness,
                left,
                right,
            } => {
                line.push_str(&format!("\n      witness: {witness}"));
                if !left.is_empty() || !right.is_empty() {
                    line.push_str(&format!("\n      left:    {left}\n      right:   {right}"));
                }
            }
            Status::Skipped(reason) => line.push_str(&format!("\n      reason: {reason}")),
            Status::Pass => {}
        }
        line
    }
}

/// Runs every registered check in `suite`, in registry order. With
/// `jobs > 1` the checks run concurrently; the order of the results does
/// not depend on it.
pub fn run_suite(suite: Suite, limits: Limits, jobs: usize) -> Vec<CheckResult> {
    let oracle = Oracle {
        budget: Budget::DEFAULT,
        parallel: jobs > 1,
    };
    run_suite_with(suite, Ctx { limits, oracle }, jobs)
}

/// [`run_suite`] with explicit enumeration settings.
pub fn run_suite_with(suite: Suite, ctx: Ctx, jobs: usize) -> Vec<CheckResult> {
    let selected: Vec<&Check> = registry().iter().filter(|c| suite.includes(c.suite)).collect();
    let run = |c: &&Check| run_check(c, &ctx);
    if jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| selected.par_iter().map(run).collect()),
            Err(_) => selected.iter().map(run).collect(),
        }
    } else {
        selected.iter().map(run).collect()
    }
}

fn run_check(check: &Check, ctx: &Ctx) -> CheckResult {
    let start = Instant::now();
    let (n_range, status) = match (check.run)(ctx) {
        Ok(range) => (range, Status::Pass),
        Err(checks::Problem::Fail {
            witness,
            left,
            right,
        }) => (
            None,
            Status::Fail {
                witness,
                left,
                right,
            },
        ),
        Err(checks::Problem::Skip(reason)) => (None, Status::Skipped(reason)),
    };
    CheckResult {
        id: check.id,
        claim: check.claim,
        n_range,
        status,
        duration: start.elapsed(),
    }
}

/// `"<checks> checks: <p> passed, <f> failed, <s> skipped"`
pub fn summary(results: &[CheckResult]) -> String {
    let passed = results.iter().filter(|r| r.passed()).count();
    let failed = results.iter().filter(|r| r.failed()).count();
    let skipped = results.len() - passed - failed;
    format!(
        "{} checks: {passed} passed, {failed} failed, {skipped} skipped",
        results.len()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_matches_manifest() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids, MANIFEST.iter().map(|(id, _)| *id).collect::<Vec<_>>());
        for (check, (_, suite)) in registry().iter().zip(MANIFEST) {
            assert_eq!(check.suite.name(), *suite, "{}", check.id);
        }
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len(), "check ids must be unique");
    }

    #[test]
    fn every_suite_has_checks() {
        for suite in Suite::LISTED {
            assert!(registry().iter().any(|c| suite.includes(c.suite)), "{suite}");
        }
    }

    #[test]
    fn trivial_range_passes() {
        let results = run_suite(Suite::All, Limits::uniform(2), 1);
        for r in &results {
            assert!(r.passed(), "{}", r.render(false));
        }
    }

    #[test]
    fn suite_names_parse() {
        for suite in Suite::LISTED {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("typeZ".parse::<Suite>().is_err());
    }
}
