//! Seeded randomized verification of the descriptive-set invariants.
//!
//! Each suite draws fresh random instances per trial and records, per property, how
//! many trials exercised it, how many failed, and the first counterexample. Trials may
//! run in parallel; every trial has its own RNG derived from `(seed, suite, trial)` and
//! results are merged in trial order, so a report depends only on its options.

pub mod gen;
mod suites;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::setops::{DescriptiveOps, Indexed};

pub use suites::Suite;

/// Result of one property in one trial.
#[derive(Clone, Debug)]
pub(crate) enum Outcome {
    Pass,
    Fail(String),
    /// Precondition not met by this instance.
    Skip,
    /// Existence property: did this instance witness it?
    Witness(bool),
}

/// Observations from one trial.
#[derive(Debug, Default)]
pub(crate) struct Checks {
    obs: Vec<(&'static str, Outcome)>,
    instance: Option<serde_json::Value>,
}

impl Checks {
    pub(crate) fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let outcome = if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        };
        self.obs.push((name, outcome));
    }

    pub(crate) fn check_if(
        &mut self,
        name: &'static str,
        applies: bool,
        ok: impl FnOnce() -> bool,
        detail: impl FnOnce() -> String,
    ) {
        if applies {
            let ok = ok();
            self.check(name, ok, detail);
        } else {
            self.obs.push((name, Outcome::Skip));
        }
    }

    pub(crate) fn witness(&mut self, name: &'static str, found: bool) {
        self.obs.push((name, Outcome::Witness(found)));
    }

    /// Unwraps an operation result, recording an error as a failure of `name`.
    pub(crate) fn ok<T>(&mut self, name: &'static str, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.obs
                    .push((name, Outcome::Fail(format!("operation failed: {e}"))));
                None
            }
        }
    }

    pub(crate) fn instance(&mut self, v: serde_json::Value) {
        self.instance = Some(v);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub detail: String,
    pub instance: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    /// Trials in which the property applied.
    pub trials: usize,
    pub failures: usize,
    /// For existence properties: trials that produced a witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<usize>,
    pub first_counterexample: Option<Counterexample>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.witnesses != Some(0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
    /// Failed checks plus existence properties that never found a witness.
    pub total_failures: usize,
    pub passed: bool,
}

impl VerifyReport {
    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<Suite>,
    /// Worker threads; `0` lets rayon decide.
    pub threads: usize,
}

impl VerifyOptions {
    pub fn new(seed: u64, trials: usize) -> Self {
        VerifyOptions {
            seed,
            trials,
            suites: Suite::ALL.to_vec(),
            threads: 0,
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub(crate) fn trial_rng(seed: u64, suite: Suite, trial: usize) -> ChaCha8Rng {
    let s =
        splitmix64(seed ^ splitmix64(suite as u64 + 1) ^ splitmix64((trial as u64) << 8 | 0x5a));
    ChaCha8Rng::seed_from_u64(s)
}

fn merge(trial_checks: Vec<Checks>) -> Vec<PropertyReport> {
    let mut props: Vec<PropertyReport> = Vec::new();
    for (trial, checks) in trial_checks.into_iter().enumerate() {
        for (name, outcome) in checks.obs {
            let idx = match props.iter().position(|p| p.name == name) {
                Some(i) => i,
                None => {
                    props.push(PropertyReport {
                        name: name.to_owned(),
                        trials: 0,
                        failures: 0,
                        witnesses: None,
                        first_counterexample: None,
                    });
                    props.len() - 1
                }
            };
            let p = &mut props[idx];
            match outcome {
                Outcome::Skip => {}
                Outcome::Pass => p.trials += 1,
                Outcome::Witness(found) => {
                    p.trials += 1;
                    *p.witnesses.get_or_insert(0) += usize::from(found);
                }
                Outcome::Fail(detail) => {
                    p.trials += 1;
                    p.failures += 1;
                    if p.first_counterexample.is_none() {
                        p.first_counterexample = Some(Counterexample {
                            trial,
                            detail,
                            instance: checks.instance.clone().unwrap_or(serde_json::Value::Null),
                        });
                    }
                }
            }
        }
    }
    props
}

/// Runs the selected suites against `ops`.
pub fn run_with(opts: &VerifyOptions, ops: &dyn DescriptiveOps) -> VerifyReport {
    let body = || {
        opts.suites
            .iter()
            .map(|&suite| {
                let checks: Vec<Checks> = (0..opts.trials)
                    .into_par_iter()
                    .map(|t| {
                        let mut rng = trial_rng(opts.seed, suite, t);
                        suite.run_trial(&mut rng, ops)
                    })
                    .collect();
                SuiteReport {
                    name: suite.name().to_owned(),
                    properties: merge(checks),
                }
            })
            .collect::<Vec<_>>()
    };
    let suites = if opts.threads > 0 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
        {
            Ok(pool) => pool.install(body),
            Err(_) => body(),
        }
    } else {
        body()
    };

    let total_failures = suites
        .iter()
        .flat_map(|s| &s.properties)
        .map(|p| p.failures + usize::from(p.witnesses == Some(0)))
        .sum();
    VerifyReport {
        seed: opts.seed,
        trials: opts.trials,
        suites,
        total_failures,
        passed: total_failures == 0,
    }
}

/// Runs the selected suites against the indexed implementation.
pub fn run(opts: &VerifyOptions) -> VerifyReport {
    run_with(opts, &Indexed)
}
