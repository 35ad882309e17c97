use std::collections::BTreeMap;
use std::time::Instant;

use super::{check_tol, verify_identity, Outcome, SampleStrategy, VerificationResult};
use crate::error::{Error, Result};
use crate::identities::{list_identities, CompareMode, IdentitySpec};
use crate::numerics::PrecisionPolicy;

/// Replacement sampling strategy and/or tolerance for one identity.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Override {
    pub strategy: Option<SampleStrategy>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRow {
    pub id: String,
    pub title: String,
    pub mode: CompareMode,
    pub tol: f64,
    pub points: usize,
    pub passed: usize,
    pub violated: usize,
    pub failed: usize,
    pub worst_rel_err: f64,
    pub worst_metric: f64,
    pub region: String,
    pub seed: u64,
    pub results: Vec<VerificationResult>,
}

impl IdentityRow {
    pub fn all_passed(&self) -> bool {
        self.passed == self.points
    }

    pub fn pass_rate(&self) -> f64 {
        if self.points == 0 {
            1.0
        } else {
            self.passed as f64 / self.points as f64
        }
    }

    fn build(
        spec: &IdentitySpec,
        strategy: &SampleStrategy,
        tol: f64,
        results: Vec<VerificationResult>,
    ) -> Self {
        let count = |o: Outcome| results.iter().filter(|r| r.outcome == o).count();
        let worst = |f: fn(&VerificationResult) -> f64| results.iter().map(f).fold(0.0, f64::max);
        IdentityRow {
            id: spec.id.to_string(),
            title: spec.title.to_string(),
            mode: spec.compare_mode,
            tol,
            points: results.len(),
            passed: count(Outcome::Pass),
            violated: count(Outcome::Violated),
            failed: count(Outcome::EvaluationFailed),
            worst_rel_err: worst(|r| r.rel_err),
            worst_metric: worst(|r| r.metric),
            region: strategy.region.to_string(),
            seed: strategy.seed,
            results,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub policy: PrecisionPolicy,
    pub rows: Vec<IdentityRow>,
    pub wall_time_s: f64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(IdentityRow::all_passed)
    }
}

/// Every registry entry with default strategies, adjusted by `overrides`.
pub fn run_suite(
    policy: &PrecisionPolicy,
    overrides: &BTreeMap<String, Override>,
) -> Result<SuiteReport> {
    run_suite_on(&list_identities(), policy, overrides)
}

/// Like [`run_suite`] over an explicit list of entries.
pub fn run_suite_on(
    specs: &[IdentitySpec],
    policy: &PrecisionPolicy,
    overrides: &BTreeMap<String, Override>,
) -> Result<SuiteReport> {
    policy.validate()?;
    for (id, o) in overrides {
        if !specs.iter().any(|s| s.id == id) {
            return Err(Error::UnknownIdentity(id.clone()));
        }
        if let Some(t) = o.tol {
            check_tol(t)?;
        }
    }
    let mut plans = Vec::with_capacity(specs.len());
    for spec in specs {
        let o = overrides.get(spec.id);
        let strategy = match o.and_then(|o| o.strategy.clone()) {
            Some(s) => s,
            None => SampleStrategy::default_for(spec)?,
        };
        let tol = o.and_then(|o| o.tol).unwrap_or(spec.default_tol);
        plans.push((spec, strategy, tol));
    }
    let start = Instant::now();
    let mut rows = Vec::with_capacity(plans.len());
    for (spec, strategy, tol) in plans {
        let results = verify_identity(spec, &strategy, policy, tol)?;
        rows.push(IdentityRow::build(spec, &strategy, tol, results));
    }
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteReport {
        policy: *policy,
        rows,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}
