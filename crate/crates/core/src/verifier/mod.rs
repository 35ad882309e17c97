//! Seeded sampling of parameter points, side-by-side evaluation and
//! cancellation-aware comparison.

mod regions;
mod suite;

pub use regions::{default_region, Draw, Region};
pub use suite::{run_suite, run_suite_on, IdentityRow, Override, SuiteReport};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result, SideTag};
use crate::identities::{CompareMode, EvalPoint, IdentitySpec, NIELSEN_PROBE_N};
use crate::numerics::{Complex, PrecisionPolicy, PI};
use crate::oracle::limit_probe;

pub const DEFAULT_SEED: u64 = 20240601;
pub const DEFAULT_COUNT: usize = 100;
pub const DEFAULT_POLE_MARGIN: f64 = 0.05;
/// Rejected draws allowed in a row before sampling gives up.
pub const MAX_REJECTIONS: usize = 1000;
/// First truncation order used by the trend comparison.
pub const TREND_START: u32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct SampleStrategy {
    pub seed: u64,
    pub count: usize,
    pub region: Region,
    pub pole_margin: f64,
}

impl SampleStrategy {
    pub fn new(seed: u64, count: usize, region: Region, pole_margin: f64) -> Result<Self> {
        if count < 1 {
            return Err(Error::Config("count must be >= 1".into()));
        }
        if !(pole_margin > 0.0 && pole_margin.is_finite()) {
            return Err(Error::Config(format!(
                "pole_margin must be > 0, got {pole_margin}"
            )));
        }
        for (_, d) in &region.fields {
            d.validate()?;
        }
        Ok(SampleStrategy {
            seed,
            count,
            region,
            pole_margin,
        })
    }

    /// Like `new`, and also checks the region against `spec`'s schema.
    pub fn for_spec(
        spec: &IdentitySpec,
        seed: u64,
        count: usize,
        region: Region,
        pole_margin: f64,
    ) -> Result<Self> {
        region.validate_for(spec.schema)?;
        Self::new(seed, count, region, pole_margin)
    }

    /// A strategy that yields no points.
    pub fn empty() -> Self {
        SampleStrategy {
            seed: DEFAULT_SEED,
            count: 0,
            region: Region::new(None, Vec::new()),
            pole_margin: DEFAULT_POLE_MARGIN,
        }
    }

    pub fn default_for(spec: &IdentitySpec) -> Result<Self> {
        Self::for_spec(
            spec,
            DEFAULT_SEED,
            DEFAULT_COUNT,
            default_region(spec.id)?,
            DEFAULT_POLE_MARGIN,
        )
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_count(mut self, count: usize) -> Result<Self> {
        if count < 1 {
            return Err(Error::Config("count must be >= 1".into()));
        }
        self.count = count;
        Ok(self)
    }
}

/// `strategy.count` points satisfying the constraints of `spec`.
pub fn sample_points(spec: &IdentitySpec, strategy: &SampleStrategy) -> Result<Vec<EvalPoint>> {
    if strategy.count == 0 {
        return Ok(Vec::new());
    }
    strategy.region.validate_for(spec.schema)?;
    let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
    let mut out = Vec::with_capacity(strategy.count);
    while out.len() < strategy.count {
        let mut rejected = 0;
        loop {
            let pt = draw_point(&strategy.region, &mut rng);
            if spec.check_point(&pt, strategy.pole_margin).is_ok() {
                out.push(pt);
                break;
            }
            rejected += 1;
            if rejected >= MAX_REJECTIONS {
                return Err(Error::Exhausted {
                    id: spec.id.to_string(),
                    attempts: rejected,
                });
            }
        }
    }
    Ok(out)
}

fn draw_point(region: &Region, rng: &mut ChaCha8Rng) -> EvalPoint {
    let mut pt = EvalPoint::new();
    let mut n = 0;
    if let Some((lo, hi)) = region.n {
        n = rng.gen_range(lo..=hi);
        pt = pt.with_n(n);
    }
    for (f, d) in &region.fields {
        pt = pt.with(*f, d.sample(rng, n));
    }
    pt
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Violated,
    EvaluationFailed,
}

/// Truncation errors of a limit-type entry at n = TREND_START..=NIELSEN_PROBE_N.
#[derive(Debug, Clone, PartialEq)]
pub struct Trend {
    pub errors: Vec<f64>,
    pub monotone: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationResult {
    pub identity_id: String,
    pub index: usize,
    pub point: EvalPoint,
    pub lhs: Option<Complex>,
    pub rhs: Option<Complex>,
    pub abs_err: f64,
    pub rel_err: f64,
    pub cond: f64,
    /// The quantity compared against tol * cond under `mode`.
    pub metric: f64,
    pub tol: f64,
    pub pass: bool,
    pub mode: CompareMode,
    pub branch_integer: Option<i64>,
    pub trend: Option<Trend>,
    pub outcome: Outcome,
    pub error: Option<String>,
}

impl VerificationResult {
    fn failed(spec: &IdentitySpec, index: usize, point: EvalPoint, tol: f64, e: &Error) -> Self {
        VerificationResult {
            identity_id: spec.id.to_string(),
            index,
            point,
            lhs: None,
            rhs: None,
            abs_err: f64::INFINITY,
            rel_err: f64::INFINITY,
            cond: 1.0,
            metric: f64::INFINITY,
            tol,
            pass: false,
            mode: spec.compare_mode,
            branch_integer: None,
            trend: None,
            outcome: Outcome::EvaluationFailed,
            error: Some(e.to_string()),
        }
    }
}

/// Compares both sides of `spec` at one point.
pub fn verify_point(
    spec: &IdentitySpec,
    index: usize,
    point: &EvalPoint,
    policy: &PrecisionPolicy,
    tol: f64,
) -> VerificationResult {
    match compare(spec, index, point, policy, tol) {
        Ok(r) => r,
        Err(e) => VerificationResult::failed(spec, index, *point, tol, &e),
    }
}

fn compare(
    spec: &IdentitySpec,
    index: usize,
    point: &EvalPoint,
    policy: &PrecisionPolicy,
    tol: f64,
) -> Result<VerificationResult> {
    let (ls, rs) = spec.evaluate(point, policy)?;
    let l = ls.value(SideTag::Lhs)?;
    let r = rs.value(SideTag::Rhs)?;
    let floor = policy.abs_tol;
    let abs_err = (l - r).norm();
    let scale = l.norm().max(r.norm()).max(floor);
    let rel_err = abs_err / scale;
    let cond = ls.cond(scale).max(rs.cond(scale)).max(1.0);

    let mut branch_integer = None;
    let mut trend = None;
    let mut extra_ok = true;
    let metric = match spec.compare_mode {
        CompareMode::Relative => rel_err,
        CompareMode::Absolute => abs_err,
        CompareMode::ExpEquality => {
            let (el, er) = (l.exp(), r.exp());
            (el - er).norm() / el.norm().max(er.norm()).max(floor)
        }
        CompareMode::Mod2PiI => {
            let k = ((l - r).im / (2.0 * PI)).round();
            branch_integer = Some(k as i64);
            (l - r - Complex::new(0.0, 2.0 * PI * k)).norm() / scale
        }
        CompareMode::Trend => {
            let probe = limit_probe(
                |n| {
                    spec.truncated_lhs(point, n).unwrap_or_else(|| {
                        Err(Error::Config(format!("{} has no truncated form", spec.id)))
                    })
                },
                NIELSEN_PROBE_N,
            )?;
            let errors: Vec<f64> = probe.errors_against(r)[(TREND_START - 1) as usize..]
                .iter()
                .map(|e| e / r.norm().max(floor))
                .collect();
            let monotone = errors.windows(2).all(|w| w[1] < w[0]);
            extra_ok = monotone;
            trend = Some(Trend { errors, monotone });
            rel_err
        }
    };
    let pass = extra_ok && metric <= tol * cond;
    Ok(VerificationResult {
        identity_id: spec.id.to_string(),
        index,
        point: *point,
        lhs: Some(l),
        rhs: Some(r),
        abs_err,
        rel_err,
        cond,
        metric,
        tol,
        pass,
        mode: spec.compare_mode,
        branch_integer,
        trend,
        outcome: if pass {
            Outcome::Pass
        } else {
            Outcome::Violated
        },
        error: None,
    })
}

/// One result per sampled point, in sampling order. Points are evaluated in
/// parallel on the current rayon pool.
pub fn verify_identity(
    spec: &IdentitySpec,
    strategy: &SampleStrategy,
    policy: &PrecisionPolicy,
    tol: f64,
) -> Result<Vec<VerificationResult>> {
    check_tol(tol)?;
    policy.validate()?;
    let points = sample_points(spec, strategy)?;
    Ok(points
        .par_iter()
        .enumerate()
        .map(|(i, pt)| verify_point(spec, i, pt, policy, tol))
        .collect())
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("tolerance must be > 0, got {tol}")))
    }
}

#[cfg(test)]
mod tests;
