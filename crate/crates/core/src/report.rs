//! JSON and CSV renderings of suite reports.

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::identities::{EvalPoint, Field};
use crate::numerics::{Complex, PrecisionPolicy};
use crate::verifier::{IdentityRow, SuiteReport, VerificationResult};

/// Fields of the `meta` object that change between identical runs.
pub const VOLATILE_META: [&str; 2] = ["timestamp", "wall_time_s"];

/// A real with 17 significant digits; zero prints as `0`.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let e: i32 = sci
        .split('e')
        .nth(1)
        .and_then(|t| t.parse().ok())
        .unwrap_or(0);
    if (-5..17).contains(&e) {
        format!("{:.*}", (16 - e) as usize, x)
    } else {
        sci
    }
}

struct Sig17(f64);

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(fmt17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

struct C17(Complex);

impl Serialize for C17 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [Sig17(self.0.re), Sig17(self.0.im)].serialize(s)
    }
}

struct PointJson<'a>(&'a EvalPoint);

impl Serialize for PointJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        for f in self.0.present() {
            if f == Field::N {
                m.serialize_entry("n", &self.0.n)?;
            } else {
                m.serialize_entry(f.name(), &C17(self.0.get(f).unwrap()))?;
            }
        }
        m.end()
    }
}

#[derive(serde::Serialize)]
struct PolicyJson {
    rel_tol: Sig17,
    abs_tol: Sig17,
    max_terms: usize,
    diff_step: Sig17,
}

impl From<&PrecisionPolicy> for PolicyJson {
    fn from(p: &PrecisionPolicy) -> Self {
        PolicyJson {
            rel_tol: Sig17(p.rel_tol),
            abs_tol: Sig17(p.abs_tol),
            max_terms: p.max_terms,
            diff_step: Sig17(p.diff_step),
        }
    }
}

#[derive(serde::Serialize)]
struct Meta {
    tool: &'static str,
    seed: Option<u64>,
    policy: PolicyJson,
    timestamp: u64,
    wall_time_s: Sig17,
}

#[derive(serde::Serialize)]
struct TrendJson {
    errors: Vec<Sig17>,
    monotone: bool,
}

#[derive(serde::Serialize)]
struct ResultJson<'a> {
    index: usize,
    point: PointJson<'a>,
    lhs: Option<C17>,
    rhs: Option<C17>,
    abs_err: Sig17,
    rel_err: Sig17,
    cond: Sig17,
    metric: Sig17,
    pass: bool,
    outcome: crate::verifier::Outcome,
    branch_integer: Option<i64>,
    trend: Option<TrendJson>,
    error: Option<&'a str>,
}

impl<'a> From<&'a VerificationResult> for ResultJson<'a> {
    fn from(r: &'a VerificationResult) -> Self {
        ResultJson {
            index: r.index,
            point: PointJson(&r.point),
            lhs: r.lhs.map(C17),
            rhs: r.rhs.map(C17),
            abs_err: Sig17(r.abs_err),
            rel_err: Sig17(r.rel_err),
            cond: Sig17(r.cond),
            metric: Sig17(r.metric),
            pass: r.pass,
            outcome: r.outcome,
            branch_integer: r.branch_integer,
            trend: r.trend.as_ref().map(|t| TrendJson {
                errors: t.errors.iter().copied().map(Sig17).collect(),
                monotone: t.monotone,
            }),
            error: r.error.as_deref(),
        }
    }
}

#[derive(serde::Serialize)]
struct RowJson<'a> {
    id: &'a str,
    title: &'a str,
    mode: crate::identities::CompareMode,
    tol: Sig17,
    seed: u64,
    region: &'a str,
    count: usize,
    passed: usize,
    violated: usize,
    evaluation_failed: usize,
    pass_rate: Sig17,
    worst_rel_err: Sig17,
    worst_metric: Sig17,
    points: Vec<ResultJson<'a>>,
}

impl<'a> From<&'a IdentityRow> for RowJson<'a> {
    fn from(r: &'a IdentityRow) -> Self {
        RowJson {
            id: &r.id,
            title: &r.title,
            mode: r.mode,
            tol: Sig17(r.tol),
            seed: r.seed,
            region: &r.region,
            count: r.points,
            passed: r.passed,
            violated: r.violated,
            evaluation_failed: r.failed,
            pass_rate: Sig17(r.pass_rate()),
            worst_rel_err: Sig17(r.worst_rel_err),
            worst_metric: Sig17(r.worst_metric),
            points: r.results.iter().map(ResultJson::from).collect(),
        }
    }
}

#[derive(serde::Serialize)]
struct ReportJson<'a> {
    meta: Meta,
    identities: Vec<RowJson<'a>>,
}

/// Seconds since the Unix epoch.
pub fn now_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

pub fn to_json(report: &SuiteReport, seed: Option<u64>, timestamp: u64) -> Result<String> {
    let doc = ReportJson {
        meta: Meta {
            tool: concat!("hlzeta ", env!("CARGO_PKG_VERSION")),
            seed,
            policy: (&report.policy).into(),
            timestamp,
            wall_time_s: Sig17(report.wall_time_s),
        },
        identities: report.rows.iter().map(RowJson::from).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// `json` with the volatile meta fields removed.
pub fn stable_content(json: &str) -> Result<serde_json::Value> {
    let mut v: serde_json::Value =
        serde_json::from_str(json).map_err(|e| Error::Io(e.to_string()))?;
    if let Some(meta) = v.get_mut("meta").and_then(|m| m.as_object_mut()) {
        for k in VOLATILE_META {
            meta.remove(k);
        }
    }
    Ok(v)
}

const CSV_FIELDS: [Field; 7] = [
    Field::A,
    Field::M,
    Field::K,
    Field::X,
    Field::R,
    Field::Z,
    Field::S,
];

pub fn to_csv(report: &SuiteReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = ["identity_id", "index", "mode", "tol", "n"]
        .map(String::from)
        .to_vec();
    for f in CSV_FIELDS {
        header.push(format!("{}_re", f.name()));
        header.push(format!("{}_im", f.name()));
    }
    header.extend(
        [
            "lhs_re",
            "lhs_im",
            "rhs_re",
            "rhs_im",
            "abs_err",
            "rel_err",
            "cond",
            "metric",
            "pass",
            "outcome",
            "branch_integer",
            "error",
        ]
        .map(String::from),
    );
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(&header).map_err(csv_err)?;
    let num = |x: f64| {
        if x.is_finite() {
            fmt17(x)
        } else {
            String::new()
        }
    };
    let cplx = |z: Option<Complex>| match z {
        Some(z) => [num(z.re), num(z.im)],
        None => [String::new(), String::new()],
    };
    for row in &report.rows {
        for r in &row.results {
            let mut rec = vec![
                r.identity_id.clone(),
                r.index.to_string(),
                r.mode.to_string(),
                fmt17(r.tol),
                r.point.n.map(|n| n.to_string()).unwrap_or_default(),
            ];
            for f in CSV_FIELDS {
                rec.extend(cplx(r.point.get(f)));
            }
            rec.extend(cplx(r.lhs));
            rec.extend(cplx(r.rhs));
            rec.extend([num(r.abs_err), num(r.rel_err), num(r.cond), num(r.metric)]);
            rec.push(r.pass.to_string());
            rec.push(
                match r.outcome {
                    crate::verifier::Outcome::Pass => "pass",
                    crate::verifier::Outcome::Violated => "violated",
                    crate::verifier::Outcome::EvaluationFailed => "evaluation_failed",
                }
                .into(),
            );
            rec.push(r.branch_integer.map(|k| k.to_string()).unwrap_or_default());
            rec.push(r.error.clone().unwrap_or_default());
            w.write_record(&rec).map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}
