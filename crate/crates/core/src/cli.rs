//! Command-line front end: `hlzeta eval | verify | suite`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::identities::{find_identity, list_identities, CompareMode, IdentitySpec};
use crate::numerics::{Complex, PrecisionPolicy};
use crate::report::{fmt17, now_timestamp, to_csv, to_json};
use crate::special::{
    digamma, harmonic, hurwitz_zeta, lerch_phi, lerch_phi_integral, log_gamma, polylog,
    stieltjes_gamma1, LerchParams,
};
use crate::verifier::{run_suite_on, Override, SampleStrategy, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hlzeta",
    version,
    about = "Hurwitz-Lerch zeta engine and identity verifier"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate one special function and print `re<TAB>im`.
    Eval(EvalArgs),
    /// Verify one identity on sampled points.
    Verify(VerifyArgs),
    /// Verify every identity (or a filtered subset).
    Suite(SuiteArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Function {
    Phi,
    PhiIntegral,
    Zeta,
    Polylog,
    Loggamma,
    Digamma,
    Harmonic,
    Stieltjes1,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Args, Debug, Clone)]
struct PolicyArgs {
    /// Target relative error of series and quadrature.
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,
    /// Magnitude floor used in relative errors.
    #[arg(long, default_value_t = 1e-12)]
    abs_tol: f64,
    #[arg(long, default_value_t = 1_000_000)]
    max_terms: usize,
    #[arg(long, default_value_t = 1e-3)]
    diff_step: f64,
}

impl PolicyArgs {
    fn policy(&self) -> Result<PrecisionPolicy> {
        PrecisionPolicy::new(self.rel_tol, self.abs_tol, self.max_terms, self.diff_step)
    }
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(value_enum)]
    function: Function,
    #[arg(long, num_args = 1..=2, value_names = ["RE", "IM"], allow_negative_numbers = true)]
    z: Option<Vec<f64>>,
    #[arg(long, num_args = 1..=2, value_names = ["RE", "IM"], allow_negative_numbers = true)]
    s: Option<Vec<f64>>,
    #[arg(long, num_args = 1..=2, value_names = ["RE", "IM"], allow_negative_numbers = true)]
    v: Option<Vec<f64>>,
    #[arg(long, num_args = 1..=2, value_names = ["RE", "IM"], allow_negative_numbers = true)]
    a: Option<Vec<f64>>,
    #[command(flatten)]
    policy: PolicyArgs,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// Points per identity.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Tolerance for relative, mod-2πi, exp and trend comparisons.
    #[arg(long)]
    tol_rel: Option<f64>,
    /// Tolerance for absolute comparisons.
    #[arg(long)]
    tol_abs: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Report path; defaults to hlzeta-<name>.<format> in the working directory.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    policy: PolicyArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    id: String,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Comma-separated identity ids.
    #[arg(long, value_delimiter = ',')]
    filter: Option<Vec<String>>,
    #[command(flatten)]
    run: RunArgs,
}

/// Settings shared by `verify` and `suite` after validation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub tol_rel: Option<f64>,
    pub tol_abs: Option<f64>,
    pub jobs: Option<usize>,
    pub format: Format,
    pub output_path: PathBuf,
    pub identity_filter: Vec<String>,
    pub policy: PrecisionPolicy,
}

impl RunConfig {
    fn from_args(a: &RunArgs, name: &str, filter: Vec<String>) -> Result<Self> {
        for (flag, t) in [("--tol-rel", a.tol_rel), ("--tol-abs", a.tol_abs)] {
            if let Some(t) = t {
                if !(t > 0.0 && t.is_finite()) {
                    return Err(Error::Config(format!("{flag} must be > 0, got {t}")));
                }
            }
        }
        if a.count == Some(0) {
            return Err(Error::Config("--count must be >= 1".into()));
        }
        if a.jobs == Some(0) {
            return Err(Error::Config("--jobs must be >= 1".into()));
        }
        for id in &filter {
            find_identity(id)?;
        }
        Ok(RunConfig {
            seed: a.seed,
            count: a.count,
            tol_rel: a.tol_rel,
            tol_abs: a.tol_abs,
            jobs: a.jobs,
            format: a.format,
            output_path: a
                .out
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("hlzeta-{name}.{}", a.format.ext()))),
            identity_filter: filter,
            policy: a.policy.policy()?,
        })
    }

    fn overrides(&self, specs: &[IdentitySpec]) -> Result<BTreeMap<String, Override>> {
        let mut out = BTreeMap::new();
        for spec in specs {
            let strategy = if self.seed.is_some() || self.count.is_some() {
                let mut st = SampleStrategy::default_for(spec)?;
                if let Some(seed) = self.seed {
                    st = st.with_seed(seed);
                }
                if let Some(c) = self.count {
                    st = st.with_count(c)?;
                }
                Some(st)
            } else {
                None
            };
            let tol = match spec.compare_mode {
                CompareMode::Absolute => self.tol_abs,
                _ => self.tol_rel,
            };
            out.insert(spec.id.to_string(), Override { strategy, tol });
        }
        Ok(out)
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_numerical() {
        EXIT_CONVERGENCE
    } else {
        EXIT_USAGE
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let r = match cli.cmd {
        Cmd::Eval(a) => cmd_eval(&a, out),
        Cmd::Verify(a) => RunConfig::from_args(&a.run, &a.id, vec![a.id.clone()])
            .and_then(|cfg| cmd_verify(&a.id, &cfg, out)),
        Cmd::Suite(a) => {
            RunConfig::from_args(&a.run, "suite", a.filter.clone().unwrap_or_default())
                .and_then(|cfg| cmd_suite(&cfg, out))
        }
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "hlzeta: {e}");
            exit_code(&e)
        }
    }
}

fn complex_arg(v: &Option<Vec<f64>>, name: &str) -> Result<Complex> {
    match v.as_deref() {
        Some([re]) => Ok(Complex::new(*re, 0.0)),
        Some([re, im]) => Ok(Complex::new(*re, *im)),
        _ => Err(Error::Domain(format!("{name} requires --{name} RE [IM]"))),
    }
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32> {
    let policy = a.policy.policy()?;
    let given: Vec<&str> = [("z", &a.z), ("s", &a.s), ("v", &a.v), ("a", &a.a)]
        .iter()
        .filter(|(_, v)| v.is_some())
        .map(|(n, _)| *n)
        .collect();
    let wants: &[&str] = match a.function {
        Function::Phi | Function::PhiIntegral => &["z", "s", "v"],
        Function::Zeta => &["s", "a"],
        Function::Polylog => &["z", "s"],
        Function::Loggamma | Function::Digamma | Function::Harmonic => &["z"],
        Function::Stieltjes1 => &["a"],
    };
    if let Some(extra) = given.iter().find(|g| !wants.contains(g)) {
        return Err(Error::Domain(format!(
            "unexpected argument --{extra}; expects {}",
            flags(wants)
        )));
    }
    if let Some(missing) = wants.iter().find(|w| !given.contains(w)) {
        return Err(Error::Domain(format!(
            "missing argument --{missing}; expects {}",
            flags(wants)
        )));
    }
    let arg = |name: &str| {
        let v = match name {
            "z" => &a.z,
            "s" => &a.s,
            "v" => &a.v,
            _ => &a.a,
        };
        complex_arg(v, name)
    };
    let value = match a.function {
        Function::Phi => lerch_phi(LerchParams::new(arg("z")?, arg("s")?, arg("v")?), &policy)?,
        Function::PhiIntegral => {
            lerch_phi_integral(LerchParams::new(arg("z")?, arg("s")?, arg("v")?), &policy)?
        }
        Function::Zeta => hurwitz_zeta(arg("s")?, arg("a")?, &policy)?,
        Function::Polylog => polylog(arg("s")?, arg("z")?, &policy)?,
        Function::Loggamma => log_gamma(arg("z")?)?,
        Function::Digamma => digamma(arg("z")?)?,
        Function::Harmonic => harmonic(arg("z")?)?,
        Function::Stieltjes1 => stieltjes_gamma1(arg("a")?, &policy)?,
    };
    writeln!(out, "{}\t{}", fmt17(value.re), fmt17(value.im))?;
    Ok(EXIT_OK)
}

fn flags(names: &[&str]) -> String {
    names
        .iter()
        .map(|n| format!("--{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(cfg: &RunConfig, specs: &[IdentitySpec]) -> Result<SuiteReport> {
    let overrides = cfg.overrides(specs)?;
    let go = || run_suite_on(specs, &cfg.policy, &overrides);
    match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(go),
        None => go(),
    }
}

fn write_report(cfg: &RunConfig, report: &SuiteReport) -> Result<()> {
    let text = match cfg.format {
        Format::Json => to_json(report, cfg.seed, now_timestamp())?,
        Format::Csv => to_csv(report)?,
    };
    std::fs::write(&cfg.output_path, text)
        .map_err(|e| Error::Io(format!("{}: {e}", cfg.output_path.display())))
}

fn cmd_verify(id: &str, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let spec = find_identity(id)?;
    let report = execute(cfg, std::slice::from_ref(&spec))?;
    write_report(cfg, &report)?;
    let row = &report.rows[0];
    writeln!(
        out,
        "{} {} {}/{} worst_rel={} mode={} tol={}",
        row.id,
        if row.all_passed() { "PASS" } else { "FAIL" },
        row.passed,
        row.points,
        fmt_err(row.worst_rel_err),
        row.mode,
        fmt_err(row.tol)
    )?;
    Ok(if row.all_passed() { EXIT_OK } else { EXIT_FAIL })
}

fn fmt_err(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.3e}")
    } else {
        "inf".into()
    }
}

fn cmd_suite(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let specs: Vec<IdentitySpec> = if cfg.identity_filter.is_empty() {
        list_identities()
    } else {
        list_identities()
            .into_iter()
            .filter(|s| cfg.identity_filter.iter().any(|f| f == s.id))
            .collect()
    };
    let report = execute(cfg, &specs)?;
    write_report(cfg, &report)?;
    writeln!(
        out,
        "{:<6} {:<22} {:>6} {:>8} {:>10} {:<10}",
        "id", "title", "points", "pass", "worst_rel", "mode"
    )?;
    for row in &report.rows {
        writeln!(
            out,
            "{:<6} {:<22} {:>6} {:>7.1}% {:>10} {:<10}",
            row.id,
            row.title,
            row.points,
            100.0 * row.pass_rate(),
            fmt_err(row.worst_rel_err),
            row.mode.as_str()
        )?;
    }
    let full = report.rows.iter().filter(|r| r.all_passed()).count();
    writeln!(
        out,
        "{full}/{} identities fully pass ({:.1}s)",
        report.rows.len(),
        report.wall_time_s
    )?;
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}
