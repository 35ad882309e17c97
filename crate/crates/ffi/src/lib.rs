//! C ABI over `hlzeta`.
//!
//! Every fallible call returns an [`HlzStatus`]; on failure a message is
//! kept per thread and read back with [`hlz_last_error`]. Handles are
//! opaque and must be released with their `_free` function.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use hlzeta::error::Error;
use hlzeta::identities::{find_identity, list_identities, EvalPoint, Field};
use hlzeta::numerics::{Complex, PrecisionPolicy};
use hlzeta::report::to_json;
use hlzeta::special::{self, LerchParams};
use hlzeta::verifier::{run_suite_on, Override, SampleStrategy, SuiteReport};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HlzComplex {
    pub re: f64,
    pub im: f64,
}

impl From<HlzComplex> for Complex {
    fn from(c: HlzComplex) -> Self {
        Complex::new(c.re, c.im)
    }
}

impl From<Complex> for HlzComplex {
    fn from(c: Complex) -> Self {
        HlzComplex { re: c.re, im: c.im }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlzStatus {
    Ok = 0,
    Domain = 1,
    Pole = 2,
    Convergence = 3,
    Overflow = 4,
    UnknownIdentity = 5,
    Constraint = 6,
    Exhausted = 7,
    Config = 8,
    Io = 9,
    NullPointer = 10,
    InvalidUtf8 = 11,
    Panic = 12,
}

impl From<&Error> for HlzStatus {
    fn from(e: &Error) -> Self {
        match e.root() {
            Error::Domain(_) => HlzStatus::Domain,
            Error::Pole(_) => HlzStatus::Pole,
            Error::Convergence(_) => HlzStatus::Convergence,
            Error::Overflow(_) => HlzStatus::Overflow,
            Error::UnknownIdentity(_) => HlzStatus::UnknownIdentity,
            Error::Constraint(_) => HlzStatus::Constraint,
            Error::Exhausted { .. } => HlzStatus::Exhausted,
            Error::Config(_) => HlzStatus::Config,
            Error::Io(_) => HlzStatus::Io,
            Error::Evaluation { .. } => HlzStatus::Domain,
        }
    }
}

/// Accuracy settings.
pub struct HlzPolicy(PrecisionPolicy);

/// A parameter point under construction.
pub struct HlzPoint(EvalPoint);

/// A finished suite run.
pub struct HlzReport {
    report: SuiteReport,
    seed: Option<u64>,
    ids: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

enum Fail {
    Lib(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard<F>(f: F) -> HlzStatus
where
    F: FnOnce() -> Result<(), Fail>,
{
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HlzStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            HlzStatus::from(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            HlzStatus::NullPointer
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("string argument is not valid UTF-8".into());
            HlzStatus::InvalidUtf8
        }
        Err(_) => {
            set_error("internal panic".into());
            HlzStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Utf8)
}

unsafe fn write<T>(out: *mut T, v: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    *out = v;
    Ok(())
}

unsafe fn policy_of(p: *const HlzPolicy) -> PrecisionPolicy {
    if p.is_null() {
        PrecisionPolicy::default()
    } else {
        (*p).0
    }
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hlz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub extern "C" fn hlz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Default policy. Never NULL.
#[no_mangle]
pub extern "C" fn hlz_policy_default() -> *mut HlzPolicy {
    Box::into_raw(Box::new(HlzPolicy(PrecisionPolicy::default())))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_policy_new(
    rel_tol: f64,
    abs_tol: f64,
    max_terms: usize,
    diff_step: f64,
    out: *mut *mut HlzPolicy,
) -> HlzStatus {
    guard(|| {
        let p = PrecisionPolicy::new(rel_tol, abs_tol, max_terms, diff_step)?;
        write(out, Box::into_raw(Box::new(HlzPolicy(p))), "out")
    })
}

/// # Safety
/// `p` must be NULL or come from `hlz_policy_*` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hlz_policy_free(p: *mut HlzPolicy) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn eval_into<F>(policy: *const HlzPolicy, out: *mut HlzComplex, f: F) -> HlzStatus
where
    F: FnOnce(PrecisionPolicy) -> hlzeta::error::Result<Complex>,
{
    guard(|| {
        let v = f(policy_of(policy))?;
        write(out, v.into(), "out")
    })
}

/// Hurwitz-Lerch zeta Phi(z, s, v) by series.
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_lerch_phi(
    policy: *const HlzPolicy,
    z: HlzComplex,
    s: HlzComplex,
    v: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |pol| {
        special::lerch_phi(LerchParams::new(z.into(), s.into(), v.into()), &pol)
    })
}

/// Phi(z, s, v) by quadrature.
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_lerch_phi_integral(
    policy: *const HlzPolicy,
    z: HlzComplex,
    s: HlzComplex,
    v: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |pol| {
        special::lerch_phi_integral(LerchParams::new(z.into(), s.into(), v.into()), &pol)
    })
}

/// Hurwitz zeta(s, a).
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_hurwitz_zeta(
    policy: *const HlzPolicy,
    s: HlzComplex,
    a: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |pol| {
        special::hurwitz_zeta(s.into(), a.into(), &pol)
    })
}

/// Li_s(z).
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_polylog(
    policy: *const HlzPolicy,
    s: HlzComplex,
    z: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |pol| {
        special::polylog(s.into(), z.into(), &pol)
    })
}

/// Continuous-branch log Gamma; `policy` is unused.
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_log_gamma(
    policy: *const HlzPolicy,
    z: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |_| special::log_gamma(z.into()))
}

/// psi(z); `policy` is unused.
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_digamma(
    policy: *const HlzPolicy,
    z: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |_| special::digamma(z.into()))
}

/// H_z; `policy` is unused.
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_harmonic(
    policy: *const HlzPolicy,
    z: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |_| special::harmonic(z.into()))
}

/// First generalized Stieltjes constant gamma_1(a).
///
/// # Safety
/// `policy` must be NULL (defaults) or live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_stieltjes_gamma1(
    policy: *const HlzPolicy,
    a: HlzComplex,
    out: *mut HlzComplex,
) -> HlzStatus {
    eval_into(policy, out, |pol| special::stieltjes_gamma1(a.into(), &pol))
}

#[no_mangle]
pub extern "C" fn hlz_point_new() -> *mut HlzPoint {
    Box::into_raw(Box::new(HlzPoint(EvalPoint::new())))
}

/// Sets field `name` (one of a, m, k, x, r, z, s).
///
/// # Safety
/// `pt` must be a live point handle and `name` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn hlz_point_set(
    pt: *mut HlzPoint,
    name: *const c_char,
    value: HlzComplex,
) -> HlzStatus {
    guard(|| {
        let name = text(name, "name")?;
        let field = Field::ALL
            .iter()
            .copied()
            .find(|f| f.name() == name && *f != Field::N)
            .ok_or_else(|| Error::Domain(format!("no complex field named `{name}`")))?;
        let pt = pt.as_mut().ok_or(Fail::Null("pt"))?;
        pt.0 = pt.0.with(field, value.into());
        Ok(())
    })
}

/// # Safety
/// `pt` must be a live point handle.
#[no_mangle]
pub unsafe extern "C" fn hlz_point_set_n(pt: *mut HlzPoint, n: u32) -> HlzStatus {
    guard(|| {
        let pt = pt.as_mut().ok_or(Fail::Null("pt"))?;
        pt.0 = pt.0.with_n(n);
        Ok(())
    })
}

/// # Safety
/// `pt` must be NULL or a point handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hlz_point_free(pt: *mut HlzPoint) {
    if !pt.is_null() {
        drop(Box::from_raw(pt));
    }
}

fn registry_ids() -> &'static [CString] {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    IDS.get_or_init(|| {
        list_identities()
            .iter()
            .map(|s| CString::new(s.id).unwrap())
            .collect()
    })
}

#[no_mangle]
pub extern "C" fn hlz_identity_count() -> usize {
    registry_ids().len()
}

/// Id of registry entry `index`, or NULL when out of range. Static storage.
#[no_mangle]
pub extern "C" fn hlz_identity_id(index: usize) -> *const c_char {
    registry_ids()
        .get(index)
        .map_or(ptr::null(), |c| c.as_ptr())
}

/// Evaluates both sides of identity `id` at `pt`.
///
/// # Safety
/// `id` must be NUL-terminated, `pt` a live point, `policy` NULL or live,
/// and `lhs`, `rhs` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_evaluate_sides(
    id: *const c_char,
    pt: *const HlzPoint,
    policy: *const HlzPolicy,
    lhs: *mut HlzComplex,
    rhs: *mut HlzComplex,
) -> HlzStatus {
    guard(|| {
        let id = text(id, "id")?;
        let pt = pt.as_ref().ok_or(Fail::Null("pt"))?;
        if lhs.is_null() || rhs.is_null() {
            return Err(Fail::Null("lhs/rhs"));
        }
        let spec = find_identity(id)?;
        let (l, r) = spec.evaluate_values(&pt.0, &policy_of(policy))?;
        write(lhs, l.into(), "lhs")?;
        write(rhs, r.into(), "rhs")
    })
}

/// Runs the suite. `filter` is NULL (all entries) or a comma-separated id
/// list; `seed` and `count` of 0 keep the defaults.
///
/// # Safety
/// `filter` must be NULL or NUL-terminated, `policy` NULL or live, `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_run_suite(
    policy: *const HlzPolicy,
    filter: *const c_char,
    seed: u64,
    count: usize,
    out: *mut *mut HlzReport,
) -> HlzStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let mut specs = list_identities();
        if !filter.is_null() {
            let wanted: Vec<&str> = text(filter, "filter")?
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            for w in &wanted {
                find_identity(w)?;
            }
            specs.retain(|s| wanted.contains(&s.id));
        }
        let mut overrides = BTreeMap::new();
        if seed != 0 || count != 0 {
            for spec in &specs {
                let mut st = SampleStrategy::default_for(spec)?;
                if seed != 0 {
                    st = st.with_seed(seed);
                }
                if count != 0 {
                    st = st.with_count(count)?;
                }
                overrides.insert(
                    spec.id.to_string(),
                    Override {
                        strategy: Some(st),
                        tol: None,
                    },
                );
            }
        }
        let report = run_suite_on(&specs, &policy_of(policy), &overrides)?;
        let ids = report
            .rows
            .iter()
            .map(|r| CString::new(r.id.as_str()).unwrap())
            .collect();
        let seed = (seed != 0).then_some(seed);
        write(
            out,
            Box::into_raw(Box::new(HlzReport { report, seed, ids })),
            "out",
        )
    })
}

/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hlz_report_rows(r: *const HlzReport) -> usize {
    r.as_ref().map_or(0, |r| r.report.rows.len())
}

/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hlz_report_all_passed(r: *const HlzReport) -> bool {
    r.as_ref().is_some_and(|r| r.report.all_passed())
}

/// Id of row `i`; valid while the report lives. NULL when out of range.
///
/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hlz_report_row_id(r: *const HlzReport, i: usize) -> *const c_char {
    r.as_ref()
        .and_then(|r| r.ids.get(i))
        .map_or(ptr::null(), |c| c.as_ptr())
}

/// Pass count, point count and worst relative error of row `i`.
///
/// # Safety
/// `r` must be a live report handle; the outputs must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_report_row_stats(
    r: *const HlzReport,
    i: usize,
    passed: *mut usize,
    points: *mut usize,
    worst_rel_err: *mut f64,
) -> HlzStatus {
    guard(|| {
        let r = r.as_ref().ok_or(Fail::Null("report"))?;
        let row = r
            .report
            .rows
            .get(i)
            .ok_or_else(|| Error::Domain(format!("row {i} out of range")))?;
        write(passed, row.passed, "passed")?;
        write(points, row.points, "points")?;
        write(worst_rel_err, row.worst_rel_err, "worst_rel_err")
    })
}

/// The report as JSON; release with [`hlz_string_free`].
///
/// # Safety
/// `r` must be a live report handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hlz_report_to_json(
    r: *const HlzReport,
    timestamp: u64,
    out: *mut *mut c_char,
) -> HlzStatus {
    guard(|| {
        let r = r.as_ref().ok_or(Fail::Null("report"))?;
        let json = to_json(&r.report, r.seed, timestamp)?;
        let c = CString::new(json).map_err(|e| Error::Io(e.to_string()))?;
        write(out, c.into_raw(), "out")
    })
}

/// # Safety
/// `r` must be NULL or a report handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hlz_report_free(r: *mut HlzReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn hlz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
