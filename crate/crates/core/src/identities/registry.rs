use super::point::{EvalPoint, Field};
use super::side::{Form, Side, SideBuilder};
use super::trig::{
    cot, csc, dist_csc_pole, dist_nonpos_int, dist_tan_pole, keep_away, require, sec, tan,
};
use super::{CompareMode, IdentitySpec};
use crate::error::{Result, SideTag};
use crate::numerics::{
    c, principal_log, principal_pow, real, Complex, PrecisionPolicy, I, ONE, PI,
};
use crate::special::{
    digamma, harmonic, lerch_phi, log_gamma, polylog, stieltjes_gamma1, LerchParams,
};

use Field::{A, K, M, N, R, S, X, Z};
use SideTag::{Lhs, Rhs};

const LN2: f64 = std::f64::consts::LN_2;

/// Truncation order at which the infinite-product entry is evaluated.
pub const NIELSEN_PROBE_N: u32 = 12;

fn p2(e: i64) -> f64 {
    2f64.powi(e as i32)
}

fn phi(z: Complex, s: Complex, v: Complex, policy: &PrecisionPolicy) -> Result<Complex> {
    lerch_phi(LerchParams::new(z, s, v), policy)
}

fn real_field(pt: &EvalPoint, f: Field) -> Result<f64> {
    let v = pt.req(f)?;
    require(v.im == 0.0, &format!("{f} must be real"))?;
    Ok(v.re)
}

pub(super) fn all() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec {
            id: "ID-00",
            title: "integrand-identity",
            summary: "Telescoping tan-sec sum behind the contour integral, in u = m + w.",
            schema: &[M, N],
            constraints: "every tan/sec/csc argument at every scale kept away from its poles",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-10,
            mutation: None,
            lhs: id00_lhs,
            rhs: id00_rhs,
            check: id00_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-01",
            title: "main-theorem",
            summary: "Finite sum of Hurwitz-Lerch zeta values collapsing to two Phi terms.",
            schema: &[A, M, K, N],
            constraints: "Im(m) > 0 so every Phi base lies inside the unit disk; |log a| <= 2^-n; shifts away from nonpositive integers",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id01_lhs,
            rhs: id01_rhs,
            check: id01_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-02",
            title: "degenerate",
            summary: "k = 0 case: weighted tan-sec sum equals a csc difference.",
            schema: &[M, N],
            constraints: "tan/sec/csc arguments away from their poles",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-10,
            mutation: None,
            lhs: id02_lhs,
            rhs: id02_rhs,
            check: id02_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-03",
            title: "cos-ratio-two-param",
            summary: "Product of cosine ratios in m and r equals a tangent ratio.",
            schema: &[M, R, N],
            constraints: "cosines nonzero and tangents finite and nonzero at every scale",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id03_lhs,
            rhs: id03_rhs,
            check: id03_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-04",
            title: "functional-equation",
            summary: "Phi(z,s,a) through Phi at -z^2, z^2, -z^4 and z^8.",
            schema: &[Z, S, A],
            constraints: "|z| < 1, Re(a) > 0",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id04_lhs,
            rhs: id04_rhs,
            check: id04_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-05",
            title: "cos-ratio-k1",
            summary: "Product of cos^3/(cos^2 cos) factors equals a tangent ratio.",
            schema: &[X, N],
            constraints: "cosines nonzero and tangents finite and nonzero",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id05_lhs,
            rhs: id05_rhs,
            check: id05_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-06",
            title: "exp-cos-product",
            summary: "Cosine products with exponential csc factors equal a tan/cot expression.",
            schema: &[X, N],
            constraints: "trig arguments away from poles and zeros of tan, cot, sec, csc",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-7,
            mutation: None,
            lhs: id06_lhs,
            rhs: id06_rhs,
            check: id06_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-07",
            title: "loggamma-sum",
            summary: "Sum of log-gamma values at imaginary multiples of log a.",
            schema: &[A, N],
            constraints: "log a nonzero; all log-gamma arguments away from poles",
            compare_mode: CompareMode::Mod2PiI,
            default_tol: 1e-9,
            mutation: None,
            lhs: id07_lhs,
            rhs: id07_rhs,
            check: id07_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-08",
            title: "loggamma-sum-alt",
            summary: "Real form of the log-gamma sum.",
            schema: &[A, N],
            constraints: "a real, a > 2",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id08_lhs,
            rhs: id08_rhs,
            check: real_a_above_two,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-09",
            title: "digamma-sum",
            summary: "a-derivative of the log-gamma sum: digamma values and a rational term.",
            schema: &[A, N],
            constraints: "a real, a > 2",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id09_lhs,
            rhs: id09_rhs,
            check: real_a_above_two,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-10",
            title: "loggamma-transform",
            summary: "Single-variable log-gamma relation in a.",
            schema: &[A],
            constraints: "a real, a > 2",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id10_lhs,
            rhs: id10_rhs,
            check: real_a_above_two,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-11",
            title: "nielsen-product",
            summary: "Finite product of gamma ratios raised to 2^-p.",
            schema: &[X, N],
            constraints: "x real in (0, 1), n >= 1, 2^n x away from 1",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id11_lhs,
            rhs: id11_rhs,
            check: id11_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-12",
            title: "nielsen-infinite",
            summary: "Infinite limit of the gamma-ratio product; checked as a convergence trend.",
            schema: &[X],
            constraints: "x real in (0, 1)",
            compare_mode: CompareMode::Trend,
            default_tol: 1e-6,
            mutation: None,
            lhs: id12_lhs,
            rhs: id12_rhs,
            check: id12_check,
            truncated: Some(id12_truncated),
        },
        IdentitySpec {
            id: "ID-13",
            title: "stieltjes-sum",
            summary: "Sum of harmonic numbers and first Stieltjes constants.",
            schema: &[A, N],
            constraints: "a real, a > 2",
            compare_mode: CompareMode::Absolute,
            default_tol: 1e-5,
            mutation: None,
            lhs: id13_lhs,
            rhs: id13_rhs,
            check: real_a_above_two,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-14",
            title: "polylog-sum",
            summary: "Sum of polylogarithms on circles collapsing to two Phi terms.",
            schema: &[M, K, N],
            constraints: "Im(m) > 0 so every base lies inside the unit disk",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-9,
            mutation: None,
            lhs: id14_lhs,
            rhs: id14_rhs,
            check: id14_check,
            truncated: None,
        },
        IdentitySpec {
            id: "ID-15",
            title: "exp-trig-product",
            summary: "Product of exponentials of sec^2 combinations; compared on the exponents.",
            schema: &[X, N],
            constraints: "sec, csc and cot arguments away from their poles",
            compare_mode: CompareMode::Relative,
            default_tol: 1e-8,
            mutation: None,
            lhs: id15_lhs,
            rhs: id15_rhs,
            check: id15_check,
            truncated: None,
        },
    ]
}

/// ID-02 with the right-hand side as it appears in the older table (sign
/// reversed). Not part of the registry.
pub fn prudnikov_original() -> IdentitySpec {
    IdentitySpec {
        id: "ID-02-PRUDNIKOV-ORIGINAL",
        title: "degenerate-table-form",
        summary: "ID-02 with the tabulated, sign-reversed right-hand side.",
        rhs: id02_rhs_original,
        ..all().swap_remove(2)
    }
}

// ID-00

fn id00_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let u = pt.req(M)?;
    let n = pt.req_n()? as i64;
    for p in 0..=n {
        keep_away(dist_tan_pole(u * p2(-p - 1)), margin, "tan argument")?;
        keep_away(dist_tan_pole(u * p2(-p)), margin, "sec argument")?;
    }
    keep_away(dist_csc_pole(u * p2(-n)), margin, "csc(2^-n u) argument")?;
    keep_away(dist_csc_pole(u * 2.0), margin, "csc(2u) argument")
}

fn id00_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let u = pt.req(M)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        b.term(Ok(-p2(-p) * tan(u * p2(-p - 1)) * sec(u * p2(-p))))?;
    }
    Ok(b.finish())
}

fn id00_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let u = pt.req(M)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.term(Ok(p2(-n) * csc(u * p2(-n))))?;
    b.term(Ok(-2.0 * csc(u * 2.0)))?;
    Ok(b.finish())
}

// ID-01

struct TheoremArgs {
    m: Complex,
    k: Complex,
    n: i64,
    log_a: Complex,
}

fn theorem_args(pt: &EvalPoint) -> Result<TheoremArgs> {
    Ok(TheoremArgs {
        m: pt.req(M)?,
        k: pt.req(K)?,
        n: pt.req_n()? as i64,
        log_a: principal_log(pt.req(A)?)?,
    })
}

fn id01_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let t = theorem_args(pt)?;
    require(t.m.im > 0.0, "Im(m) must be positive")?;
    require(
        t.log_a.norm() <= p2(-t.n) * (1.0 + 1e-12),
        "|log a| must not exceed 2^-n",
    )?;
    for p in 0..=t.n {
        keep_away(
            dist_nonpos_int(ONE - I * p2(p - 1) * t.log_a),
            margin,
            "Phi shift",
        )?;
        keep_away(
            dist_nonpos_int(ONE - I * p2(p) * t.log_a),
            margin,
            "Phi shift",
        )?;
    }
    keep_away(
        dist_nonpos_int(0.5 * (ONE - I * p2(t.n) * t.log_a)),
        margin,
        "Phi shift",
    )?;
    keep_away(
        dist_nonpos_int(0.5 - 0.25 * I * t.log_a),
        margin,
        "Phi shift",
    )
}

fn id01_lhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let TheoremArgs { m, k, n, log_a } = theorem_args(pt)?;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        let w = p2(-p);
        let e = (I * m * w).exp();
        b.term((|| {
            let base = -(I * m * p2(1 - p)).exp();
            let v = ONE - I * p2(p - 1) * log_a;
            Ok(w * e * principal_pow(I * w, k)? * e * phi(base, -k, v, pol)?)
        })())?;
        b.term((|| {
            let base = -(I * m * w).exp();
            let v = ONE - I * p2(p) * log_a;
            Ok(-w * e * principal_pow(I * p2(-p - 1), k)? * phi(base, -k, v, pol)?)
        })())?;
    }
    Ok(b.finish())
}

fn id01_rhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let TheoremArgs { m, k, n, log_a } = theorem_args(pt)?;
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.term((|| {
        let pre = I * principal_pow(I * p2(-n), k + 1.0)? * (I * m * p2(-n)).exp();
        let base = (I * m * p2(1 - n)).exp();
        let v = 0.5 * (ONE - I * p2(n) * log_a);
        Ok(pre * phi(base, -k, v, pol)?)
    })())?;
    b.term((|| {
        let pre = principal_pow(I, k)? * principal_pow(real(2.0), k + 1.0)? * (2.0 * I * m).exp();
        let base = (4.0 * I * m).exp();
        let v = 0.5 - 0.25 * I * log_a;
        Ok(pre * phi(base, -k, v, pol)?)
    })())?;
    Ok(b.finish())
}

// ID-02

fn id02_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let m = pt.req(M)?;
    let n = pt.req_n()? as i64;
    for p in 0..=n {
        keep_away(dist_tan_pole(m * p2(-p - 1)), margin, "tan argument")?;
        keep_away(dist_tan_pole(m * p2(-p)), margin, "sec argument")?;
    }
    keep_away(dist_csc_pole(m * 2.0), margin, "csc(2m) argument")?;
    keep_away(dist_csc_pole(m * p2(-n)), margin, "csc(m 2^-n) argument")
}

fn id02_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let m = pt.req(M)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        b.term(Ok(p2(-p - 1) * tan(m * p2(-p - 1)) * sec(m * p2(-p))))?;
    }
    Ok(b.finish())
}

fn id02_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let m = pt.req(M)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.term(Ok(csc(2.0 * m)))?;
    b.term(Ok(-p2(-n - 1) * csc(m * p2(-n))))?;
    Ok(b.finish())
}

fn id02_rhs_original(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let m = pt.req(M)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.term(Ok(p2(-n - 1) * csc(m * p2(-n))))?;
    b.term(Ok(-csc(2.0 * m)))?;
    Ok(b.finish())
}

// ID-03

fn id03_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let m = pt.req(M)?;
    let r = pt.req(R)?;
    let n = pt.req_n()? as i64;
    for v in [m, r] {
        for p in 0..=n + 1 {
            keep_away(dist_tan_pole(v * p2(-p)), margin, "cos/tan argument")?;
        }
        keep_away(dist_csc_pole(v), margin, "tan zero")?;
        keep_away(dist_csc_pole(v * p2(-1 - n)), margin, "tan zero")?;
    }
    Ok(())
}

fn id03_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let m = pt.req(M)?;
    let r = pt.req(R)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Exp);
    for p in 0..=n {
        let ratio = (r * p2(-1 - p)).cos() / (m * p2(-1 - p)).cos();
        b.factor(Ok((m * p2(-p)).cos() / (r * p2(-p)).cos() * ratio * ratio))?;
    }
    Ok(b.finish())
}

fn id03_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let m = pt.req(M)?;
    let r = pt.req(R)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Rhs, Form::Exp);
    b.factor(Ok(tan(m * p2(-1 - n))))?;
    b.factor(Ok(tan(r)))?;
    b.factor(Ok(ONE / tan(m)))?;
    b.factor(Ok(ONE / tan(r * p2(-1 - n))))?;
    Ok(b.finish())
}

// ID-04

fn id04_check(pt: &EvalPoint, _margin: f64) -> Result<()> {
    let z = pt.req(Z)?;
    pt.req(S)?;
    let a = pt.req(A)?;
    require(z.norm() < 1.0, "|z| must be below 1")?;
    require(a.re > 0.0, "Re(a) must be positive")
}

fn id04_lhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let (z, s, a) = (pt.req(Z)?, pt.req(S)?, pt.req(A)?);
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    b.term(phi(z, s, a, pol))?;
    Ok(b.finish())
}

fn id04_rhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let (z, s, a) = (pt.req(Z)?, pt.req(S)?, pt.req(A)?);
    let z2 = z * z;
    let z3 = z2 * z;
    let z4 = z2 * z2;
    let z8 = z4 * z4;
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.factor(principal_pow(real(8.0), -s))?;
    let four_s = principal_pow(real(4.0), s)?;
    b.term(phi(-z2, s, (a + 1.0) / 2.0, pol).map(|v| four_s * z * v))?;
    b.term(phi(z2, s, a / 2.0, pol).map(|v| four_s * v))?;
    b.term((|| {
        Ok(-2.0 * z3 * principal_pow(real(2.0), s)? * phi(-z4, s, (a + 3.0) / 4.0, pol)?)
    })())?;
    b.term(phi(z8, s, (a + 3.0) / 8.0, pol).map(|v| 4.0 * z3 * v))?;
    Ok(b.finish())
}

// ID-05

fn id05_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let x = real_field(pt, X)?;
    let x = real(x);
    let n = pt.req_n()? as i64;
    for p in 0..=n + 2 {
        keep_away(dist_tan_pole(x * p2(-p)), margin, "cos/tan argument")?;
    }
    for p in [1, 1 + n, 2 + n] {
        keep_away(dist_csc_pole(x * p2(-p)), margin, "tan zero")?;
    }
    keep_away(dist_csc_pole(x), margin, "tan zero")
}

fn id05_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = pt.req(X)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Exp);
    for p in 0..=n {
        let c1 = (x * p2(-1 - p)).cos();
        let c2 = (x * p2(-2 - p)).cos();
        let c0 = (x * p2(-p)).cos();
        b.factor(Ok(c1 * c1 * c1 / (c2 * c2 * c0)))?;
    }
    Ok(b.finish())
}

fn id05_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = pt.req(X)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Rhs, Form::Exp);
    b.factor(Ok(tan(x)))?;
    b.factor(Ok(tan(x * p2(-2 - n))))?;
    b.factor(Ok(ONE / tan(x / 2.0)))?;
    b.factor(Ok(ONE / tan(x * p2(-1 - n))))?;
    Ok(b.finish())
}

// ID-06

fn id06_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let x = real(real_field(pt, X)?);
    let n = pt.req_n()? as i64;
    for p in -1..=n + 2 {
        keep_away(dist_tan_pole(x * p2(-p)), margin, "cos/tan/sec argument")?;
        keep_away(dist_csc_pole(x * p2(-p)), margin, "csc/cot argument")?;
    }
    Ok(())
}

fn id06_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = pt.req(X)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Exp);
    for p in 0..=n {
        let c2 = (x * p2(-p - 2)).cos();
        let s1 = sec(x * p2(-p - 1));
        b.factor(Ok(c2 * c2 * (x * p2(-p)).cos() * s1 * s1 * s1))?;
    }
    for p in 0..=n {
        let w = -p2(1 - p) * csc(x * p2(1 - p));
        b.term(Ok(w * (x * p2(-p - 1)).cos()))?;
        b.term(Ok(w * (3.0 * p2(-p - 1) * x).cos()))?;
        b.term(Ok(-3.0 * w * (x * p2(-p)).cos()))?;
        b.term(Ok(w))?;
    }
    Ok(b.finish())
}

fn id06_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = pt.req(X)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Rhs, Form::Exp);
    b.factor(Ok(tan(x / 2.0)))?;
    b.factor(Ok(cot(x)))?;
    b.factor(Ok(tan(x * p2(-n - 1))))?;
    b.factor(Ok(cot(x * p2(-n - 2))))?;
    b.term(Ok(p2(-n) * csc(x * p2(-n))))?;
    b.term(Ok(-p2(-n) * csc(x * p2(-n - 1))))?;
    b.term(Ok(tan(x / 2.0)))?;
    b.term(Ok(-tan(x)))?;
    b.term(Ok(cot(x / 2.0)))?;
    b.term(Ok(-cot(x)))?;
    Ok(b.finish())
}

// ID-07

fn id07_gamma_args(log_a: Complex, n: i64) -> Vec<Complex> {
    let mut out = Vec::new();
    for p in 0..=n {
        out.push(-I * p2(p - 2) * log_a);
        out.push(-I * p2(p - 1) * log_a);
        out.push((-I * p2(p) * log_a - 2.0) / 4.0);
        out.push((-I * p2(p) * log_a - 1.0) / 2.0);
    }
    out.push(-0.25 * I * log_a - 0.5);
    out.push((-I * p2(n) * log_a - 1.0) / 2.0);
    out
}

fn id07_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let a = pt.req(A)?;
    let n = pt.req_n()? as i64;
    require(a.norm() > 0.0, "a must be nonzero")?;
    let log_a = principal_log(a)?;
    require(log_a.norm() > 0.0, "log a must be nonzero")?;
    for g in id07_gamma_args(log_a, n) {
        keep_away(dist_nonpos_int(g), margin, "log-gamma argument")?;
    }
    for p in 0..=n {
        keep_away((p2(p) * log_a - 2.0 * I).norm(), margin, "log denominator")?;
        keep_away((p2(p) * log_a - I).norm(), margin, "log numerator")?;
    }
    keep_away((-2.0 - I * log_a).norm(), margin, "log argument")?;
    keep_away((-1.0 - I * p2(n) * log_a).norm(), margin, "log argument")
}

fn id07_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let la = principal_log(pt.req(A)?)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        let w = p2(-p);
        let t = p2(p) * la;
        b.term(log_gamma(-I * p2(p - 2) * la).map(|g| 2.0 * w * g))?;
        b.term(log_gamma(-I * p2(p - 1) * la).map(|g| -2.0 * w * g))?;
        b.term(log_gamma((-I * t - 2.0) / 4.0).map(|g| -2.0 * w * g))?;
        b.term(log_gamma((-I * t - 1.0) / 2.0).map(|g| 2.0 * w * g))?;
        let num = t - I;
        let den = t - 2.0 * I;
        b.term(principal_log(2.0 * num * num / (den * den)).map(|l| w * l))?;
    }
    Ok(b.finish())
}

fn id07_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let la = principal_log(pt.req(A)?)?;
    let n = pt.req_n()? as i64;
    let big = p2(n);
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.factor(Ok(real(p2(-n - 1))))?;
    b.term(log_gamma(-0.25 * I * la - 0.5).map(|g| -big * 8.0 * g))?;
    b.term(principal_log(I * p2(-n)).map(|l| -big * la * 2.0 * I * l))?;
    b.term(Ok(-big * la * PI))?;
    b.term(Ok(big * la * 2.0 * I * LN2))?;
    b.term(principal_log(-2.0 - I * la).map(|l| -big * 8.0 * l))?;
    b.term(Ok(real(big * 4.0 * (32.0 * PI).ln())))?;
    b.term(log_gamma((-I * big * la - 1.0) / 2.0).map(|g| 4.0 * g))?;
    b.term(principal_log(-1.0 - I * big * la).map(|l| 4.0 * l))?;
    b.term(Ok(real(-2.0 * PI.ln())))?;
    b.term(Ok(real(-6.0 * LN2)))?;
    Ok(b.finish())
}

// ID-08, ID-09, ID-10, ID-13

fn real_a_above_two(pt: &EvalPoint, _margin: f64) -> Result<()> {
    let a = real_field(pt, A)?;
    require(a > 2.0, "a must exceed 2")
}

fn lg(x: f64) -> Result<Complex> {
    log_gamma(real(x))
}

fn id08_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        let w = p2(-p);
        let t = p2(p) * a;
        b.term(lg(p2(p - 2) * a).map(|g| 2.0 * w * g))?;
        b.term(lg(p2(p - 1) * a).map(|g| -2.0 * w * g))?;
        b.term(lg((t - 2.0) / 4.0).map(|g| -2.0 * w * g))?;
        b.term(lg((t - 1.0) / 2.0).map(|g| 2.0 * w * g))?;
        b.term(principal_log(real(2.0 * (t - 1.0).powi(2) / (t - 2.0).powi(2))).map(|l| w * l))?;
    }
    Ok(b.finish())
}

fn id08_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let n = pt.req_n()? as i64;
    let t = p2(n) * a;
    let root = (2.0 * PI).sqrt();
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.term(lg((t - 1.0) / 2.0).map(|g| p2(-n) * 2.0 * g))?;
    b.term(principal_log(real((t - 1.0) / (2.0 * root))).map(|l| p2(-n) * 2.0 * l))?;
    b.term(lg((a - 2.0) / 4.0).map(|g| -4.0 * g))?;
    b.term(Ok(real(a * p2(-n - 1).ln())))?;
    b.term(principal_log(real(4.0 * root / (a - 2.0))).map(|l| 4.0 * l))?;
    Ok(b.finish())
}

fn psi(x: f64) -> Result<Complex> {
    digamma(real(x))
}

fn id09_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        let t = a * p2(p);
        b.term(Ok(real(4.0 / (t * (t - 3.0) + 2.0))))?;
        b.term(psi(p2(p - 2) * a).map(|v| -v))?;
        b.term(psi(p2(p - 1) * a).map(|v| 2.0 * v))?;
        b.term(psi((t - 2.0) / 4.0))?;
        b.term(psi((t - 1.0) / 2.0).map(|v| -2.0 * v))?;
    }
    Ok(b.finish())
}

fn id09_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let n = pt.req_n()? as i64;
    let t = a * p2(n);
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.factor(Ok(real(-2.0)))?;
    b.term(Ok(real(2.0 / (t - 1.0))))?;
    b.term(psi((t - 1.0) / 2.0))?;
    b.term(Ok(real(-4.0 / (a - 2.0))))?;
    b.term(psi((a - 2.0) / 4.0).map(|v| -v))?;
    b.term(Ok(real(p2(-n - 1).ln())))?;
    Ok(b.finish())
}

fn id10_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    b.term(lg(a / 4.0))?;
    b.term(lg((a - 2.0) / 4.0))?;
    b.term(lg((a - 1.0) / 2.0).map(|g| 0.5 * g))?;
    b.term(lg(a / 2.0).map(|g| -0.5 * g))?;
    b.term(lg(a).map(|g| -0.5 * g))?;
    Ok(b.finish())
}

fn id10_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.factor(Ok(real(2.0)))?;
    b.term(Ok(real(0.375 * PI.ln())))?;
    b.term(Ok(real((2.0 - a / 2.0) * LN2)))?;
    b.term(principal_log(real(a + 1.0 / (a - 1.0) - 3.0)).map(|l| 0.25 * l))?;
    b.term(principal_log(real(a - 2.0)).map(|l| -l))?;
    Ok(b.finish())
}

fn id13_lhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let n = pt.req_n()? as i64;
    let h = |x: f64| harmonic(real(x));
    let g1 = |x: f64| stieltjes_gamma1(real(x), pol);
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        let t = p2(p) * a;
        let l1 = principal_log(I * p2(1 - p))?;
        let l0 = principal_log(I * p2(-p))?;
        b.term(h(p2(p - 2) * a).map(|v| l1 * v))?;
        b.term(h((t - 2.0) / 4.0).map(|v| -l1 * v))?;
        b.term(h((t - 1.0) / 2.0).map(|v| 2.0 * l0 * v))?;
        b.term(h(p2(p - 1) * a).map(|v| -2.0 * l0 * v))?;
        b.term(g1(p2(p - 2) * a + 1.0).map(|v| -v))?;
        b.term(g1(p2(p - 1) * a + 1.0).map(|v| 2.0 * v))?;
        b.term(g1((t + 1.0) / 2.0).map(|v| -2.0 * v))?;
        b.term(g1((t + 2.0) / 4.0))?;
    }
    Ok(b.finish())
}

fn id13_rhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let a = real_field(pt, A)?;
    let n = pt.req_n()? as i64;
    let t = p2(n) * a;
    let ln = principal_log(I * p2(-n))?;
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.factor(Ok(real(0.25)))?;
    b.term(stieltjes_gamma1(real((t + 1.0) / 2.0), pol).map(|v| -8.0 * v))?;
    b.term(psi((t + 1.0) / 2.0).map(|v| 8.0 * ln * v))?;
    b.term(stieltjes_gamma1(real((a + 2.0) / 4.0), pol).map(|v| 8.0 * v))?;
    b.term(psi((a + 2.0) / 4.0).map(|v| c(-8.0 * LN2, -4.0 * PI) * v))?;
    b.term(Ok(4.0 * ln * ln))?;
    let q = c(PI, -2.0 * LN2);
    b.term(Ok(q * q))?;
    Ok(b.finish())
}

// ID-11, ID-12

fn id11_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let x = real_field(pt, X)?;
    let n = pt.req_n()?;
    require(x > 0.0 && x < 1.0, "x must lie in (0, 1)")?;
    require(n >= 1, "n must be at least 1")?;
    keep_away((p2(n as i64) * x - 1.0).abs(), margin, "2^n x - 1")
}

fn id12_check(pt: &EvalPoint, _margin: f64) -> Result<()> {
    let x = real_field(pt, X)?;
    require(x > 0.0 && x < 1.0, "x must lie in (0, 1)")
}

fn nielsen_lhs_side(x: f64, n: i64) -> Result<Side> {
    let mut b = SideBuilder::new(Lhs, Form::Exp);
    for p in 1..=n {
        let w = p2(-p);
        let t = p2(p) * x;
        b.term(Ok(real(w * (-p2(p - 1) * x * LN2))))?;
        b.term(lg((t + 1.0) / 2.0).map(|g| w * g))?;
        b.term(lg((t + 2.0) / 4.0).map(|g| -2.0 * w * g))?;
    }
    Ok(b.finish())
}

/// The gamma-ratio product truncated after `n` factors.
pub fn nielsen_truncated_product(x: f64, n: u32) -> Result<Complex> {
    nielsen_lhs_side(x, n as i64)?.value(Lhs)
}

fn id11_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    nielsen_lhs_side(real_field(pt, X)?, pt.req_n()? as i64)
}

fn id11_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = real_field(pt, X)?;
    let n = pt.req_n()? as i64;
    let t = p2(n) * x;
    let mut b = SideBuilder::new(Rhs, Form::Exp);
    b.factor(principal_pow(real(t - 1.0), real(p2(-n))))?;
    b.term(Ok(real(-(n as f64 * x / 2.0 + p2(-n)) * LN2)))?;
    b.term(log_gamma(real((t - 1.0) / 2.0)).map(|g| p2(-n) * g))?;
    b.term(lg((x + 1.0) / 2.0).map(|g| -g))?;
    Ok(b.finish())
}

fn id12_truncated(pt: &EvalPoint, n: u32) -> Result<Complex> {
    nielsen_truncated_product(real_field(pt, X)?, n)
}

fn id12_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    nielsen_lhs_side(real_field(pt, X)?, NIELSEN_PROBE_N as i64)
}

fn id12_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = real_field(pt, X)?;
    let mut b = SideBuilder::new(Rhs, Form::Exp);
    b.term(Ok(real(-x / 2.0 * (LN2 + 1.0))))?;
    b.term(Ok(real(x / 2.0 * x.ln())))?;
    b.term(lg((x + 1.0) / 2.0).map(|g| -g))?;
    Ok(b.finish())
}

// ID-14

fn id14_check(pt: &EvalPoint, _margin: f64) -> Result<()> {
    let m = pt.req(M)?;
    pt.req(K)?;
    pt.req_n()?;
    require(m.im > 0.0, "Im(m) must be positive")
}

fn id14_lhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let m = pt.req(M)?;
    let k = pt.req(K)?;
    let n = pt.req_n()? as i64;
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        let w = p2(-p);
        b.term((|| {
            let li = polylog(-k, -(I * m * w).exp(), pol)?;
            Ok(w * principal_pow(real(p2(-p - 1)), k)? * li)
        })())?;
        b.term((|| {
            let li = polylog(-k, -(I * m * p2(1 - p)).exp(), pol)?;
            Ok(-w * principal_pow(real(w), k)? * li)
        })())?;
    }
    Ok(b.finish())
}

fn id14_rhs(pt: &EvalPoint, pol: &PrecisionPolicy) -> Result<Side> {
    let m = pt.req(M)?;
    let k = pt.req(K)?;
    let n = pt.req_n()? as i64;
    let half = real(0.5);
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.term((|| {
        let pre = principal_pow(real(2.0), k + 1.0)? * (2.0 * I * m).exp();
        Ok(pre * phi((4.0 * I * m).exp(), -k, half, pol)?)
    })())?;
    b.term((|| {
        let pre = principal_pow(real(p2(-n)), k + 1.0)? * (I * m * p2(-n)).exp();
        Ok(-pre * phi((I * m * p2(1 - n)).exp(), -k, half, pol)?)
    })())?;
    Ok(b.finish())
}

// ID-15

fn id15_check(pt: &EvalPoint, margin: f64) -> Result<()> {
    let x = real(real_field(pt, X)?);
    let n = pt.req_n()? as i64;
    for p in 0..=n + 2 {
        keep_away(dist_tan_pole(x * p2(-p)), margin, "sec argument")?;
    }
    for p in -1..=n + 2 {
        keep_away(dist_csc_pole(x * p2(-p)), margin, "csc/cot argument")?;
    }
    Ok(())
}

fn id15_lhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = pt.req(X)?;
    let n = pt.req_n()? as i64;
    let sec2 = |z: Complex| {
        let s = sec(z);
        s * s
    };
    let mut b = SideBuilder::new(Lhs, Form::Sum);
    for p in 0..=n {
        let w = 4f64.powi((1 - p) as i32);
        b.term(Ok(w * sec2(x * p2(-p - 2))))?;
        b.term(Ok(-3.0 * w * sec2(x * p2(-p - 1))))?;
        b.term(Ok(2.0 * w * sec2(x * p2(-p))))?;
    }
    Ok(b.finish())
}

fn id15_rhs(pt: &EvalPoint, _: &PrecisionPolicy) -> Result<Side> {
    let x = pt.req(X)?;
    let n = pt.req_n()? as i64;
    let sq = |z: Complex| z * z;
    let w = p2(1 - 2 * n);
    let mut b = SideBuilder::new(Rhs, Form::Sum);
    b.term(Ok(-w * sq(csc(x * p2(-n - 2)))))?;
    b.term(Ok(w * sq(csc(x * p2(-n - 1)))))?;
    b.term(Ok(w * sq(sec(x * p2(-n - 2)))))?;
    b.term(Ok(-w * sq(sec(x * p2(-n - 1)))))?;
    b.term(Ok(32.0 * cot(x) * csc(x)))?;
    b.term(Ok(-32.0 * cot(2.0 * x) * csc(2.0 * x)))?;
    Ok(b.finish())
}
