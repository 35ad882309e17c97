//! Second, independent transcription of every registry identity. Sums and
//! products run from the highest index down.

use crate::error::{Error, Result};
use crate::identities::{EvalPoint, NIELSEN_PROBE_N};
use crate::numerics::{
    compensated_sum, principal_log, principal_pow, Complex, PrecisionPolicy, I, ONE, PI,
};
use crate::special::{
    digamma, harmonic, lerch_phi, log_gamma, polylog, stieltjes_gamma1, LerchParams,
};

fn need(v: Option<Complex>, name: &str) -> Result<Complex> {
    v.ok_or_else(|| Error::Constraint(format!("oracle: field {name} missing")))
}

fn need_n(pt: &EvalPoint) -> Result<i32> {
    pt.n.map(|n| n as i32)
        .ok_or_else(|| Error::Constraint("oracle: field n missing".into()))
}

fn two(e: i32) -> f64 {
    (e as f64).exp2()
}

fn sum_down<F>(hi: i32, lo: i32, f: F) -> Result<Complex>
where
    F: Fn(i32) -> Result<Complex>,
{
    let terms = (lo..=hi).rev().map(f).collect::<Result<Vec<_>>>()?;
    compensated_sum(terms)
}

fn prod_down<F>(hi: i32, lo: i32, f: F) -> Result<Complex>
where
    F: Fn(i32) -> Result<Complex>,
{
    let mut acc = ONE;
    for p in (lo..=hi).rev() {
        acc *= f(p)?;
    }
    Ok(acc)
}

fn lerch(z: Complex, s: Complex, v: Complex, pol: &PrecisionPolicy) -> Result<Complex> {
    lerch_phi(LerchParams::new(z, s, v), pol)
}

fn gamma_real(x: f64) -> Result<f64> {
    Ok(log_gamma(Complex::new(x, 0.0))?.re.exp())
}

/// Both sides of identity `id` at `pt`, written out independently of the
/// registry evaluators.
pub fn finite_sum_direct(
    id: &str,
    pt: &EvalPoint,
    pol: &PrecisionPolicy,
) -> Result<(Complex, Complex)> {
    let cos = |z: Complex| z.cos();
    let sin = |z: Complex| z.sin();
    let ln2 = 2f64.ln();
    match id {
        "ID-00" => {
            let u = need(pt.m, "u")?;
            let n = need_n(pt)?;
            let l = sum_down(n, 0, |p| {
                Ok(-two(-p) * (u * two(-p - 1)).tan() / cos(u * two(-p)))
            })?;
            let r = two(-n) / sin(u * two(-n)) - 2.0 / sin(2.0 * u);
            Ok((l, r))
        }
        "ID-01" => {
            let a = need(pt.a, "a")?;
            let m = need(pt.m, "m")?;
            let k = need(pt.k, "k")?;
            let n = need_n(pt)?;
            let la = principal_log(a)?;
            let l = sum_down(n, 0, |p| {
                let e = (I * m * two(-p)).exp();
                let first = principal_pow(I * two(-p), k)?
                    * e
                    * lerch(
                        -(I * two(1 - p) * m).exp(),
                        -k,
                        ONE - I * two(p - 1) * la,
                        pol,
                    )?;
                let second = principal_pow(I * two(-p - 1), k)?
                    * lerch(-(I * two(-p) * m).exp(), -k, ONE - I * two(p) * la, pol)?;
                Ok(two(-p) * e * (first - second))
            })?;
            let r1 = I
                * principal_pow(I * two(-n), k + 1.0)?
                * (I * m * two(-n)).exp()
                * lerch(
                    (I * two(1 - n) * m).exp(),
                    -k,
                    (ONE - I * two(n) * la) / 2.0,
                    pol,
                )?;
            let r2 = principal_pow(I, k)?
                * principal_pow(Complex::new(2.0, 0.0), k + 1.0)?
                * (2.0 * I * m).exp()
                * lerch((4.0 * I * m).exp(), -k, 0.5 - I * la / 4.0, pol)?;
            Ok((l, r1 + r2))
        }
        "ID-02" => {
            let m = need(pt.m, "m")?;
            let n = need_n(pt)?;
            let l = sum_down(n, 0, |p| {
                Ok(two(-p - 1) * (m * two(-p - 1)).tan() / cos(m * two(-p)))
            })?;
            let r = 1.0 / sin(2.0 * m) - two(-n - 1) / sin(m * two(-n));
            Ok((l, r))
        }
        "ID-03" => {
            let m = need(pt.m, "m")?;
            let r = need(pt.r, "r")?;
            let n = need_n(pt)?;
            let l = prod_down(n, 0, |p| {
                let q = cos(two(-1 - p) * r) / cos(two(-1 - p) * m);
                Ok(cos(two(-p) * m) / cos(two(-p) * r) * q.powu(2))
            })?;
            let rr = (two(-1 - n) * m).tan() * r.tan() / (m.tan() * (two(-1 - n) * r).tan());
            Ok((l, rr))
        }
        "ID-04" => {
            let z = need(pt.z, "z")?;
            let s = need(pt.s, "s")?;
            let a = need(pt.a, "a")?;
            let pw = |b: f64, e: Complex| principal_pow(Complex::new(b, 0.0), e);
            let l = lerch(z, s, a, pol)?;
            let inner = pw(4.0, s)? * z * lerch(-z.powu(2), s, (a + 1.0) / 2.0, pol)?
                + pw(4.0, s)? * lerch(z.powu(2), s, a / 2.0, pol)?
                - 2.0
                    * z.powu(3)
                    * (pw(2.0, s)? * lerch(-z.powu(4), s, (a + 3.0) / 4.0, pol)?
                        - 2.0 * lerch(z.powu(8), s, (a + 3.0) / 8.0, pol)?);
            Ok((l, pw(8.0, -s)? * inner))
        }
        "ID-05" => {
            let x = need(pt.x, "x")?;
            let n = need_n(pt)?;
            let l =
                prod_down(n, 0, |p| {
                    Ok(cos(two(-1 - p) * x).powu(3)
                        / (cos(two(-2 - p) * x).powu(2) * cos(two(-p) * x)))
                })?;
            let r = x.tan() * (two(-2 - n) * x).tan() / ((x / 2.0).tan() * (two(-1 - n) * x).tan());
            Ok((l, r))
        }
        "ID-06" => {
            let x = need(pt.x, "x")?;
            let n = need_n(pt)?;
            let l = prod_down(n, 0, |p| {
                let inner = cos(two(-p - 1) * x) + cos(3.0 * two(-p - 1) * x)
                    - 3.0 * cos(two(-p) * x)
                    + 1.0;
                let ex = (-two(1 - p) * inner / sin(two(1 - p) * x)).exp();
                Ok(
                    cos(two(-p - 2) * x).powu(2) * cos(two(-p) * x) / cos(two(-p - 1) * x).powu(3)
                        * ex,
                )
            })?;
            let cot = |z: Complex| cos(z) / sin(z);
            let ex = two(-n) * (1.0 / sin(two(-n) * x) - 1.0 / sin(two(-n - 1) * x))
                + (x / 2.0).tan()
                - x.tan()
                + cot(x / 2.0)
                - cot(x);
            let r = (x / 2.0).tan()
                * cot(x)
                * (two(-n - 1) * x).tan()
                * cot(two(-n - 2) * x)
                * ex.exp();
            Ok((l, r))
        }
        "ID-07" => {
            let a = need(pt.a, "a")?;
            let n = need_n(pt)?;
            let la = principal_log(a)?;
            let l = sum_down(n, 0, |p| {
                let q = two(p) * la;
                let bracket = 2.0 * log_gamma(-I * two(p - 2) * la)?
                    - 2.0 * log_gamma(-I * two(p - 1) * la)?
                    - 2.0 * log_gamma((-I * q - 2.0) / 4.0)?
                    + 2.0 * log_gamma((-I * q - 1.0) / 2.0)?
                    + principal_log(2.0 * (q - I).powu(2) / (q - 2.0 * I).powu(2))?;
                Ok(two(-p) * bracket)
            })?;
            let inner = 8.0 * log_gamma(-I * la / 4.0 - 0.5)?
                + la * (2.0 * I * principal_log(I * two(-n))? + PI - 2.0 * I * ln2)
                + 8.0 * principal_log(-2.0 - I * la)?
                - 4.0 * (32.0 * PI).ln();
            let r = two(-n - 1)
                * (-two(n) * inner
                    + 4.0 * log_gamma((-I * two(n) * la - 1.0) / 2.0)?
                    + 4.0 * principal_log(-1.0 - I * two(n) * la)?
                    - 2.0 * PI.ln()
                    - 6.0 * ln2);
            Ok((l, r))
        }
        "ID-08" => {
            let a = need(pt.a, "a")?.re;
            let n = need_n(pt)?;
            let lg = |x: f64| log_gamma(Complex::new(x, 0.0));
            let l = sum_down(n, 0, |p| {
                let t = a * two(p);
                let b = 2.0 * lg(two(p - 2) * a)?
                    - 2.0 * lg(two(p - 1) * a)?
                    - 2.0 * lg((t - 2.0) / 4.0)?
                    + 2.0 * lg((t - 1.0) / 2.0)?
                    + (2.0 * (t - 1.0).powi(2) / (t - 2.0).powi(2)).ln();
                Ok(two(-p) * b)
            })?;
            let t = two(n) * a;
            let s2p = (2.0 * PI).sqrt();
            let r = two(-n) * (2.0 * lg((t - 1.0) / 2.0)? + 2.0 * ((t - 1.0) / (2.0 * s2p)).ln())
                - 4.0 * lg((a - 2.0) / 4.0)?
                + a * two(-n - 1).ln()
                + 4.0 * (4.0 * s2p / (a - 2.0)).ln();
            Ok((l, r))
        }
        "ID-09" => {
            let a = need(pt.a, "a")?.re;
            let n = need_n(pt)?;
            let ps = |x: f64| digamma(Complex::new(x, 0.0));
            let l = sum_down(n, 0, |p| {
                let t = a * two(p);
                Ok(4.0 / (t * (t - 3.0) + 2.0) - ps(two(p - 2) * a)?
                    + 2.0 * ps(two(p - 1) * a)?
                    + ps((t - 2.0) / 4.0)?
                    - 2.0 * ps((t - 1.0) / 2.0)?)
            })?;
            let t = a * two(n);
            let r = -2.0
                * (2.0 / (t - 1.0) + ps((t - 1.0) / 2.0)? - 4.0 / (a - 2.0) - ps((a - 2.0) / 4.0)?
                    + two(-n - 1).ln());
            Ok((l, r))
        }
        "ID-10" => {
            let a = need(pt.a, "a")?.re;
            let g = gamma_real;
            let l = g(a / 4.0)?.ln()
                + (g((a - 2.0) / 4.0)? * (g((a - 1.0) / 2.0)? / (g(a / 2.0)? * g(a)?)).sqrt()).ln();
            let r = 2.0
                * (PI.powf(0.375)
                    * 2f64.powf(2.0 - a / 2.0)
                    * (a + 1.0 / (a - 1.0) - 3.0).powf(0.25)
                    / (a - 2.0))
                    .ln();
            Ok((Complex::new(l, 0.0), Complex::new(r, 0.0)))
        }
        "ID-11" | "ID-12" => {
            let x = need(pt.x, "x")?.re;
            let n = if id == "ID-11" {
                need_n(pt)?
            } else {
                NIELSEN_PROBE_N as i32
            };
            let l = prod_down(n, 1, |p| {
                let lg = |y: f64| Ok::<f64, Error>(log_gamma(Complex::new(y, 0.0))?.re);
                let log_base = -two(p - 1) * x * ln2 + lg((two(p) * x + 1.0) / 2.0)?
                    - 2.0 * lg((two(p) * x + 2.0) / 4.0)?;
                Ok(Complex::new((two(-p) * log_base).exp(), 0.0))
            })?;
            let r = if id == "ID-11" {
                let t = two(n) * x;
                2f64.powf(-(n as f64) * x / 2.0 - two(-n))
                    * principal_pow(Complex::new(t - 1.0, 0.0), Complex::new(two(-n), 0.0))?
                    * (two(-n) * log_gamma(Complex::new((t - 1.0) / 2.0, 0.0))?).exp()
                    / gamma_real((x + 1.0) / 2.0)?
            } else {
                Complex::new(
                    (2.0 * std::f64::consts::E).powf(-x / 2.0) * x.powf(x / 2.0)
                        / gamma_real((x + 1.0) / 2.0)?,
                    0.0,
                )
            };
            Ok((l, r))
        }
        "ID-13" => {
            let a = need(pt.a, "a")?.re;
            let n = need_n(pt)?;
            let re = |x: f64| Complex::new(x, 0.0);
            let h = |x: f64| harmonic(re(x));
            let g1 = |x: f64| stieltjes_gamma1(re(x), pol);
            let l = sum_down(n, 0, |p| {
                let t = two(p) * a;
                Ok(
                    principal_log(I * two(1 - p))? * (h(two(p - 2) * a)? - h((t - 2.0) / 4.0)?)
                        + 2.0
                            * principal_log(I * two(-p))?
                            * (h((t - 1.0) / 2.0)? - h(two(p - 1) * a)?)
                        - g1(two(p - 2) * a + 1.0)?
                        + 2.0 * g1(two(p - 1) * a + 1.0)?
                        - 2.0 * g1((t + 1.0) / 2.0)?
                        + g1((t + 2.0) / 4.0)?,
                )
            })?;
            let t = two(n) * a;
            let lo = principal_log(I * two(-n))?;
            let r = (-8.0 * g1((t + 1.0) / 2.0)?
                + 8.0 * lo * digamma(re((t + 1.0) / 2.0))?
                + 8.0 * g1((a + 2.0) / 4.0)?
                + (-8.0 * ln2 - 4.0 * I * PI) * digamma(re((a + 2.0) / 4.0))?
                + 4.0 * lo.powu(2)
                + (PI - 2.0 * I * ln2).powu(2))
                / 4.0;
            Ok((l, r))
        }
        "ID-14" => {
            let m = need(pt.m, "m")?;
            let k = need(pt.k, "k")?;
            let n = need_n(pt)?;
            let rp = |b: f64, e: Complex| principal_pow(Complex::new(b, 0.0), e);
            let l = sum_down(n, 0, |p| {
                Ok(two(-p)
                    * (rp(two(-p - 1), k)? * polylog(-k, -(I * two(-p) * m).exp(), pol)?
                        - rp(two(-p), k)? * polylog(-k, -(I * two(1 - p) * m).exp(), pol)?))
            })?;
            let r = rp(2.0, k + 1.0)?
                * (2.0 * I * m).exp()
                * lerch((4.0 * I * m).exp(), -k, Complex::new(0.5, 0.0), pol)?
                - rp(two(-n), k + 1.0)?
                    * (I * m * two(-n)).exp()
                    * lerch((I * two(1 - n) * m).exp(), -k, Complex::new(0.5, 0.0), pol)?;
            Ok((l, r))
        }
        "ID-15" => {
            let x = need(pt.x, "x")?;
            let n = need_n(pt)?;
            let sec2 = |z: Complex| 1.0 / cos(z).powu(2);
            let csc2 = |z: Complex| 1.0 / sin(z).powu(2);
            let l = sum_down(n, 0, |p| {
                Ok(4f64.powi(1 - p)
                    * (sec2(two(-p - 2) * x) - 3.0 * sec2(two(-p - 1) * x)
                        + 2.0 * sec2(two(-p) * x)))
            })?;
            let r = two(1 - 2 * n)
                * (-csc2(two(-n - 2) * x) + csc2(two(-n - 1) * x) + sec2(two(-n - 2) * x)
                    - sec2(two(-n - 1) * x))
                + 32.0 * cos(x) / sin(x).powu(2)
                - 32.0 * cos(2.0 * x) / sin(2.0 * x).powu(2);
            Ok((l, r))
        }
        "ID-02-PRUDNIKOV-ORIGINAL" => {
            let (l, r) = finite_sum_direct("ID-02", pt, pol)?;
            Ok((l, -r))
        }
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}
