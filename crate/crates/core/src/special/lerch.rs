use super::log_gamma;
use crate::error::{Error, Result};
use crate::numerics::{
    check_finite, exp_sinh, is_nonpositive_integer, principal_log, principal_pow, CompensatedSum,
    Complex, PrecisionPolicy, ONE, ZERO,
};

/// Arguments of the Hurwitz-Lerch zeta function Phi(z, s, v).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchParams {
    pub z: Complex,
    pub s: Complex,
    pub v: Complex,
}

/// Relative size below which a series term is dropped.
const TERM_EPS: f64 = 1.4e-17;
const TAIL_ORDER_CAP: usize = 200;
/// |z| above which the head/tail evaluation replaces the plain series.
const DIRECT_RADIUS: f64 = 0.5;

impl LerchParams {
    pub fn new(z: Complex, s: Complex, v: Complex) -> Self {
        Self { z, s, v }
    }

    fn check_common(&self) -> Result<()> {
        let parts = [self.z, self.s, self.v];
        if !parts.iter().all(|x| x.re.is_finite() && x.im.is_finite()) {
            return Err(Error::Domain("lerch_phi with non-finite argument".into()));
        }
        if is_nonpositive_integer(self.v) {
            return Err(Error::Domain(format!(
                "lerch_phi shift v = {} is a nonpositive integer",
                self.v.re
            )));
        }
        Ok(())
    }

    /// Checks the domain of the defining power series.
    pub fn validate_series(&self) -> Result<()> {
        self.check_common()?;
        let r = self.z.norm();
        if r < 1.0 {
            return Ok(());
        }
        if self.z == ONE {
            return Err(Error::Domain(
                "lerch_phi series excludes z = 1 (use hurwitz_zeta)".into(),
            ));
        }
        if r <= 1.0 + 4.0 * f64::EPSILON && self.s.re > 1.0 {
            return Ok(());
        }
        Err(Error::Domain(format!(
            "lerch_phi series diverges at |z| = {r}, Re s = {}",
            self.s.re
        )))
    }

    /// Checks the domain of the integral representation.
    pub fn validate_integral(&self) -> Result<()> {
        self.check_common()?;
        if self.v.re <= 0.0 || self.s.re <= 0.0 {
            return Err(Error::Domain(
                "lerch_phi_integral needs Re v > 0 and Re s > 0".into(),
            ));
        }
        if self.z.im == 0.0 && self.z.re >= 1.0 {
            return Err(Error::Domain(format!(
                "lerch_phi_integral with z = {} on the cut [1, inf)",
                self.z.re
            )));
        }
        Ok(())
    }
}

/// Phi(z, s, v) = sum_{n>=0} z^n (v+n)^{-s}, principal powers throughout.
///
/// For |z| <= 0.5 the series is summed directly. Closer to the unit circle
/// the first N terms are summed and the remainder is taken from its
/// expansion in powers of 1/(v+N), which converges quickly once
/// |(v+N) Log z| is large.
pub fn lerch_phi(p: LerchParams, policy: &PrecisionPolicy) -> Result<Complex> {
    p.validate_series()?;
    if p.z == ZERO {
        return principal_pow(p.v, -p.s);
    }
    let value = if p.z.norm() <= DIRECT_RADIUS {
        direct_series(p, policy)?
    } else {
        head_and_tail(p, policy)?
    };
    check_finite(value, "lerch_phi")
}

fn direct_series(p: LerchParams, policy: &PrecisionPolicy) -> Result<Complex> {
    let r = p.z.norm();
    let s_abs = p.s.norm();
    let mut acc = CompensatedSum::new();
    let mut zn = ONE;
    for n in 0..policy.max_terms {
        let w = p.v + n as f64;
        let term = principal_pow(w, -p.s)? * zn;
        acc.add(term);
        // |t_{n+1}/t_n| <= |z| exp(|s| / (|v+n| - 1)) for |v+n| > 1, and the
        // bound decreases with n.
        let wn = w.norm();
        if wn > 2.0 {
            let q = r * (s_abs / (wn - 1.0)).exp();
            if q < 0.9 && term.norm() * q / (1.0 - q) <= TERM_EPS * acc.value().norm() {
                return acc.finish();
            }
        }
        if term == ZERO && n > 0 && wn > 2.0 {
            return acc.finish();
        }
        zn *= p.z;
    }
    Err(Error::Convergence(format!(
        "lerch_phi series needs more than {} terms",
        policy.max_terms
    )))
}

fn head_and_tail(p: LerchParams, policy: &PrecisionPolicy) -> Result<Complex> {
    let log_z = principal_log(p.z)?;
    let dist = log_z.norm();
    let s_abs = p.s.norm();
    let reach = ((40.0 + s_abs) / dist - p.v.re).ceil();
    let n_head = reach.max((1.0 - p.v.re).ceil()).max(1.0);
    if n_head.is_nan() || n_head > policy.max_terms as f64 {
        return Err(Error::Convergence(format!(
            "lerch_phi needs {n_head} head terms, limit is {}",
            policy.max_terms
        )));
    }
    let n_head = n_head as usize;

    let mut acc = CompensatedSum::new();
    for n in 0..n_head {
        let zn = (log_z * n as f64).exp();
        acc.add(principal_pow(p.v + n as f64, -p.s)? * zn);
    }

    let l = p.v + n_head as f64;
    let inv_l = ONE / l;
    let e0 = ONE / (ONE - p.z);
    let mut e = vec![e0];
    let mut pj = ONE;
    let mut tail = CompensatedSum::new();
    tail.add(e0);
    // e_j vanishes for every other j when z = -1, so terms are judged in
    // consecutive pairs.
    let mut prev_mag = f64::INFINITY;
    let mut min_pair = f64::INFINITY;
    let mut converged = false;
    for j in 0..TAIL_ORDER_CAP {
        // (j+1) e_{j+1} = (sum_{i<=j} e_i e_{j-i} - e_j) / L
        let conv: Complex = (0..=j).map(|i| e[i] * e[j - i]).sum();
        let next_e = (conv - e[j]) * inv_l / (j + 1) as f64;
        e.push(next_e);
        pj *= -p.s - j as f64;
        if pj == ZERO {
            converged = true;
            break;
        }
        let term = next_e * pj;
        tail.add(term);
        let mag = term.norm();
        let pair = mag.max(prev_mag);
        prev_mag = mag;
        min_pair = min_pair.min(pair);
        if pair <= TERM_EPS * tail.value().norm() {
            converged = true;
            break;
        }
        // The expansion is asymptotic; stop once terms grow again.
        if pair > 1e3 * min_pair {
            break;
        }
    }
    let tail_sum = tail.finish()?;
    if !converged && min_pair > policy.rel_tol * tail_sum.norm() {
        return Err(Error::Convergence(format!(
            "lerch_phi tail expansion stalled at relative term size {:e}",
            min_pair / tail_sum.norm()
        )));
    }
    let scale = (log_z * n_head as f64).exp() * principal_pow(l, -p.s)?;
    acc.add(scale * tail_sum);
    acc.finish()
}

/// Phi from its Mellin integral:
/// (1/Gamma(s)) int_0^inf t^{s-1} e^{-vt} / (1 - z e^{-t}) dt.
pub fn lerch_phi_integral(p: LerchParams, policy: &PrecisionPolicy) -> Result<Complex> {
    p.validate_integral()?;
    let lg = log_gamma(p.s)?;
    let sm1 = p.s - 1.0;
    let f = |t: f64, ln_t: f64| {
        let log_num = sm1 * ln_t - p.v * t - lg;
        let denom = ONE - p.z * (-t).exp();
        log_num.exp() / denom
    };
    let max_nodes = policy.max_terms.min(100_000);
    let q = exp_sinh(f, policy.rel_tol, max_nodes)?;
    check_finite(q.value, "lerch_phi_integral")
}

/// Li_s(z) = z Phi(z, s, 1).
pub fn polylog(s: Complex, z: Complex, policy: &PrecisionPolicy) -> Result<Complex> {
    Ok(z * lerch_phi(LerchParams::new(z, s, ONE), policy)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, real, PI};
    use crate::special::hurwitz_zeta;
    use proptest::prelude::*;

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    fn phi(z: Complex, s: Complex, v: Complex) -> Complex {
        lerch_phi(LerchParams::new(z, s, v), &pol()).unwrap()
    }

    fn rel(a: Complex, b: Complex) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    /// Straight partial sum in reverse order; fine for small |z|.
    fn brute(z: Complex, s: Complex, v: Complex, terms: usize) -> Complex {
        let mut acc = CompensatedSum::new();
        for n in (0..terms).rev() {
            acc.add(principal_pow(v + n as f64, -s).unwrap() * z.powu(n as u32));
        }
        acc.value()
    }

    #[test]
    fn trivial_examples() {
        let s = c(2.5, 1.0);
        let got = phi(ZERO, s, real(3.0));
        assert_eq!(got, principal_pow(real(3.0), -s).unwrap());
        let g = phi(real(0.5), ZERO, real(7.0));
        assert!((g - 2.0).norm() < 1e-15);
    }

    #[test]
    fn half_two_one() {
        // oracle: 10^6-term partial sum (tail is far below double precision)
        let oracle = brute(real(0.5), real(2.0), ONE, 1_000_000);
        let got = phi(real(0.5), real(2.0), ONE);
        assert!(rel(got, oracle) < 1e-15);
        let ln2 = 2f64.ln();
        let closed = 2.0 * (PI * PI / 12.0 - ln2 * ln2 / 2.0);
        assert!((got.re - closed).abs() < 1e-15);
        assert!((got.re - 1.164_481_052_930_025).abs() < 1e-14);
    }

    #[test]
    fn frozen_values() {
        let cases = [
            (
                c(0.3, 0.4),
                c(2.0, -1.0),
                c(0.7, 0.2),
                c(0.9350592917918284, -0.947412790773931622),
            ),
            (
                c(-0.9, 0.3),
                c(-2.5, 1.0),
                c(1.5, 0.0),
                c(0.277502996772256148, 0.497427773907203822),
            ),
            (
                c(-1.0, 0.0),
                c(2.0, 0.0),
                c(1.0, 0.0),
                c(0.822467033424113218, 0.0),
            ),
            (
                c(0.0, 0.99),
                c(1.5, 0.0),
                c(0.5, 0.0),
                c(2.64625911471371315, 0.437192499007451144),
            ),
            (
                c(0.7, 0.0),
                c(1.5, 0.0),
                c(-2.5, 0.3),
                c(-0.219992740273689297, 0.751791247657551229),
            ),
        ];
        for (z, s, v, want) in cases {
            let got = phi(z, s, v);
            assert!(
                rel(got, want) < 1e-11,
                "Phi({z}, {s}, {v}) = {got}, want {want}"
            );
        }
        let z = (Complex::i() * c(0.01, 0.005)).exp();
        let got = phi(z, c(-3.0, 2.0), c(0.5, -0.2));
        let want = c(1286335740.53169983, -1593355484.83106151);
        assert!(rel(got, want) < 1e-10, "{got}");
    }

    #[test]
    fn near_minus_one_negative_s() {
        // Region where the plain series loses digits; compare against a
        // regularized alternating sum: Abel summation at z = -r with the
        // Euler transform is replaced by the closed form at s = -3:
        // Phi(z, -3, 1) = sum (n+1)^3 z^n = (1 + 4z + z^2) / (1 - z)^4.
        for z in [c(-0.998, 0.0), c(-0.99, 0.05), c(-0.9, -0.4)] {
            let got = phi(z, real(-3.0), ONE);
            let want = (1.0 + 4.0 * z + z * z) / (ONE - z).powu(4);
            assert!(rel(got, want) < 2e-11, "z = {z}: {got} vs {want}");
        }
    }

    #[test]
    fn domain_errors() {
        let bad = [
            LerchParams::new(real(1.0), real(2.0), ONE),
            LerchParams::new(real(1.2), real(2.0), ONE),
            LerchParams::new(real(-1.0), real(1.0), ONE),
            LerchParams::new(real(0.5), real(2.0), real(-2.0)),
            LerchParams::new(c(f64::NAN, 0.0), real(2.0), ONE),
        ];
        for p in bad {
            assert!(
                matches!(lerch_phi(p, &pol()), Err(Error::Domain(_))),
                "{p:?}"
            );
        }
        let p = LerchParams::new(real(2.0), real(2.0), ONE);
        assert!(matches!(
            lerch_phi_integral(p, &pol()),
            Err(Error::Domain(_))
        ));
        let p = LerchParams::new(real(0.5), real(-1.0), ONE);
        assert!(matches!(
            lerch_phi_integral(p, &pol()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn convergence_budget() {
        let tight = PrecisionPolicy {
            max_terms: 5,
            ..pol()
        };
        let p = LerchParams::new(real(0.999), real(2.0), ONE);
        assert!(matches!(lerch_phi(p, &tight), Err(Error::Convergence(_))));
    }

    #[test]
    fn integral_examples() {
        let one = lerch_phi_integral(LerchParams::new(ZERO, ONE, ONE), &pol()).unwrap();
        assert!((one - 1.0).norm() < 1e-9);
        let p = LerchParams::new(real(0.5), real(2.0), ONE);
        let a = lerch_phi_integral(p, &pol()).unwrap();
        assert!(rel(a, lerch_phi(p, &pol()).unwrap()) < 1e-9);
        // oracle: averaged partial sums of the alternating series
        let mut partial = 0.0;
        let mut prev = 0.0;
        for n in 0..100_000 {
            prev = partial;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            partial += sign / (n as f64 + 1.0);
        }
        let averaged = 0.5 * (partial + prev);
        let b = lerch_phi_integral(LerchParams::new(real(-1.0), ONE, ONE), &pol()).unwrap();
        assert!((b.re - averaged).abs() < 1e-9);
        assert!((b.re - 2f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn polylog_examples() {
        assert_eq!(polylog(c(3.0, 1.0), ZERO, &pol()).unwrap(), ZERO);
        let oracle: f64 = (1..10_000).rev().map(|n| n as f64 * 0.5f64.powi(n)).sum();
        let li = polylog(real(-1.0), real(0.5), &pol()).unwrap();
        assert!((li.re - oracle).abs() < 1e-14 && (li.re - 2.0).abs() < 1e-14);
        let oracle: f64 = (1..10_000).rev().map(|n| 0.5f64.powi(n) / n as f64).sum();
        let li = polylog(ONE, real(0.5), &pol()).unwrap();
        assert!((li.re - oracle).abs() < 1e-15 && (li.re - 2f64.ln()).abs() < 1e-15);
        let li = polylog(real(2.0), c(0.0, 0.5), &pol()).unwrap();
        assert!(rel(li, c(-0.0589750744215658635, 0.487222358294522357)) < 1e-13);
        let li = polylog(real(-3.0), real(-0.95), &pol()).unwrap();
        assert!(rel(li, real(0.124671430998240283)) < 1e-11);
    }

    #[test]
    fn zeta_specialization_trend() {
        for (s, a) in [
            (c(2.0, 0.0), real(1.0)),
            (c(2.5, 1.0), c(0.7, 0.3)),
            (c(1.8, -0.5), real(3.0)),
        ] {
            let zeta = hurwitz_zeta(s, a, &pol()).unwrap();
            let e2 = (phi(real(1.0 - 1e-2), s, a) - zeta).norm();
            let e3 = (phi(real(1.0 - 1e-3), s, a) - zeta).norm();
            assert!(e3 < e2, "s = {s}: {e3} !< {e2}");
        }
    }

    fn small_z() -> impl Strategy<Value = Complex> {
        (0.0f64..0.95, -PI..PI).prop_map(|(r, t)| Complex::from_polar(r, t))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn shift_recurrence(z in small_z(), sr in -4.0f64..4.0, si in -3.0f64..3.0, vr in 0.2f64..5.0, vi in -2.0f64..2.0) {
            let s = c(sr, si);
            let v = c(vr, vi);
            let lhs = phi(z, s, v);
            let rhs = z * phi(z, s, v + 1.0) + principal_pow(v, -s).unwrap();
            let scale = lhs.norm().max(rhs.norm()).max(1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-10 * scale, "{lhs} vs {rhs}");
        }

        #[test]
        fn matches_bruteforce_small_z(r in 0.0f64..0.6, t in -PI..PI, sr in -3.0f64..3.0, si in -2.0f64..2.0, vr in 0.3f64..4.0, vi in -2.0f64..2.0) {
            let z = Complex::from_polar(r, t);
            let s = c(sr, si);
            let v = c(vr, vi);
            let want = brute(z, s, v, 400);
            prop_assert!(rel(phi(z, s, v), want) < 1e-12);
        }

        #[test]
        fn polylog_is_z_times_phi(z in small_z(), sr in -3.0f64..3.0, si in -2.0f64..2.0) {
            let s = c(sr, si);
            prop_assert_eq!(polylog(s, z, &pol()).unwrap(), z * phi(z, s, ONE));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn series_matches_integral(r in 0.0f64..0.9, t in -PI..PI, sr in 0.5f64..3.0, si in -2.0f64..2.0, vr in 0.5f64..5.0, vi in -2.0f64..2.0) {
            let z = Complex::from_polar(r, t);
            let p = LerchParams::new(z, c(sr, si), c(vr, vi));
            let series = lerch_phi(p, &pol()).unwrap();
            let integral = lerch_phi_integral(p, &pol()).unwrap();
            let policy = pol();
            prop_assert!((series - integral).norm() <= 10.0 * (policy.rel_tol * series.norm() + policy.abs_tol));
        }
    }
}
