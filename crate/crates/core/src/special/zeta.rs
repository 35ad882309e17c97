use super::BERNOULLI_EVEN;
use crate::error::{Error, Result};
use crate::numerics::{
    check_finite, is_nonpositive_integer, principal_log, principal_pow, CompensatedSum, Complex,
    PrecisionPolicy, ONE,
};

/// (2k)! for k = 1..=6.
const EVEN_FACTORIALS: [f64; 6] = [2.0, 24.0, 720.0, 40320.0, 3628800.0, 479001600.0];

fn check_args(s: Complex, a: Complex) -> Result<()> {
    if ![s.re, s.im, a.re, a.im].iter().all(|x| x.is_finite()) {
        return Err(Error::Domain(
            "hurwitz_zeta with non-finite argument".into(),
        ));
    }
    if is_nonpositive_integer(a) {
        return Err(Error::Domain(format!(
            "hurwitz_zeta shift a = {} is a nonpositive integer",
            a.re
        )));
    }
    Ok(())
}

/// Hurwitz zeta zeta(s, a) = sum_{n>=0} (a+n)^{-s} and its continuation in s.
///
/// Euler-Maclaurin with an N-term head, the integral and half-term
/// corrections and Bernoulli terms through B_10. Shifts with Re(a) <= 0 are
/// first moved into the right half-plane by the forward recurrence.
/// For Re(s) well below zero the head and integral terms cancel and relative
/// accuracy drops to roughly 1e-11.
pub fn hurwitz_zeta(s: Complex, a: Complex, policy: &PrecisionPolicy) -> Result<Complex> {
    check_args(s, a)?;
    if s == ONE {
        return Err(Error::Pole("hurwitz_zeta at s = 1".into()));
    }
    euler_maclaurin(s, a, policy, false)
}

/// zeta(s, a) - 1/(s - 1), which is entire in s; equal to -psi(a) at s = 1.
pub fn hurwitz_zeta_regularized(
    s: Complex,
    a: Complex,
    policy: &PrecisionPolicy,
) -> Result<Complex> {
    check_args(s, a)?;
    euler_maclaurin(s, a, policy, true)
}

/// (e^w - 1)/w without cancellation near w = 0.
fn exprel(w: Complex) -> Complex {
    if w.norm() < 0.5 {
        let mut term = ONE;
        let mut sum = ONE;
        for k in 2..30 {
            term *= w / k as f64;
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (w.exp() - 1.0) / w
    }
}

fn euler_maclaurin(
    s: Complex,
    a: Complex,
    policy: &PrecisionPolicy,
    regularize: bool,
) -> Result<Complex> {
    let mut acc = CompensatedSum::new();
    let mut a = a;
    if a.re <= 0.0 {
        let shift = (-a.re).floor() as usize + 1;
        for j in 0..shift {
            acc.add(principal_pow(a + j as f64, -s)?);
        }
        a += shift as f64;
    }

    let base_n = (s.norm().ceil() + 10.0 - a.re.floor()).max(10.0) as usize;
    let mut n = base_n;
    loop {
        if n > policy.max_terms {
            return Err(Error::Convergence(format!(
                "hurwitz_zeta needs more than {} head terms",
                policy.max_terms
            )));
        }
        let (value, tail_estimate) = em_with_head(s, a, n, regularize, acc)?;
        if tail_estimate <= 1e-3 * policy.rel_tol * value.norm().max(policy.abs_tol) {
            return check_finite(value, "hurwitz_zeta");
        }
        n *= 2;
    }
}

fn em_with_head(
    s: Complex,
    a: Complex,
    n: usize,
    regularize: bool,
    mut acc: CompensatedSum,
) -> Result<(Complex, f64)> {
    for k in 0..n {
        acc.add(principal_pow(a + k as f64, -s)?);
    }
    let x = a + n as f64;
    let ln_x = principal_log(x)?;
    let x_pow = |e: Complex| (e * ln_x).exp();
    let sm1 = s - 1.0;
    if regularize {
        // (x^{1-s} - 1)/(s-1) = -ln x * exprel(-(s-1) ln x)
        acc.add(-ln_x * exprel(-sm1 * ln_x));
    } else {
        acc.add(x_pow(-sm1) / sm1);
    }
    acc.add(0.5 * x_pow(-s));
    // Bernoulli corrections: B_2k/(2k)! * s(s+1)...(s+2k-2) * x^{-s-2k+1}
    let mut rising = s;
    let mut next = 0.0;
    for k in 1..=6 {
        let coeff = BERNOULLI_EVEN[k - 1] / EVEN_FACTORIALS[k - 1];
        let term = coeff * rising * x_pow(-s - (2 * k - 1) as f64);
        if k == 6 {
            next = term.norm();
        } else {
            acc.add(term);
            let j = (2 * k - 1) as f64;
            rising *= (s + j) * (s + j + 1.0);
        }
    }
    Ok((acc.finish()?, next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, real, richardson_derivative_with_step, PI};
    use crate::special::digamma;
    use proptest::prelude::*;

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    fn rel(a: Complex, b: Complex) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn basel() {
        let z = hurwitz_zeta(real(2.0), real(1.0), &pol()).unwrap();
        // oracle: direct sum to 10^6 terms plus integral tail bound 1/N
        let mut acc = CompensatedSum::new();
        let n_terms = 1_000_000u64;
        for k in (1..=n_terms).rev() {
            acc.add(real(1.0 / (k as f64 * k as f64)));
        }
        let direct = acc.value().re + 1.0 / n_terms as f64;
        assert!((z.re - direct).abs() < 1e-11);
        assert!((z.re - PI * PI / 6.0).abs() < 1e-14);
        assert!((z.re - 1.644_934_1).abs() < 1e-7);
    }

    #[test]
    fn recurrence_in_shift() {
        let z2 = hurwitz_zeta(real(2.0), real(2.0), &pol()).unwrap();
        assert!((z2.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn zeta_at_zero() {
        let z = hurwitz_zeta(real(0.0), real(0.25), &pol()).unwrap();
        assert!((z.re - 0.25).abs() < 1e-14);
        // oracle: Richardson limit of values at s = +-0.01 (linear in s near 0)
        let up = hurwitz_zeta(real(0.01), real(0.25), &pol()).unwrap();
        let down = hurwitz_zeta(real(-0.01), real(0.25), &pol()).unwrap();
        let up2 = hurwitz_zeta(real(0.005), real(0.25), &pol()).unwrap();
        let down2 = hurwitz_zeta(real(-0.005), real(0.25), &pol()).unwrap();
        let mid1 = (up + down) * 0.5;
        let mid2 = (up2 + down2) * 0.5;
        let limit = (mid2 * 4.0 - mid1) / 3.0;
        assert!((limit.re - 0.25).abs() < 1e-8);
    }

    #[test]
    fn frozen_values() {
        let cases = [
            (
                c(3.0, 2.0),
                c(0.7, -0.3),
                c(-0.105078606182485451, 0.871200653144518563),
            ),
            (c(-1.5, 0.0), c(2.5, 0.0), c(-2.17419587532892888, 0.0)),
            (
                c(0.5, 10.0),
                c(1.2, 0.0),
                c(-0.0648354349933851661, -1.32587059665404963),
            ),
            (
                c(2.0, 0.0),
                c(-1.5, 0.5),
                c(1.10380249554099377, -0.111892198603484614),
            ),
        ];
        for (s, a, want) in cases {
            let got = hurwitz_zeta(s, a, &pol()).unwrap();
            assert!(
                rel(got, want) < 1e-12,
                "zeta({s}, {a}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            hurwitz_zeta(ONE, real(1.0), &pol()),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            hurwitz_zeta(real(2.0), real(-3.0), &pol()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta(real(2.0), real(0.0), &pol()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn regularized_at_one_is_minus_digamma() {
        for a in [c(1.0, 0.0), c(0.5, 0.0), c(3.2, -1.1), c(40.0, 0.0)] {
            let r = hurwitz_zeta_regularized(ONE, a, &pol()).unwrap();
            assert!((r + digamma(a).unwrap()).norm() < 1e-13, "a = {a}");
        }
    }

    #[test]
    fn regularized_is_smooth_through_one() {
        let f = |s: Complex| hurwitz_zeta_regularized(s, real(1.0), &pol());
        let d = richardson_derivative_with_step(f, ONE, 1e-2).unwrap();
        // -gamma_1 for a = 1
        assert!((d.value.re - 0.072_815_845_483_676_72).abs() < 1e-10);
    }

    proptest! {
        #[test]
        fn shift_recurrence(sr in -1.0f64..6.0, si in -5.0f64..5.0, ar in 0.1f64..6.0, ai in -3.0f64..3.0) {
            let s = c(sr, si);
            prop_assume!((s - 1.0).norm() > 0.1);
            let a = c(ar, ai);
            let lhs = hurwitz_zeta(s, a, &pol()).unwrap();
            let rhs = principal_pow(a, -s).unwrap() + hurwitz_zeta(s, a + 1.0, &pol()).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-11 * lhs.norm().max(rhs.norm()).max(1.0));
        }
    }
}
