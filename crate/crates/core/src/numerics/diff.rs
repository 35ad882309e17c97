use super::complex::Complex;
use super::policy::PrecisionPolicy;
use crate::error::Result;

/// A derivative value with an a-posteriori error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivative {
    pub value: Complex,
    pub error: f64,
}

/// Central-difference derivative along the real direction with two levels of
/// Richardson extrapolation (steps h, h/2, h/4), h = `policy.diff_step`.
pub fn richardson_derivative<F>(f: F, x0: Complex, policy: &PrecisionPolicy) -> Result<Derivative>
where
    F: Fn(Complex) -> Result<Complex>,
{
    richardson_derivative_with_step(f, x0, policy.diff_step)
}

pub fn richardson_derivative_with_step<F>(f: F, x0: Complex, h: f64) -> Result<Derivative>
where
    F: Fn(Complex) -> Result<Complex>,
{
    const LEVELS: usize = 3;
    let mut table = [[Complex::new(0.0, 0.0); LEVELS]; LEVELS];
    let mut fmax = 0.0f64;
    let mut step = h;
    for row in 0..LEVELS {
        let hi = Complex::new(step, 0.0);
        let fp = f(x0 + hi)?;
        let fm = f(x0 - hi)?;
        fmax = fmax.max(fp.norm()).max(fm.norm());
        table[row][0] = (fp - fm) / (2.0 * step);
        let mut factor = 4.0;
        for col in 1..=row {
            table[row][col] =
                (table[row][col - 1] * factor - table[row - 1][col - 1]) / (factor - 1.0);
            factor *= 4.0;
        }
        step /= 2.0;
    }
    let best = table[LEVELS - 1][LEVELS - 1];
    let truncation = (best - table[LEVELS - 1][LEVELS - 2])
        .norm()
        .max((best - table[LEVELS - 2][LEVELS - 2]).norm());
    // Roundoff of the smallest-step difference, amplified by the extrapolation weights.
    let roundoff = 64.0 * f64::EPSILON * fmax / (h / 4.0);
    Ok(Derivative {
        value: best,
        error: truncation + roundoff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, principal_log, real};
    use proptest::prelude::*;

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    #[test]
    fn square_at_three() {
        let d = richardson_derivative(|z| Ok(z * z), real(3.0), &pol()).unwrap();
        assert!((d.value - real(6.0)).norm() < 1e-9);
    }

    #[test]
    fn exp_at_zero() {
        let d = richardson_derivative(|z| Ok(z.exp()), real(0.0), &pol()).unwrap();
        assert!((d.value - real(1.0)).norm() < 1e-9);
        assert!(d.error < 1e-9);
    }

    #[test]
    fn log_at_two() {
        let d = richardson_derivative(principal_log, real(2.0), &pol()).unwrap();
        assert!((d.value - real(0.5)).norm() < 1e-9);
    }

    #[test]
    fn stencil_failure_propagates() {
        // log has a branch point at 0; the stencil at x0 = 0 hits it.
        let r = richardson_derivative(principal_log, real(0.0) + c(1e-3, 0.0), &pol());
        assert!(r.is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn estimate_bounds_actual_error(re in -2.0f64..2.0, im in -2.0f64..2.0, which in 0usize..3) {
            let x0 = c(re, im);
            let (d, exact) = match which {
                0 => (richardson_derivative(|z| Ok(z.exp()), x0, &pol()).unwrap(), x0.exp()),
                1 => (richardson_derivative(|z| Ok(z.sin()), x0, &pol()).unwrap(), x0.cos()),
                _ => {
                    // 1/(z - p) with the pole kept well away from the stencil
                    let p = c(3.5, 0.0);
                    (
                        richardson_derivative(|z| Ok(1.0 / (z - p)), x0, &pol()).unwrap(),
                        -1.0 / ((x0 - p) * (x0 - p)),
                    )
                }
            };
            prop_assert!((d.value - exact).norm() <= d.error.max(1e-15));
        }
    }
}
