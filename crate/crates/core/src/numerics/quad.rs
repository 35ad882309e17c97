use super::complex::Complex;
use super::sum::CompensatedSum;
use crate::error::{Error, Result};

/// Result of a half-line quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: Complex,
    pub error: f64,
    pub nodes: usize,
}

const HALF_PI: f64 = std::f64::consts::FRAC_PI_2;

/// Exp-sinh quadrature of a complex integrand over (0, inf).
///
/// Uses t = exp(pi/2 sinh u) and a trapezoid rule in u whose step is halved
/// until successive estimates agree to `rel_tol`. The integrand receives both
/// `t` and `ln t` so it can work in log space where `t` would over- or
/// underflow. Non-finite integrand values at extreme nodes are treated as
/// negligible only if they occur where |u| > 3.
pub fn exp_sinh<F>(f: F, rel_tol: f64, max_nodes: usize) -> Result<Quadrature>
where
    F: Fn(f64, f64) -> Complex,
{
    const U_MAX: f64 = 6.5;
    let node = |u: f64| -> Result<Complex> {
        let ln_t = HALF_PI * u.sinh();
        let t = ln_t.exp();
        // dt = t * pi/2 cosh(u) du
        let w = HALF_PI * u.cosh() * t;
        let y = f(t, ln_t) * w;
        if y.re.is_finite() && y.im.is_finite() {
            Ok(y)
        } else if u.abs() > 3.0 {
            Ok(Complex::new(0.0, 0.0))
        } else {
            Err(Error::Convergence(format!(
                "integrand not finite at t = {t}"
            )))
        }
    };

    let mut h = 0.5;
    let mut acc = CompensatedSum::new();
    let mut nodes = 0usize;
    let mut k = -((U_MAX / h) as i64);
    while (k as f64) * h <= U_MAX {
        acc.add(node(k as f64 * h)?);
        nodes += 1;
        k += 1;
    }
    let mut estimate = acc.value() * h;

    loop {
        // Refine: add the odd nodes of the halved grid.
        h /= 2.0;
        let mut k = -((U_MAX / h) as i64) | 1;
        while (k as f64) * h <= U_MAX {
            acc.add(node(k as f64 * h)?);
            nodes += 1;
            k += 2;
        }
        let next = acc.finish()? * h;
        let diff = (next - estimate).norm();
        estimate = next;
        if diff <= rel_tol * next.norm() || diff == 0.0 {
            return Ok(Quadrature {
                value: next,
                error: diff.max(f64::EPSILON * next.norm()),
                nodes,
            });
        }
        if nodes >= max_nodes {
            return Err(Error::Convergence(format!(
                "quadrature did not settle after {nodes} nodes (last change {diff:e})"
            )));
        }
    }
}
