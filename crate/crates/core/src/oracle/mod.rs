//! Slow reference evaluators used to certify the fast paths.

mod direct;

pub use direct::finite_sum_direct;

use crate::error::{Error, Result};
use crate::numerics::{principal_pow, CompensatedSum, Complex, ONE};
use crate::special::LerchParams;

/// Smallest error bound reported; keeps bounds strictly positive.
pub const BOUND_FLOOR: f64 = 1e-300;

/// An oracle value with an absolute error bound and the work spent.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub value: Complex,
    pub error_bound: f64,
    pub method: &'static str,
    pub work: usize,
}

/// Exactly `terms` terms of sum (v+n)^{-s} z^n, summed in reverse order.
///
/// The bound is |z|^terms / (1 - |z|) times the largest |(v+n)^{-s}| seen
/// on a 100-point probe of the tail.
pub fn phi_series_bruteforce(p: LerchParams, terms: usize) -> Result<OracleReport> {
    let r = p.z.norm();
    if r.is_nan() || r > 0.99 {
        return Err(Error::Domain(format!("oracle needs |z| <= 0.99, got {r}")));
    }
    if crate::numerics::is_nonpositive_integer(p.v) {
        return Err(Error::Domain(
            "oracle shift is a nonpositive integer".into(),
        ));
    }
    if terms == 0 {
        return Err(Error::Domain("oracle needs at least one term".into()));
    }
    let mut acc = CompensatedSum::new();
    for n in (0..terms).rev() {
        let zn = if n == 0 { ONE } else { p.z.powu(n as u32) };
        acc.add(principal_pow(p.v + n as f64, -p.s)? * zn);
    }
    let value = acc.finish()?;

    let stride = (terms / 10).max(1);
    let mut growth = 0.0f64;
    for j in 0..100 {
        let n = terms + j * stride;
        growth = growth.max(principal_pow(p.v + n as f64, -p.s)?.norm());
    }
    let bound = r.powi(terms.min(i32::MAX as usize) as i32) / (1.0 - r) * growth;
    Ok(OracleReport {
        value,
        error_bound: if bound.is_finite() {
            bound.max(BOUND_FLOOR)
        } else {
            f64::MAX
        },
        method: "reverse compensated partial sum",
        work: terms,
    })
}

/// Values f(1), ..., f(n_max) and the absolute differences between
/// consecutive values.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitProbe {
    pub values: Vec<Complex>,
    pub differences: Vec<f64>,
}

impl LimitProbe {
    /// |f(n) - limit| for n = 1..=n_max.
    pub fn errors_against(&self, limit: Complex) -> Vec<f64> {
        self.values.iter().map(|v| (v - limit).norm()).collect()
    }
}

pub fn limit_probe<F>(f: F, n_max: u32) -> Result<LimitProbe>
where
    F: Fn(u32) -> Result<Complex>,
{
    if n_max < 4 {
        return Err(Error::Domain(format!(
            "limit probe needs n_max >= 4, got {n_max}"
        )));
    }
    let values = (1..=n_max).map(&f).collect::<Result<Vec<_>>>()?;
    let differences = values.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    Ok(LimitProbe {
        values,
        differences,
    })
}
