use serde::Serialize;

use crate::error::{Error, Result};

/// Accuracy knobs shared by every evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrecisionPolicy {
    /// Target relative error for series and quadrature.
    pub rel_tol: f64,
    /// Floor used in place of tiny magnitudes when forming relative errors.
    pub abs_tol: f64,
    /// Hard cap on series terms.
    pub max_terms: usize,
    /// Base step for central differences.
    pub diff_step: f64,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_terms: 1_000_000,
            diff_step: 1e-3,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(rel_tol: f64, abs_tol: f64, max_terms: usize, diff_step: f64) -> Result<Self> {
        let p = PrecisionPolicy {
            rel_tol,
            abs_tol,
            max_terms,
            diff_step,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.rel_tol) {
            return Err(Error::Config(format!(
                "rel_tol must be > 0, got {}",
                self.rel_tol
            )));
        }
        if !positive(self.abs_tol) {
            return Err(Error::Config(format!(
                "abs_tol must be > 0, got {}",
                self.abs_tol
            )));
        }
        if self.max_terms < 1 {
            return Err(Error::Config("max_terms must be >= 1".into()));
        }
        if !positive(self.diff_step) {
            return Err(Error::Config(format!(
                "diff_step must be > 0, got {}",
                self.diff_step
            )));
        }
        Ok(())
    }
}
