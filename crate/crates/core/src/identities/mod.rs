//! Registry of the finite-sum and finite-product identities, each encoded as
//! a pair of evaluable sides over a typed parameter point.

mod point;
mod registry;
mod side;
mod trig;

pub use point::{EvalPoint, Field, MAX_N};
pub use registry::{nielsen_truncated_product, prudnikov_original, NIELSEN_PROBE_N};
pub use side::{Form, Side};

use crate::error::{Error, Result, SideTag};
use crate::numerics::{Complex, PrecisionPolicy};
use serde::Serialize;

/// How the two sides of an identity are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompareMode {
    Relative,
    Absolute,
    /// |exp(lhs) - exp(rhs)| relative to max(|exp(lhs)|, |exp(rhs)|).
    ExpEquality,
    /// lhs - rhs = 2 pi i k for an integer k, which is reported.
    #[serde(rename = "mod_2pi_i")]
    Mod2PiI,
    /// Convergence of a truncated form towards the right-hand side.
    Trend,
}

impl CompareMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            CompareMode::Relative => "relative",
            CompareMode::Absolute => "absolute",
            CompareMode::ExpEquality => "exp_equality",
            CompareMode::Mod2PiI => "mod_2pi_i",
            CompareMode::Trend => "trend",
        }
    }
}

impl std::fmt::Display for CompareMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Post-evaluation corruption used to check that comparisons can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Negate the right-hand-side term of largest magnitude.
    FlipLargestRhsTerm,
}

pub(crate) type Evaluator = fn(&EvalPoint, &PrecisionPolicy) -> Result<Side>;
pub(crate) type Checker = fn(&EvalPoint, f64) -> Result<()>;
pub(crate) type Probe = fn(&EvalPoint, u32) -> Result<Complex>;

/// One identity: schema, domain constraints and the two side evaluators.
#[derive(Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub title: &'static str,
    pub summary: &'static str,
    pub schema: &'static [Field],
    pub constraints: &'static str,
    pub compare_mode: CompareMode,
    /// Tolerance used when no override is given. For trend mode it bounds
    /// the final truncation error.
    pub default_tol: f64,
    pub mutation: Option<Mutation>,
    pub(crate) lhs: Evaluator,
    pub(crate) rhs: Evaluator,
    pub(crate) check: Checker,
    pub(crate) truncated: Option<Probe>,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("title", &self.title)
            .field("schema", &self.schema)
            .field("compare_mode", &self.compare_mode)
            .field("mutation", &self.mutation)
            .finish()
    }
}

impl IdentitySpec {
    /// Schema and domain check. `margin` is the minimum distance kept from
    /// every excluded singularity; zero only rejects exact hits.
    pub fn check_point(&self, point: &EvalPoint, margin: f64) -> Result<()> {
        point.check_schema(self.schema)?;
        (self.check)(point, margin)
    }

    /// Both sides in structured form, with any mutation applied.
    pub fn evaluate(&self, point: &EvalPoint, policy: &PrecisionPolicy) -> Result<(Side, Side)> {
        self.check_point(point, 0.0)?;
        let lhs = (self.lhs)(point, policy)?;
        let mut rhs = (self.rhs)(point, policy)?;
        if let Some(Mutation::FlipLargestRhsTerm) = self.mutation {
            rhs.flip_largest();
        }
        Ok((lhs, rhs))
    }

    /// Both sides as values.
    pub fn evaluate_values(
        &self,
        point: &EvalPoint,
        policy: &PrecisionPolicy,
    ) -> Result<(Complex, Complex)> {
        let (l, r) = self.evaluate(point, policy)?;
        Ok((l.value(SideTag::Lhs)?, r.value(SideTag::Rhs)?))
    }

    /// Left-hand side truncated at order `n`, for entries stated as a limit.
    pub fn truncated_lhs(&self, point: &EvalPoint, n: u32) -> Option<Result<Complex>> {
        self.truncated.map(|f| {
            self.check_point(point, 0.0)?;
            f(point, n)
        })
    }

    /// A copy whose right-hand side has its largest term negated.
    pub fn mutated(&self) -> IdentitySpec {
        IdentitySpec {
            mutation: Some(Mutation::FlipLargestRhsTerm),
            ..self.clone()
        }
    }
}

/// All sixteen registry entries in stable order.
pub fn list_identities() -> Vec<IdentitySpec> {
    registry::all()
}

pub fn find_identity(id: &str) -> Result<IdentitySpec> {
    list_identities()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Evaluates both sides of identity `id` at `point`.
pub fn evaluate_sides(
    id: &str,
    point: &EvalPoint,
    policy: &PrecisionPolicy,
) -> Result<(Complex, Complex)> {
    find_identity(id)?.evaluate_values(point, policy)
}

#[cfg(test)]
mod tests;
