use crate::error::{Error, Result};
use crate::numerics::Complex;
use serde::Serialize;

/// Largest permitted n; keeps 2^n and 4^n scalings well inside double range.
pub const MAX_N: u32 = 24;

/// Free parameter names used by the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    A,
    M,
    K,
    N,
    X,
    R,
    Z,
    S,
}

impl Field {
    pub const ALL: [Field; 8] = [
        Field::A,
        Field::M,
        Field::K,
        Field::N,
        Field::X,
        Field::R,
        Field::Z,
        Field::S,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Field::A => "a",
            Field::M => "m",
            Field::K => "k",
            Field::N => "n",
            Field::X => "x",
            Field::R => "r",
            Field::Z => "z",
            Field::S => "s",
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete assignment of an identity's free parameters.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EvalPoint {
    pub a: Option<Complex>,
    pub m: Option<Complex>,
    pub k: Option<Complex>,
    pub n: Option<u32>,
    pub x: Option<Complex>,
    pub r: Option<Complex>,
    pub z: Option<Complex>,
    pub s: Option<Complex>,
}

impl EvalPoint {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets a complex field. Panics if `field` is `N`; use [`EvalPoint::with_n`].
    pub fn with(mut self, field: Field, value: Complex) -> Self {
        *self.slot(field).expect("n is not a complex field") = Some(value);
        self
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    fn slot(&mut self, field: Field) -> Option<&mut Option<Complex>> {
        match field {
            Field::A => Some(&mut self.a),
            Field::M => Some(&mut self.m),
            Field::K => Some(&mut self.k),
            Field::N => None,
            Field::X => Some(&mut self.x),
            Field::R => Some(&mut self.r),
            Field::Z => Some(&mut self.z),
            Field::S => Some(&mut self.s),
        }
    }

    /// Complex value of `field`; `n` is returned as a real number.
    pub fn get(&self, field: Field) -> Option<Complex> {
        match field {
            Field::A => self.a,
            Field::M => self.m,
            Field::K => self.k,
            Field::N => self.n.map(|n| Complex::new(n as f64, 0.0)),
            Field::X => self.x,
            Field::R => self.r,
            Field::Z => self.z,
            Field::S => self.s,
        }
    }

    pub fn present(&self) -> Vec<Field> {
        Field::ALL
            .iter()
            .copied()
            .filter(|f| self.get(*f).is_some())
            .collect()
    }

    /// Errors unless exactly the fields in `schema` are set and n <= MAX_N.
    pub fn check_schema(&self, schema: &[Field]) -> Result<()> {
        for f in Field::ALL {
            let want = schema.contains(&f);
            let have = self.get(f).is_some();
            if want && !have {
                return Err(Error::Constraint(format!("missing field {f}")));
            }
            if have && !want {
                return Err(Error::Constraint(format!("unexpected field {f}")));
            }
        }
        if let Some(n) = self.n {
            if n > MAX_N {
                return Err(Error::Constraint(format!("n = {n} exceeds {MAX_N}")));
            }
        }
        for f in schema {
            if let Some(v) = self.get(*f) {
                if !(v.re.is_finite() && v.im.is_finite()) {
                    return Err(Error::Constraint(format!("field {f} is not finite")));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn req(&self, field: Field) -> Result<Complex> {
        self.get(field)
            .ok_or_else(|| Error::Constraint(format!("missing field {field}")))
    }

    pub(crate) fn req_n(&self) -> Result<u32> {
        self.n
            .ok_or_else(|| Error::Constraint("missing field n".into()))
    }
}
