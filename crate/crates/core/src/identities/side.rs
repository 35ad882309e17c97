use crate::error::{Error, Result, SideTag};
use crate::numerics::{check_finite, CompensatedSum, Complex, ONE};

/// How a side's terms combine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// product(factors) * sum(terms)
    Sum,
    /// product(factors) * exp(sum(terms))
    Exp,
}

/// One side of an identity, kept as its ingredients so the comparison can
/// estimate cancellation.
#[derive(Debug, Clone, PartialEq)]
pub struct Side {
    pub factors: Vec<Complex>,
    pub terms: Vec<Complex>,
    pub form: Form,
}

impl Side {
    pub fn value(&self, tag: SideTag) -> Result<Complex> {
        let prefactor: Complex = self.factors.iter().product();
        let mut acc = CompensatedSum::new();
        acc.extend(self.terms.iter().copied());
        let sum = acc.finish()?;
        let v = match self.form {
            Form::Sum => prefactor * sum,
            Form::Exp => {
                if sum.re > 709.0 {
                    return Err(Error::Overflow(format!(
                        "{tag} exponent {} too large",
                        sum.re
                    )));
                }
                prefactor * sum.exp()
            }
        };
        check_finite(v, &format!("{tag} value"))
    }

    /// Largest magnitude reached by the running sum of the terms (or by any
    /// single term).
    pub fn partial_magnitude(&self) -> f64 {
        let mut acc = CompensatedSum::new();
        acc.extend(self.terms.iter().copied());
        acc.magnitude()
    }

    /// Cancellation estimate at result scale `scale`.
    pub fn cond(&self, scale: f64) -> f64 {
        match self.form {
            Form::Sum => {
                let pre: f64 = self.factors.iter().map(|f| f.norm()).product();
                pre * self.partial_magnitude() / scale
            }
            // an absolute error in the exponent is a relative error in the value
            Form::Exp => self.partial_magnitude(),
        }
        .max(1.0)
    }

    /// Negates the largest-magnitude term, or the largest factor when the
    /// side has no terms.
    pub fn flip_largest(&mut self) {
        let target = if self.terms.is_empty() {
            &mut self.factors
        } else {
            &mut self.terms
        };
        if let Some(t) = target
            .iter_mut()
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        {
            *t = -*t;
        } else {
            target.push(-ONE);
        }
    }
}

/// Collects the pieces of a side, tagging failures with the slot index.
pub(crate) struct SideBuilder {
    tag: SideTag,
    side: Side,
    slot: usize,
}

impl SideBuilder {
    pub fn new(tag: SideTag, form: Form) -> Self {
        SideBuilder {
            tag,
            side: Side {
                factors: Vec::new(),
                terms: Vec::new(),
                form,
            },
            slot: 0,
        }
    }

    fn checked(&mut self, v: Result<Complex>) -> Result<Complex> {
        let slot = self.slot;
        self.slot += 1;
        let tag = self.tag;
        let wrap = |e: Error| Error::Evaluation {
            side: tag,
            term: slot,
            source: Box::new(e),
        };
        let v = v.map_err(wrap)?;
        check_finite(v, "term").map_err(wrap)
    }

    pub fn term(&mut self, v: Result<Complex>) -> Result<()> {
        let v = self.checked(v)?;
        self.side.terms.push(v);
        Ok(())
    }

    pub fn factor(&mut self, v: Result<Complex>) -> Result<()> {
        let v = self.checked(v)?;
        self.side.factors.push(v);
        Ok(())
    }

    pub fn finish(self) -> Side {
        self.side
    }
}
