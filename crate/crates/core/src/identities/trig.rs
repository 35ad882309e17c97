use crate::error::{Error, Result};
use crate::numerics::{Complex, ONE, PI};

pub fn tan(z: Complex) -> Complex {
    z.tan()
}

pub fn sec(z: Complex) -> Complex {
    ONE / z.cos()
}

pub fn csc(z: Complex) -> Complex {
    ONE / z.sin()
}

pub fn cot(z: Complex) -> Complex {
    z.cos() / z.sin()
}

/// Distance from z to the nearest point of offset + k*period.
fn lattice_distance(z: Complex, offset: f64, period: f64) -> f64 {
    let k = ((z.re - offset) / period).round();
    (z - Complex::new(offset + k * period, 0.0)).norm()
}

/// Distance to the nearest pole of tan and sec.
pub fn dist_tan_pole(z: Complex) -> f64 {
    lattice_distance(z, PI / 2.0, PI)
}

/// Distance to the nearest pole of csc and cot.
pub fn dist_csc_pole(z: Complex) -> f64 {
    lattice_distance(z, 0.0, PI)
}

/// Distance to the nearest nonpositive integer.
pub fn dist_nonpos_int(z: Complex) -> f64 {
    let k = z.re.round().min(0.0);
    (z - Complex::new(k, 0.0)).norm()
}

/// Guard helper: fails with a constraint error naming `what` when `d < margin`
/// or `d == 0`.
pub fn keep_away(d: f64, margin: f64, what: &str) -> Result<()> {
    if d > 0.0 && d >= margin {
        Ok(())
    } else {
        Err(Error::Constraint(format!(
            "{what} is {d:.3e} from a singularity (margin {margin})"
        )))
    }
}

pub fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Constraint(what.to_string()))
    }
}
