use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);
pub const PI: f64 = std::f64::consts::PI;
/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[inline]
pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

/// Argument in (-pi, pi]. A negative real number with a signed-zero imaginary
/// part maps to +pi.
#[inline]
pub fn principal_arg(z: Complex) -> f64 {
    if z.im == 0.0 {
        if z.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    }
}

/// log|z| + i arg(z), arg in (-pi, pi].
pub fn principal_log(z: Complex) -> Result<Complex> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("logarithm of non-finite value {z}")));
    }
    Ok(Complex::new(z.norm().ln(), principal_arg(z)))
}

/// z^s = exp(s log z) on the principal branch; 0^s = 0 for Re(s) > 0.
pub fn principal_pow(z: Complex, s: Complex) -> Result<Complex> {
    if s.re == 0.0 && s.im == 0.0 {
        if z.re == 0.0 && z.im == 0.0 {
            return Err(Error::Domain("0 raised to the power 0".into()));
        }
        return Ok(ONE);
    }
    if z.re == 0.0 && z.im == 0.0 {
        if s.re > 0.0 {
            return Ok(ZERO);
        }
        return Err(Error::Domain(format!(
            "0 raised to a power with Re(s) = {} <= 0",
            s.re
        )));
    }
    // Real powers of positive reals stay on the real line exactly.
    if s.im == 0.0 && z.im == 0.0 && z.re > 0.0 {
        return check_finite(real(z.re.powf(s.re)), "power");
    }
    // Small integer exponents: repeated multiplication is exact for i^k, (-1)^k, ...
    if s.im == 0.0 && s.re.fract() == 0.0 && s.re.abs() <= 64.0 {
        return check_finite(z.powi(s.re as i32), "power");
    }
    let w = s * principal_log(z)?;
    cis_exp(w)
}

/// exp(w) with an overflow check.
pub fn cis_exp(w: Complex) -> Result<Complex> {
    if w.re > 709.78 {
        return Err(Error::Overflow(format!(
            "exp({w}) exceeds the double range"
        )));
    }
    let v = w.exp();
    check_finite(v, "exp")
}

/// Rejects NaN/inf components.
#[inline]
pub fn check_finite(z: Complex, what: &str) -> Result<Complex> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(format!(
            "{what} produced a non-finite value"
        )))
    }
}

/// True for 0, -1, -2, ...
pub fn is_nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}
