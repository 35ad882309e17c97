use super::BERNOULLI_EVEN;
use crate::error::{Error, Result};
use crate::numerics::{
    check_finite, is_nonpositive_integer, principal_log, real, CompensatedSum, Complex,
    EULER_GAMMA, PI,
};

const SHIFT_TARGET: f64 = 10.0;

fn pole_check(z: Complex, name: &str) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("{name} of non-finite argument")));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!(
            "{name} at nonpositive integer {}",
            z.re
        )));
    }
    Ok(())
}

fn shift_count(z: Complex) -> usize {
    if z.re >= SHIFT_TARGET {
        0
    } else {
        (SHIFT_TARGET - z.re).ceil() as usize
    }
}

/// Analytic log-gamma.
///
/// Real on (0, inf) and continuous off the negative real axis. Arguments are
/// shifted to Re >= 10 with log Gamma(z) = log Gamma(z + M) - sum log(z + j),
/// each logarithm principal, then Stirling's series through the B_14 term is
/// applied. The imaginary part is not reduced to (-pi, pi].
pub fn log_gamma(z: Complex) -> Result<Complex> {
    pole_check(z, "log_gamma")?;
    let shift = shift_count(z);
    let mut logs = CompensatedSum::new();
    for j in 0..shift {
        logs.add(principal_log(z + j as f64)?);
    }
    let w = z + shift as f64;
    let ln_w = principal_log(w)?;
    let mut acc = CompensatedSum::new();
    acc.add((w - 0.5) * ln_w);
    acc.add(-w);
    acc.add(real(0.5 * (2.0 * PI).ln()));
    let w2 = w * w;
    let mut wpow = w;
    for (k, b) in BERNOULLI_EVEN.iter().take(7).enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        acc.add(*b / (n * (n - 1.0)) / wpow);
        wpow *= w2;
    }
    acc.add(-logs.value());
    check_finite(acc.finish()?, "log_gamma")
}

/// Digamma psi(z) = Gamma'(z)/Gamma(z), via upward recurrence to Re >= 10 and
/// the asymptotic series through B_14.
pub fn digamma(z: Complex) -> Result<Complex> {
    pole_check(z, "digamma")?;
    let shift = shift_count(z);
    let mut acc = CompensatedSum::new();
    for j in 0..shift {
        acc.add(-1.0 / (z + j as f64));
    }
    let w = z + shift as f64;
    acc.add(principal_log(w)?);
    acc.add(-0.5 / w);
    let w2 = w * w;
    let mut wpow = w2;
    for (k, b) in BERNOULLI_EVEN.iter().take(7).enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        acc.add(-*b / (n * wpow));
        wpow *= w2;
    }
    check_finite(acc.finish()?, "digamma")
}

/// Generalized harmonic number H_z = psi(z + 1) + gamma.
pub fn harmonic(z: Complex) -> Result<Complex> {
    let w = z + 1.0;
    if is_nonpositive_integer(w) {
        return Err(Error::Pole(format!(
            "harmonic number at negative integer {}",
            z.re
        )));
    }
    Ok(digamma(w)? + EULER_GAMMA)
}
