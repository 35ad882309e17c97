use super::hurwitz_zeta_regularized;
use crate::error::Result;
use crate::numerics::{richardson_derivative_with_step, Complex, PrecisionPolicy, ONE};

const STEP: f64 = 1e-2;

/// First generalized Stieltjes constant gamma_1(a), the negated s-derivative
/// of zeta(s, a) - 1/(s - 1) at s = 1.
pub fn stieltjes_gamma1(a: Complex, policy: &PrecisionPolicy) -> Result<Complex> {
    let f = |s: Complex| hurwitz_zeta_regularized(s, a, policy);
    let d = richardson_derivative_with_step(f, ONE, STEP)?;
    Ok(-d.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, principal_log, real, EULER_GAMMA};
    use crate::special::hurwitz_zeta;
    use proptest::prelude::*;

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    /// Independent oracle: unregularized zeta at 1 +- h, the -1/(s-1) parts
    /// cancel in the central difference.
    fn oracle(a: Complex) -> Complex {
        let p = pol();
        let levels: Vec<Complex> = [1e-2, 5e-3, 2.5e-3]
            .iter()
            .map(|&h| {
                let up = hurwitz_zeta(real(1.0 + h), a, &p).unwrap();
                let down = hurwitz_zeta(real(1.0 - h), a, &p).unwrap();
                let reg_up = up - 1.0 / h;
                let reg_down = down + 1.0 / h;
                (reg_up - reg_down) / (2.0 * h)
            })
            .collect();
        let r1 = (levels[1] * 4.0 - levels[0]) / 3.0;
        let r2 = (levels[2] * 4.0 - levels[1]) / 3.0;
        -(r2 * 16.0 - r1) / 15.0
    }

    #[test]
    fn classical_constant() {
        let g = stieltjes_gamma1(ONE, &pol()).unwrap();
        assert!((g - oracle(ONE)).norm() < 1e-8);
        assert!((g.re + 0.072_815_845_4).abs() < 1e-9);
        let g2 = stieltjes_gamma1(real(2.0), &pol()).unwrap();
        assert!((g2 - g).norm() < 1e-9);
    }

    #[test]
    fn at_one_half() {
        let g = stieltjes_gamma1(real(0.5), &pol()).unwrap();
        assert!((g - oracle(real(0.5))).norm() < 1e-8);
        let ln2 = 2f64.ln();
        let g1 = -0.072_815_845_483_676_72;
        let expected = g1 - 2.0 * EULER_GAMMA * ln2 - ln2 * ln2;
        assert!((g.re - expected).abs() < 1e-8);
        assert!((g.re + 1.353_459_680_804_941_5).abs() < 1e-8);
    }

    #[test]
    fn large_argument() {
        let g = stieltjes_gamma1(real(150.0), &pol()).unwrap();
        assert!((g.re + 12.536_516_053_422_056).abs() < 1e-7);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn shift_recurrence(ar in 0.2f64..6.0, ai in -3.0f64..3.0) {
            let a = c(ar, ai);
            let lhs = stieltjes_gamma1(a + 1.0, &pol()).unwrap();
            let rhs = stieltjes_gamma1(a, &pol()).unwrap() - principal_log(a).unwrap() / a;
            prop_assert!((lhs - rhs).norm() < 1e-7);
        }
    }
}
