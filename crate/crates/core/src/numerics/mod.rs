//! Complex arithmetic on the principal branch, compensated summation,
//! numerical differentiation and half-line quadrature.

mod complex;
mod diff;
mod policy;
mod quad;
mod sum;

pub use complex::{
    c, check_finite, cis_exp, is_nonpositive_integer, principal_arg, principal_log, principal_pow,
    real, Complex, EULER_GAMMA, I, ONE, PI, ZERO,
};
pub use diff::{richardson_derivative, richardson_derivative_with_step, Derivative};
pub use policy::PrecisionPolicy;
pub use quad::{exp_sinh, Quadrature};
pub use sum::{compensated_sum, CompensatedSum};
