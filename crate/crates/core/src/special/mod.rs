//! Special functions used by the identity registry: the Hurwitz-Lerch zeta
//! function (series and integral forms), Hurwitz zeta, polylogarithm,
//! log-gamma, digamma, harmonic numbers and the first generalized Stieltjes
//! constant.

mod gamma;
mod lerch;
mod stieltjes;
mod zeta;

pub use gamma::{digamma, harmonic, log_gamma};
pub use lerch::{lerch_phi, lerch_phi_integral, polylog, LerchParams};
pub use stieltjes::stieltjes_gamma1;
pub use zeta::{hurwitz_zeta, hurwitz_zeta_regularized};

/// B_2, B_4, ..., B_16.
pub(crate) const BERNOULLI_EVEN: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];
