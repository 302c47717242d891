//! Special functions and quadrature.

mod bessel;
#[cfg(test)]
mod bessel_table;
mod gamma;
mod laguerre;
mod quad;

pub use bessel::{bessel_j, bessel_j_prime, bessel_jy, bessel_y, bessel_y_prime, BesselJY};
pub use gamma::{gamma, log_gamma};
pub(crate) use gamma::log_gamma_unchecked;
pub use laguerre::{laguerre, laguerre_derivative};
pub(crate) use laguerre::laguerre_pair;
pub(crate) use quad::neumaier;
pub use quad::{
    gauss_laguerre_rule, integrate, Domain, QuadratureKind, QuadratureResult, QuadratureSpec,
};
