//! Special-function backbone: gamma family, Bessel functions, associated
//! Legendre functions, hypergeometric series.  Everything downstream
//! (kernels, multipliers, norms) reduces to these.

mod bessel;
mod gamma;
mod hyper;
mod legendre;
mod wright;

pub use bessel::{bessel_i, bessel_j, bessel_k, bessel_y, j_norm};
pub use gamma::{beta, cgamma, clgamma, digamma, gamma, lgamma, pochhammer, rgamma};
pub use hyper::{hyp1f1, hyp2f1, hyp2f1_regularized};
pub use legendre::{legendre_p, legendre_p_cut, legendre_p_deriv, legendre_q, legendre_q_cut};
pub use wright::wright_s;
