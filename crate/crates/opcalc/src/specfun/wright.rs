//! Wright-type series used by the resolvent kernels of perturbed Bessel
//! equations.

use crate::error::{Error, Result};
use crate::specfun::gamma::rgamma;

/// Sum of the series
///
/// sum_{k>=1} z^k / (Gamma(alpha k + (nu-1)/2) Gamma(alpha k - (nu-1)/2)).
///
/// Entire in z for alpha > 0; individual terms with a gamma pole in the
/// denominator drop out.
pub fn wright_s(alpha: f64, nu: f64, z: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::ParameterRange(format!(
            "wright_s requires alpha > 0, got {alpha}"
        )));
    }
    let half = (nu - 1.0) / 2.0;
    let mut sum = 0.0;
    let mut zk = 1.0;
    let mut prev = f64::INFINITY;
    let mut grew = 0;
    for k in 1..=400 {
        let kf = k as f64;
        zk *= z;
        let term = zk * rgamma(alpha * kf + half) * rgamma(alpha * kf - half);
        sum += term;
        let mag = term.abs();
        if mag < 1e-17 * sum.abs().max(1.0) && k > 2 {
            return Ok(sum);
        }
        if mag > prev {
            grew += 1;
            if grew > 60 {
                break;
            }
        }
        prev = mag;
    }
    Err(Error::Convergence(format!(
        "wright series failed to converge at alpha={alpha}, nu={nu}, z={z}"
    )))
}

#[cfg(test)]
#[path = "../../tests/common/oracles.rs"]
mod oracles;
