//! Associated Legendre functions of general degree and order, on and off
//! the cut.  These are the kernel functions of the second-kind operator
//! family, so the z -> 1 behaviour matters more than raw speed.
//!
//! Conventions:
//! - `legendre_p` / `legendre_q` live on z > 1.  Q uses the real-valued
//!   convention cos(mu pi) Gamma(nu+mu+1) times Olver's normalized Q, which
//!   agrees with the Hobson function for integer mu and takes its real part
//!   otherwise.
//! - `legendre_p_cut` / `legendre_q_cut` are the Ferrers functions on
//!   -1 < x < 1.

use crate::error::{Error, Result};
use crate::specfun::gamma::{gamma, rgamma};
use crate::specfun::hyper::{hyp2f1, hyp2f1_regularized};
use std::f64::consts::PI;

fn check_offcut(z: f64) -> Result<()> {
    if z > 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "off-cut Legendre function needs z > 1, got {z}"
        )))
    }
}

fn check_cut(x: f64) -> Result<()> {
    if x > -1.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Ferrers function needs -1 < x < 1, got {x}"
        )))
    }
}

fn check_p_order(mu: f64) -> Result<()> {
    if mu >= 0.5 && (mu - mu.round()).abs() < 1e-9 {
        Err(Error::Pole(format!(
            "first-kind prefactor 1/Gamma(1-mu) vanishes at integer mu = {mu}"
        )))
    } else {
        Ok(())
    }
}

/// P_nu^mu(z) for z > 1.
pub fn legendre_p(nu: f64, mu: f64, z: f64) -> Result<f64> {
    check_offcut(z)?;
    check_p_order(mu)?;
    let f = hyp2f1_regularized(-nu, nu + 1.0, 1.0 - mu, (1.0 - z) / 2.0)?;
    Ok(((z + 1.0) / (z - 1.0)).powf(mu / 2.0) * f)
}

/// Ferrers function P_nu^mu(x) for -1 < x < 1.
pub fn legendre_p_cut(nu: f64, mu: f64, x: f64) -> Result<f64> {
    check_cut(x)?;
    check_p_order(mu)?;
    let f = hyp2f1_regularized(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2.0)?;
    Ok(((1.0 + x) / (1.0 - x)).powf(mu / 2.0) * f)
}

/// Q_nu^mu(z) for z > 1 in the real convention described at module level.
pub fn legendre_q(nu: f64, mu: f64, z: f64) -> Result<f64> {
    check_offcut(z)?;
    let t = nu + mu;
    if t <= -0.5 && (t - t.round()).abs() < 1e-9 {
        return Err(Error::Pole(format!(
            "second-kind prefactor Gamma(nu+mu+1) poles at nu+mu = {t}"
        )));
    }
    let a = (nu + mu + 1.0) / 2.0;
    let b = (nu + mu + 2.0) / 2.0;
    let c = nu + 1.5;
    let f = hyp2f1(a, b, c, 1.0 / (z * z))?;
    let pref = (mu * PI).cos() * PI.sqrt() * gamma(nu + mu + 1.0) * rgamma(c)
        / (2.0f64.powf(nu + 1.0) * z.powf(nu + mu + 1.0));
    Ok(pref * (z * z - 1.0).powf(mu / 2.0) * f)
}

/// Ferrers function Q_nu^mu(x) for -1 < x < 1 and noninteger mu, by the
/// two-term connection through the first-kind functions.
fn q_cut_noninteger(nu: f64, mu: f64, x: f64) -> Result<f64> {
    let s = (1.0 - x) / 2.0;
    let ratio = ((1.0 + x) / (1.0 - x)).powf(mu / 2.0);
    let f1 = hyp2f1_regularized(-nu, nu + 1.0, 1.0 - mu, s)?;
    let f2 = hyp2f1_regularized(-nu, nu + 1.0, 1.0 + mu, s)?;
    let second = gamma(nu + mu + 1.0) * rgamma(nu - mu + 1.0) / ratio * f2;
    Ok(PI / (2.0 * (mu * PI).sin()) * ((mu * PI).cos() * ratio * f1 - second))
}

/// Ferrers function Q_nu^mu(x) for -1 < x < 1.  Integer orders are the
/// 0/0 limit of the connection formula, resolved by Richardson
/// extrapolation in the order.
pub fn legendre_q_cut(nu: f64, mu: f64, x: f64) -> Result<f64> {
    check_cut(x)?;
    let m = mu.round();
    if (mu - m).abs() > 1e-9 {
        return q_cut_noninteger(nu, mu, x);
    }
    let eps = 3e-3;
    let avg = |e: f64| -> Result<f64> {
        Ok(0.5 * (q_cut_noninteger(nu, m + e, x)? + q_cut_noninteger(nu, m - e, x)?))
    };
    // Even error expansion in e: (4 A(e/2) - A(e)) / 3 cancels the e^2 term.
    let a1 = avg(eps)?;
    let a2 = avg(eps / 2.0)?;
    Ok((4.0 * a2 - a1) / 3.0)
}

/// d/dz P_nu(z), valid on both sides of the branch point for z > -1.
pub fn legendre_p_deriv(nu: f64, z: f64) -> Result<f64> {
    if z <= -1.0 {
        return Err(Error::Domain(format!(
            "derivative formula needs z > -1, got {z}"
        )));
    }
    let f = hyp2f1(1.0 - nu, nu + 2.0, 2.0, (1.0 - z) / 2.0)?;
    Ok(nu * (nu + 1.0) / 2.0 * f)
}

#[cfg(test)]
#[path = "../../tests/common/oracles.rs"]
mod oracles;

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn first_kind_off_cut() {
        let p = legendre_p(0.7, 0.0, 1.3).unwrap();
        assert_relative_eq!(p, oracles::LEGP_07_0_13, max_relative = 1e-12);
        let p = legendre_p(0.7, 0.3, 1.3).unwrap();
        assert_relative_eq!(p, oracles::LEGP_07_03_13, max_relative = 1e-12);
    }

    #[test]
    fn first_kind_on_cut() {
        let p = legendre_p_cut(0.7, 0.3, 0.6).unwrap();
        assert_relative_eq!(p, oracles::LEGPCUT_07_03_06, max_relative = 1e-12);
        let p = legendre_p_cut(0.7, 0.0, 0.3).unwrap();
        assert_relative_eq!(p, oracles::LEGPCUT_07_0_03, max_relative = 1e-12);
    }

    #[test]
    fn degree_zero_is_one() {
        for &z in &[1.0001, 1.5, 3.0, 50.0] {
            assert_relative_eq!(legendre_p(0.0, 0.0, z).unwrap(), 1.0, max_relative = 1e-14);
        }
        // P_nu(1+) -> 1 for any degree.
        assert_relative_eq!(
            legendre_p(0.7, 0.0, 1.0 + 1e-12).unwrap(),
            1.0,
            max_relative = 1e-10
        );
    }

    #[test]
    fn negative_order_identity() {
        // P_nu^{-nu}(z) = (z^2-1)^{nu/2} / (2^nu Gamma(nu+1)).
        let p = legendre_p(0.7, -0.7, 1.4).unwrap();
        assert_relative_eq!(p, oracles::LEGP_07_M07_14, max_relative = 1e-12);
        let closed = (1.4f64 * 1.4 - 1.0).powf(0.35) / (2.0f64.powf(0.7) * gamma(1.7));
        assert_relative_eq!(p, closed, max_relative = 1e-12);
    }

    #[test]
    fn second_kind_off_cut() {
        let q = legendre_q(0.5, 0.0, 1.25).unwrap();
        assert_relative_eq!(q, oracles::LEGQ_05_0_125, max_relative = 1e-12);
        let q = legendre_q(0.5, 1.0, 1.25).unwrap();
        assert_relative_eq!(q, oracles::LEGQ_05_1_125, max_relative = 1e-12);
        let q = legendre_q(1.3, 1.0, 1.7).unwrap();
        assert_relative_eq!(q, oracles::LEGQ_13_1_17, max_relative = 1e-12);
    }

    #[test]
    fn second_kind_near_branch_point() {
        let q = legendre_q(1.3, 1.0, 1.01).unwrap();
        assert_relative_eq!(q, oracles::LEGQ_13_1_101, max_relative = 1e-11);
        // Q_0^1(z) = -(z^2-1)^{-1/2}.
        for &z in &[1.02, 1.3, 2.4] {
            let q = legendre_q(0.0, 1.0, z).unwrap();
            assert_relative_eq!(q, -1.0 / (z * z - 1.0f64).sqrt(), max_relative = 1e-11);
        }
    }

    #[test]
    fn second_kind_on_cut() {
        let q = legendre_q_cut(0.5, 1.0, 0.3).unwrap();
        assert_relative_eq!(q, oracles::LEGQCUT_05_1_03, max_relative = 1e-9);
        let q = legendre_q_cut(1.3, 1.0, 0.6).unwrap();
        assert_relative_eq!(q, oracles::LEGQCUT_13_1_06, max_relative = 1e-9);
        let q = legendre_q_cut(0.5, 0.0, 0.35).unwrap();
        assert_relative_eq!(q, oracles::LEGQCUT_05_0_035, max_relative = 1e-9);
    }

    #[test]
    fn derivative_both_branches() {
        let d = legendre_p_deriv(0.7, 1.3).unwrap();
        assert_relative_eq!(d, oracles::LEGP_DERIV_07_13, max_relative = 1e-12);
        let d = legendre_p_deriv(0.7, 0.6).unwrap();
        assert_relative_eq!(d, oracles::LEGPCUT_DERIV_07_06, max_relative = 1e-12);
        // P_1(z) = z everywhere.
        assert_relative_eq!(legendre_p_deriv(1.0, 0.4).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(legendre_p_deriv(1.0, 7.0).unwrap(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn domain_and_pole_errors() {
        assert!(legendre_p(0.7, 0.0, 0.9).is_err());
        assert!(legendre_p_cut(0.7, 0.0, 1.1).is_err());
        assert!(legendre_p_cut(0.7, 0.0, -1.0).is_err());
        assert!(legendre_q(0.5, 0.0, 1.0).is_err());
        assert!(legendre_p(0.7, 1.0, 1.3).is_err());
        assert!(legendre_p(0.7, 2.0, 1.3).is_err());
    }
}
