//! Fractional integral operators: Riemann-Liouville, Erdelyi-Kober, the
//! exponentially modified I^mu_e, and fractional powers of the Bessel
//! operator with their resolvent kernel.

use crate::error::{Error, Result};
use crate::gridfn::{differentiate, integrate, GridFunction, QuadratureSpec};
use crate::specfun::{gamma, hyp2f1_regularized, rgamma, wright_s};

const SQRT_PI: f64 = 1.772453850905516;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FracFamily {
    RL,
    EK,
    ExpMod,
    FracBessel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left0Plus,
    RightMinus,
}

#[derive(Clone, Copy, Debug)]
pub struct FracOpDescriptor {
    pub family: FracFamily,
    pub side: Side,
    pub order: f64,
    pub ek_eta: f64,
    pub bessel_nu: f64,
}

impl FracOpDescriptor {
    pub fn rl(side: Side, alpha: f64) -> Self {
        FracOpDescriptor {
            family: FracFamily::RL,
            side,
            order: alpha,
            ek_eta: 0.0,
            bessel_nu: 0.0,
        }
    }

    pub fn ek(side: Side, alpha: f64, eta: f64) -> Self {
        FracOpDescriptor {
            family: FracFamily::EK,
            side,
            order: alpha,
            ek_eta: eta,
            bessel_nu: 0.0,
        }
    }
}

/// Riemann-Liouville integral of a callable supported on `support`,
/// evaluated at one point. When the kernel singularity lands on an endpoint
/// of the integration range it is declared to the quadrature engine as an
/// endpoint weight; otherwise the factor is smooth and stays in the
/// integrand.
pub fn rl_fn(
    side: Side,
    alpha: f64,
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    x: f64,
) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::ParameterRange(format!(
            "Riemann-Liouville integral form needs order > 0, got {alpha}"
        )));
    }
    let (a, b) = support;
    let c = rgamma(alpha);
    let g = alpha - 1.0;
    match side {
        Side::Left0Plus => {
            if x <= a {
                return Ok(0.0);
            }
            let hi = x.min(b);
            let v = if x <= b {
                let spec = QuadratureSpec::new(a, hi).right_exponent(g).tol(1e-11);
                integrate(f, &spec)?
            } else {
                let spec = QuadratureSpec::new(a, hi).tol(1e-11);
                integrate(|t| (x - t).powf(g) * f(t), &spec)?
            };
            Ok(c * v)
        }
        Side::RightMinus => {
            if x >= b {
                return Ok(0.0);
            }
            let lo = x.max(a);
            let v = if x >= a {
                let spec = QuadratureSpec::new(lo, b).left_exponent(g).tol(1e-11);
                integrate(f, &spec)?
            } else {
                let spec = QuadratureSpec::new(lo, b).tol(1e-11);
                integrate(|t| (t - x).powf(g) * f(t), &spec)?
            };
            Ok(c * v)
        }
    }
}

/// Erdelyi-Kober integral of a callable at one point.
pub fn ek_fn(
    side: Side,
    alpha: f64,
    eta: f64,
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    x: f64,
) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::ParameterRange(format!(
            "Erdelyi-Kober integral form needs order > 0, got {alpha}"
        )));
    }
    let (a, b) = support;
    let c = 2.0 * rgamma(alpha);
    let g = alpha - 1.0;
    match side {
        Side::Left0Plus => {
            if x <= a {
                return Ok(0.0);
            }
            let hi = x.min(b);
            // (x^2-t^2)^(alpha-1) splits into (x-t)^(alpha-1) anchored at the
            // upper endpoint when x <= b and a smooth (x+t)^(alpha-1); the
            // power weight t^(2 eta + 1) anchors at the lower end when a = 0.
            let own_left = a == 0.0;
            let own_right = x <= b;
            let mut spec = QuadratureSpec::new(a, hi).tol(1e-11);
            if own_left {
                spec = spec.left_exponent(2.0 * eta + 1.0);
            }
            if own_right {
                spec = spec.right_exponent(g);
            }
            let v = integrate(
                |t| {
                    let mut v = (x + t).powf(g) * f(t);
                    if !own_left {
                        v *= t.powf(2.0 * eta + 1.0);
                    }
                    if !own_right {
                        v *= (x - t).powf(g);
                    }
                    v
                },
                &spec,
            )?;
            Ok(c * x.powf(-2.0 * (alpha + eta)) * v)
        }
        Side::RightMinus => {
            if x >= b {
                return Ok(0.0);
            }
            let lo = x.max(a);
            let own_left = x >= a;
            let mut spec = QuadratureSpec::new(lo, b).tol(1e-11);
            if own_left {
                spec = spec.left_exponent(g);
            }
            let p = 2.0 * (1.0 - alpha - eta) - 1.0;
            let v = integrate(
                |t| {
                    let mut v = (t + x).powf(g) * t.powf(p) * f(t);
                    if !own_left {
                        v *= (t - x).powf(g);
                    }
                    v
                },
                &spec,
            )?;
            Ok(c * x.powf(2.0 * eta) * v)
        }
    }
}

/// I^mu_e of a callable at one point, integral form (mu > 0):
/// (1/Gamma(mu)) int_y^inf (t-y)^(mu-1) e^(y-t) f(t) dt.
pub fn exp_modified_fn(
    mu: f64,
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    y: f64,
) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::ParameterRange(format!(
            "integral form of I^mu_e needs mu > 0, got {mu}"
        )));
    }
    let (a, b) = support;
    if y >= b {
        return Ok(0.0);
    }
    let lo = y.max(a);
    let own = y >= a;
    let mut spec = QuadratureSpec::new(lo, b).tol(1e-11);
    if own {
        spec = spec.left_exponent(mu - 1.0);
    }
    let v = integrate(
        |t| {
            let mut v = (y - t).exp() * f(t);
            if !own {
                v *= (t - y).powf(mu - 1.0);
            }
            v
        },
        &spec,
    )?;
    Ok(rgamma(mu) * v)
}

/// Right-sided fractional Bessel integral of a callable at one point:
/// B^{nu,alpha}_- f(x)
///   = sqrt(pi)/(2^(2 alpha - 1) Gamma(alpha))
///     int_x^b (y^2-x^2)^(alpha-1/2) (y/x)^(nu/2)
///             P^{1/2-alpha}_{nu/2-1}((x/y + y/x)/2) f(y) dy,
/// the fractional power of B_nu = D^2 + (nu/x) D. The Legendre factor is
/// evaluated through the equivalent form
///   (y^2-x^2)^(alpha-1/2) P^{1/2-alpha}_{nu/2-1}
///     = (y-x)^(2 alpha - 1) 2F1reg(1-nu/2, nu/2; 1/2+alpha; -(y-x)^2/(4xy)),
/// whose power factor is an endpoint weight and whose hypergeometric factor
/// stays bounded on the diagonal.
pub fn frac_bessel_fn(
    nu: f64,
    alpha: f64,
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    x: f64,
) -> Result<f64> {
    if !(0.0..1.0).contains(&nu) {
        return Err(Error::ParameterRange(format!(
            "fractional Bessel integral needs nu in [0, 1), got {nu}"
        )));
    }
    if !(alpha > 0.0) {
        return Err(Error::ParameterRange(format!(
            "fractional Bessel integral needs alpha > 0, got {alpha}"
        )));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("evaluation point must be positive, got {x}")));
    }
    let (a, b) = support;
    if x >= b {
        return Ok(0.0);
    }
    let lo = x.max(a);
    let c = SQRT_PI / (2f64.powf(2.0 * alpha - 1.0) * gamma(alpha));
    let g = 2.0 * alpha - 1.0;
    let own = x >= a;
    let mut spec = QuadratureSpec::new(lo, b).tol(1e-11);
    if own {
        spec = spec.left_exponent(g);
    }
    let v = integrate(
        |y| {
            let d = y - x;
            let h = hyp2f1_regularized(
                1.0 - nu / 2.0,
                nu / 2.0,
                0.5 + alpha,
                -d * d / (4.0 * x * y),
            )
            .unwrap_or(f64::NAN);
            let mut v = (y / x).powf(nu / 2.0) * h * f(y);
            if !own {
                v *= d.powf(g);
            }
            v
        },
        &spec,
    )?;
    Ok(c * v)
}

/// Resolvent kernel of the fractional Bessel integral B^{nu,alpha}_{0+}:
/// K(x,y) = (2y/(x^2-y^2)) int_0^1 S_{alpha,nu}(z(t)) dt/(t(1-t))^((nu+1)/2)
/// with z(t) = (t(1-t)(x^2-y^2)^2 / (4y^2 (1-(1-x^2/y^2)t)))^alpha.
/// The kernel does not involve the spectral parameter; `lambda` is accepted
/// for CLI symmetry and only validated.
pub fn resolvent_bessel_kernel(nu: f64, alpha: f64, lambda: f64, x: f64, y: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&nu) {
        return Err(Error::ParameterRange(format!(
            "resolvent kernel needs nu in [0, 1), got {nu}"
        )));
    }
    if !(alpha > 0.0) {
        return Err(Error::ParameterRange(format!(
            "resolvent kernel needs alpha > 0, got {alpha}"
        )));
    }
    if !lambda.is_finite() || lambda == 0.0 {
        return Err(Error::ParameterRange("spectral parameter must be finite and nonzero".into()));
    }
    if !(0.0 < y && y < x) {
        return Err(Error::Domain(format!("kernel needs 0 < y < x, got y = {y}, x = {x}")));
    }
    let spread = (x * x - y * y) * (x * x - y * y) / (4.0 * y * y);
    let slope = x * x / (y * y) - 1.0;
    let g = -(nu + 1.0) / 2.0;
    let spec = QuadratureSpec::new(0.0, 1.0)
        .left_exponent(g)
        .right_exponent(g)
        .tol(1e-11);
    let v = integrate(
        |t| {
            let z = (t * (1.0 - t) * spread / (1.0 + slope * t)).powf(alpha);
            wright_s(alpha, nu, z).unwrap_or(f64::NAN)
        },
        &spec,
    )?;
    Ok(2.0 * y / (x * x - y * y) * v)
}

fn check_family(desc: &FracOpDescriptor, want: FracFamily) -> Result<()> {
    if desc.family != want {
        return Err(Error::ParameterRange(format!(
            "descriptor family {:?} passed to a {:?} operator",
            desc.family, want
        )));
    }
    Ok(())
}

fn apply_pointwise(
    f: &GridFunction,
    support: (f64, f64),
    eval: impl Fn(f64) -> Result<f64>,
) -> Result<GridFunction> {
    let values: Result<Vec<f64>> = f.nodes().iter().map(|&x| eval(x)).collect();
    GridFunction::new(f.nodes().to_vec(), values?, support, f.smoothness())
}

/// Riemann-Liouville fractional integral on a grid function.
pub fn riemann_liouville(desc: &FracOpDescriptor, f: &GridFunction) -> Result<GridFunction> {
    check_family(desc, FracFamily::RL)?;
    let n = f.nodes();
    let sup = f.support();
    let out_support = match desc.side {
        Side::Left0Plus => (sup.0, n[n.len() - 1]),
        Side::RightMinus => (n[0], sup.1),
    };
    apply_pointwise(f, out_support, |x| {
        rl_fn(desc.side, desc.order, &|t| f.eval(t), sup, x)
    })
}

/// Erdelyi-Kober fractional integral on a grid function.
pub fn erdelyi_kober(desc: &FracOpDescriptor, f: &GridFunction) -> Result<GridFunction> {
    check_family(desc, FracFamily::EK)?;
    let n = f.nodes();
    let sup = f.support();
    let out_support = match desc.side {
        Side::Left0Plus => (sup.0, n[n.len() - 1]),
        Side::RightMinus => (n[0], sup.1),
    };
    apply_pointwise(f, out_support, |x| {
        ek_fn(desc.side, desc.order, desc.ek_eta, &|t| f.eval(t), sup, x)
    })
}

/// I^mu_e on a grid function. Negative orders down to mu >= -2 go through
/// the differentiated form
/// ((-1)^M / Gamma(mu+M)) e^y int_y^inf (t-y)^(mu+M-1) d^M/dt^M (e^-t f) dt
/// with M = ceil(-mu); integer negative orders use I^-1_e = I - D directly.
pub fn exp_modified(mu: f64, f: &GridFunction) -> Result<GridFunction> {
    let sup = f.support();
    let out_support = (f.nodes()[0], sup.1);
    if mu == 0.0 {
        return Ok(f.clone());
    }
    if mu > 0.0 {
        return apply_pointwise(f, out_support, |y| {
            exp_modified_fn(mu, &|t| f.eval(t), sup, y)
        });
    }
    if mu < -2.0 {
        return Err(Error::ParameterRange(format!(
            "I^mu_e is implemented for mu >= -2, got {mu}"
        )));
    }
    let m = (-mu).ceil() as u32;
    if f.smoothness() < m {
        return Err(Error::Smoothness(format!(
            "I^({mu})_e needs {m} derivatives, grid function has smoothness {}",
            f.smoothness()
        )));
    }
    if (mu - mu.round()).abs() < 1e-12 {
        // integer order: (I - D)^M
        let mut g = f.clone();
        for _ in 0..m {
            let d = differentiate(&g, 1)?;
            g = g.map(|x_, v| v - d.eval(x_));
        }
        return Ok(g);
    }
    let mut h = f.map(|x, v| (-x).exp() * v);
    for _ in 0..m {
        h = differentiate(&h, 1)?;
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let c = sign * rgamma(mu + m as f64);
    let (a, b) = sup;
    apply_pointwise(f, out_support, |y| {
        if y >= b {
            return Ok(0.0);
        }
        let lo = y.max(a);
        let g = mu + m as f64 - 1.0;
        let own = y >= a;
        let mut spec = QuadratureSpec::new(lo, b).tol(1e-10);
        if own {
            spec = spec.left_exponent(g);
        }
        let v = integrate(
            |t| {
                let mut v = h.eval(t);
                if !own {
                    v *= (t - y).powf(g);
                }
                v
            },
            &spec,
        )?;
        Ok(c * y.exp() * v)
    })
}

/// Right-sided fractional Bessel integral on a grid function.
pub fn frac_bessel(nu: f64, alpha: f64, f: &GridFunction) -> Result<GridFunction> {
    let out_support = (f.nodes()[0], f.support().1);
    apply_pointwise(f, out_support, |x| {
        frac_bessel_fn(nu, alpha, &|t| f.eval(t), f.support(), x)
    })
}

#[cfg(test)]
#[path = "../tests/common/oracles.rs"]
mod oracles;
