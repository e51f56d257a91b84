//! The transmutation operator catalog: Sonin-Poisson-Delsarte pair,
//! Buschman-Erdelyi operators of the first, zero-order and second kind, the
//! unitary Sonin-Katrakhov / Poisson-Katrakhov combinations, the Hardy pair,
//! Stieltjes compression, and the generalized shift, together with an
//! intertwining-residual harness.
//!
//! Conventions. Kernels built from Legendre functions use `legendre_p` /
//! `legendre_q` for arguments above 1 and the cut values below 1. The
//! zero-order operators are evaluated in kernel-derivative form wherever
//! that avoids differentiating the input; only the upper Sonin-type operator
//! and the Sonin-Delsarte transform differentiate `f` itself. Second-kind
//! kernels have a simple pole on the diagonal and are integrated in the
//! principal-value sense.

use std::cell::RefCell;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, Warning};
use crate::gridfn::{
    apply_bessel, differentiate, integrate, norm_weighted, BesselOperatorSpec, GridFunction,
    QuadratureSpec,
};
use crate::specfun::{
    gamma, hyp2f1_regularized, legendre_p, legendre_p_deriv, legendre_q, legendre_q_cut, rgamma,
};

/// Operator families addressable by a descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    SpdP,
    SpdS,
    Be1B0p,
    Be1E0p,
    Be1Bm,
    Be1Em,
    Be0S0p,
    Be0P0p,
    Be0Sm,
    Be0Pm,
    Be2S,
    Be2P,
    USk,
    UPk,
    HardyH1,
    HardyH2,
    B110p,
    B11m,
    Stieltjes,
    CNu,
}

pub const ALL_FAMILIES: [Family; 20] = [
    Family::SpdP,
    Family::SpdS,
    Family::Be1B0p,
    Family::Be1E0p,
    Family::Be1Bm,
    Family::Be1Em,
    Family::Be0S0p,
    Family::Be0P0p,
    Family::Be0Sm,
    Family::Be0Pm,
    Family::Be2S,
    Family::Be2P,
    Family::USk,
    Family::UPk,
    Family::HardyH1,
    Family::HardyH2,
    Family::B110p,
    Family::B11m,
    Family::Stieltjes,
    Family::CNu,
];

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::SpdP => "SPD_P",
            Family::SpdS => "SPD_S",
            Family::Be1B0p => "BE1_B0p",
            Family::Be1E0p => "BE1_E0p",
            Family::Be1Bm => "BE1_Bm",
            Family::Be1Em => "BE1_Em",
            Family::Be0S0p => "BE0_S0p",
            Family::Be0P0p => "BE0_P0p",
            Family::Be0Sm => "BE0_Sm",
            Family::Be0Pm => "BE0_Pm",
            Family::Be2S => "BE2_S",
            Family::Be2P => "BE2_P",
            Family::USk => "U_SK",
            Family::UPk => "U_PK",
            Family::HardyH1 => "HARDY_H1",
            Family::HardyH2 => "HARDY_H2",
            Family::B110p => "B11_0p",
            Family::B11m => "B11_m",
            Family::Stieltjes => "STIELTJES",
            Family::CNu => "C_NU",
        }
    }

    /// First-kind operators carry the extra smoothness order mu.
    pub fn is_first_kind(self) -> bool {
        matches!(
            self,
            Family::Be1B0p | Family::Be1E0p | Family::Be1Bm | Family::Be1Em
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|fam| fam.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown operator family `{s}`")))
    }
}

/// sin(pi nu) evaluated on the canonical period, so that norm formulas are
/// exactly 2-periodic in nu.
pub(crate) fn sin_pi_canonical(nu: f64) -> f64 {
    (PI * nu.rem_euclid(2.0)).sin()
}

pub(crate) fn cos_pi_canonical(nu: f64) -> f64 {
    (PI * nu.rem_euclid(2.0)).cos()
}

/// A concrete operator: family plus the degree nu (and order mu for the
/// first-kind family).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatorDescriptor {
    pub family: Family,
    pub nu: f64,
    pub mu: Option<f64>,
}

impl OperatorDescriptor {
    pub fn new(family: Family, nu: f64) -> Self {
        OperatorDescriptor {
            family,
            nu,
            mu: None,
        }
    }

    pub fn first_kind(family: Family, nu: f64, mu: f64) -> Self {
        OperatorDescriptor {
            family,
            nu,
            mu: Some(mu),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.nu.is_finite() {
            return Err(Error::ParameterRange(format!(
                "descriptor nu must be finite, got {}",
                self.nu
            )));
        }
        if self.family.is_first_kind() {
            let mu = self.mu.ok_or_else(|| {
                Error::ParameterRange(format!("{} needs the order mu", self.family))
            })?;
            if !mu.is_finite() || mu > 1.0 {
                return Err(Error::ParameterRange(format!(
                    "first-kind integral form needs mu <= 1 (mu = 1 reduces to the zero-order family), got {mu}"
                )));
            }
            if self.nu < -0.5 {
                return Err(Error::ParameterRange(format!(
                    "first-kind kernels need nu >= -1/2, got {}",
                    self.nu
                )));
            }
        } else if let Some(mu) = self.mu {
            return Err(Error::ParameterRange(format!(
                "mu = {mu} given, but {} does not take an order",
                self.family
            )));
        }
        match self.family {
            Family::SpdP if self.nu <= -0.5 => Err(Error::ParameterRange(format!(
                "Poisson transform needs nu > -1/2, got {}",
                self.nu
            ))),
            Family::SpdS if self.nu >= 1.5 => Err(Error::ParameterRange(format!(
                "Sonin transform with one endpoint subtraction needs nu < 3/2, got {}",
                self.nu
            ))),
            Family::Be2S | Family::Be2P | Family::USk | Family::UPk if self.nu <= -1.5 => {
                Err(Error::ParameterRange(format!(
                    "second-kind kernels need nu > -3/2, got {}",
                    self.nu
                )))
            }
            _ => Ok(()),
        }
    }

    /// Non-fatal flags: the lower Sonin-type and upper Poisson-type
    /// zero-order operators lose L2 boundedness when sin(pi nu) = 1. The
    /// library still evaluates them pointwise.
    pub fn warnings(&self) -> Vec<Warning> {
        let zero_order_unbounded = match self.family {
            Family::Be0S0p | Family::Be0Pm => true,
            Family::Be1B0p | Family::Be1Bm => self.mu == Some(1.0),
            _ => false,
        };
        let mut out = Vec::new();
        if zero_order_unbounded && 1.0 - sin_pi_canonical(self.nu) < 1e-9 {
            out.push(Warning::UnboundedOperator {
                family: self.family.as_str().to_string(),
                nu: self.nu,
            });
        }
        out
    }

    /// Flat `key=value` text form used by the CLI.
    pub fn to_text(&self) -> String {
        let mut s = format!("family={} nu={:?}", self.family, self.nu);
        if let Some(mu) = self.mu {
            s.push_str(&format!(" mu={mu:?}"));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut family = None;
        let mut nu = 0.0;
        let mut mu = None;
        for tok in text.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
            match key {
                "family" => family = Some(val.parse::<Family>()?),
                "nu" => {
                    nu = val
                        .parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad nu `{val}`")))?
                }
                "mu" => {
                    mu = Some(
                        val.parse::<f64>()
                            .map_err(|_| Error::Parse(format!("bad mu `{val}`")))?,
                    )
                }
                other => return Err(Error::Parse(format!("unknown descriptor key `{other}`"))),
            }
        }
        let family = family.ok_or_else(|| Error::Parse("descriptor needs family=...".into()))?;
        let desc = OperatorDescriptor { family, nu, mu };
        desc.validate()?;
        Ok(desc)
    }
}

impl fmt::Display for OperatorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Captures the first error raised inside a quadrature closure; the closure
/// contributes 0 past that point and the error resurfaces afterwards.
struct ErrCell(RefCell<Option<Error>>);

impl ErrCell {
    fn new() -> Self {
        ErrCell(RefCell::new(None))
    }

    fn guard(&self, r: Result<f64>) -> f64 {
        match r {
            Ok(v) => v,
            Err(e) => {
                let mut slot = self.0.borrow_mut();
                if slot.is_none() {
                    *slot = Some(e);
                }
                0.0
            }
        }
    }

    fn take(&self, r: Result<f64>) -> Result<f64> {
        if let Some(e) = self.0.borrow_mut().take() {
            return Err(e);
        }
        r
    }
}

fn needs_derivative(desc: &OperatorDescriptor) -> bool {
    match desc.family {
        Family::Be0Pm | Family::SpdS => true,
        Family::Be1Bm => desc.mu == Some(1.0),
        _ => false,
    }
}

/// Apply the operator to a grid function, evaluating at every node. The
/// result lives on the same grid with full-grid support (most families
/// spread compact supports out to one or both ends).
pub fn apply(desc: &OperatorDescriptor, f: &GridFunction) -> Result<GridFunction> {
    desc.validate()?;
    let df = if needs_derivative(desc) {
        Some(differentiate(f, 1)?)
    } else {
        None
    };
    let nodes = f.nodes().to_vec();
    let mut values = Vec::with_capacity(nodes.len());
    for &x in &nodes {
        values.push(eval_node(desc, f, df.as_ref(), x)?);
    }
    let support = (nodes[0], *nodes.last().unwrap());
    GridFunction::new(nodes, values, support, f.smoothness())
}

/// Evaluate the operator at a single point without materializing the whole
/// output grid. Used for compositions where only samples are needed.
pub fn apply_at(desc: &OperatorDescriptor, f: &GridFunction, x: f64) -> Result<f64> {
    desc.validate()?;
    let df = if needs_derivative(desc) {
        Some(differentiate(f, 1)?)
    } else {
        None
    };
    eval_node(desc, f, df.as_ref(), x)
}

fn eval_node(
    desc: &OperatorDescriptor,
    f: &GridFunction,
    df: Option<&GridFunction>,
    x: f64,
) -> Result<f64> {
    let nu = desc.nu;
    match desc.family {
        Family::SpdP => ev_spd_p(f, nu, x),
        Family::SpdS => ev_spd_s(f, df.expect("derivative precomputed"), nu, x),
        Family::Be0S0p => ev_s0p(f, nu, x),
        Family::Be0P0p => ev_p0p(f, nu, x),
        Family::Be0Sm => ev_sm(f, nu, x),
        Family::Be0Pm => ev_pm(f, df.expect("derivative precomputed"), nu, x),
        Family::Be1B0p | Family::Be1E0p | Family::Be1Bm | Family::Be1Em => {
            ev_be1(desc.family, f, df, nu, desc.mu.expect("validated"), x)
        }
        Family::Be2S => ev_2s(f, nu, x),
        Family::Be2P => ev_2p(f, nu, x),
        Family::USk => {
            let c = (0.5 * PI * nu).cos();
            let s = (0.5 * PI * nu).sin();
            let mut v = 0.0;
            if c != 0.0 {
                v += c * ev_sm(f, nu, x)?;
            }
            if s != 0.0 {
                v -= s * ev_2s(f, nu, x)?;
            }
            Ok(v)
        }
        Family::UPk => {
            let c = (0.5 * PI * nu).cos();
            let s = (0.5 * PI * nu).sin();
            let mut v = 0.0;
            if c != 0.0 {
                v += c * ev_p0p(f, nu, x)?;
            }
            if s != 0.0 {
                v -= s * ev_2p(f, nu, x)?;
            }
            Ok(v)
        }
        Family::HardyH1 => ev_h1(f, x),
        Family::HardyH2 => ev_h2(f, x),
        Family::B110p => Ok(f.eval(x) - ev_h1(f, x)?),
        Family::B11m => Ok(f.eval(x) - ev_h2(f, x)?),
        Family::Stieltjes => ev_stieltjes(f, x),
        Family::CNu => Ok(f.eval(x) - sin_pi_canonical(nu) / PI * ev_stieltjes(f, x)?),
    }
}

/// Poisson transform: (1/(Gamma(nu+1) 2^nu)) int_0^1 (1-u^2)^(nu-1/2) f(xu) du.
fn ev_spd_p(f: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, _) = f.support();
    if x <= a {
        return Ok(0.0);
    }
    let c = rgamma(nu + 1.0) / 2f64.powf(nu);
    let g = nu - 0.5;
    let spec = QuadratureSpec::new(0.0, 1.0).right_exponent(g);
    let v = integrate(|u| (1.0 + u).powf(g) * f.eval(x * u), &spec)?;
    Ok(c * v)
}

/// Sonin transform, derivative taken under the integral and the endpoint
/// singularity handled by subtraction, which continues the integral form
/// past nu = 1/2 up to 3/2. With g(u) = u^(2nu+1) [f(xu) + xu f'(xu)]:
/// c int_0^1 (1-u^2)^(-nu-1/2) [g(u) - g(1)] du
///   + 2^(nu-1/2) sqrt(pi) / Gamma(1-nu) * g(1).
fn ev_spd_s(f: &GridFunction, df: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, _) = f.support();
    if x <= a {
        return Ok(0.0);
    }
    let lam = -nu - 0.5;
    let c = 2f64.powf(nu + 0.5) * rgamma(0.5 - nu);
    let bh = 2f64.powf(nu - 0.5) * PI.sqrt() * rgamma(1.0 - nu);
    let g1 = f.eval(x) + x * df.eval(x);
    let spec = QuadratureSpec::new(0.0, 1.0).right_exponent(lam + 1.0);
    let v = integrate(
        |u| {
            let d = 1.0 - u;
            if d == 0.0 {
                // endpoint-transform samples can round onto u = 1, where the
                // owned weight factor vanishes; any finite value works
                return 0.0;
            }
            let t = x * u;
            let gt = u.powf(2.0 * nu + 1.0) * (f.eval(t) + t * df.eval(t));
            -(1.0 + u).powf(lam) * (g1 - gt) / d
        },
        &spec,
    )?;
    Ok(c * v + bh * g1)
}

/// Lower Sonin-type zero-order operator, kernel-derivative form:
/// f(x) + int_a^x P'_nu(x/y) f(y) dy/y.
fn ev_s0p(f: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let base = f.eval(x);
    let hi = x.min(b);
    if hi <= a {
        return Ok(base);
    }
    let ec = ErrCell::new();
    let spec = QuadratureSpec::new(a, hi);
    let v = integrate(
        |y| ec.guard(legendre_p_deriv(nu, x / y)) * f.eval(y) / y,
        &spec,
    );
    Ok(base + ec.take(v)?)
}

/// Lower Poisson-type zero-order operator:
/// f(x) - (1/x) int_a^x P'_nu(y/x) f(y) dy.
fn ev_p0p(f: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let base = f.eval(x);
    let hi = x.min(b);
    if hi <= a {
        return Ok(base);
    }
    let ec = ErrCell::new();
    let spec = QuadratureSpec::new(a, hi);
    let v = integrate(
        |y| ec.guard(legendre_p_deriv(nu, y / x)) * f.eval(y),
        &spec,
    );
    Ok(base - ec.take(v)? / x)
}

/// Upper Sonin-type zero-order operator:
/// f(x) - int_x^b P'_nu(x/y) f(y) dy/y.
fn ev_sm(f: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let base = f.eval(x);
    let lo = x.max(a);
    if lo >= b {
        return Ok(base);
    }
    let ec = ErrCell::new();
    let spec = QuadratureSpec::new(lo, b);
    let v = integrate(
        |y| ec.guard(legendre_p_deriv(nu, x / y)) * f.eval(y) / y,
        &spec,
    );
    Ok(base - ec.take(v)?)
}

/// Upper Poisson-type zero-order operator on the derivative:
/// int_x^b P_nu(y/x) (-f'(y)) dy.
fn ev_pm(f: &GridFunction, df: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let lo = x.max(a);
    if lo >= b {
        return Ok(0.0);
    }
    let ec = ErrCell::new();
    let spec = QuadratureSpec::new(lo, b);
    let v = integrate(
        |y| -ec.guard(legendre_p(nu, 0.0, (y / x).max(1.0))) * df.eval(y),
        &spec,
    );
    ec.take(v)
}

/// First-kind operators. The Legendre kernel collapses to
/// dist^(-mu) 2F1reg(-nu, nu+1; 1-mu; w) with the hypergeometric argument w
/// depending on the variant; mu = 1 reduces exactly to the zero-order
/// family and is delegated.
fn ev_be1(
    family: Family,
    f: &GridFunction,
    df: Option<&GridFunction>,
    nu: f64,
    mu: f64,
    x: f64,
) -> Result<f64> {
    if mu == 1.0 {
        return match family {
            Family::Be1B0p => ev_s0p(f, nu, x),
            Family::Be1E0p => ev_p0p(f, nu, x),
            Family::Be1Bm => ev_pm(f, df.expect("derivative precomputed"), nu, x),
            Family::Be1Em => ev_sm(f, nu, x),
            _ => unreachable!(),
        };
    }
    let (a, b) = f.support();
    let c = 1.0 - mu;
    let ec = ErrCell::new();
    let lower = matches!(family, Family::Be1B0p | Family::Be1E0p);
    let v = if lower {
        if x <= a {
            return Ok(0.0);
        }
        let hi = x.min(b);
        let warg = |t: f64| match family {
            Family::Be1B0p => -(x - t) / (2.0 * t),
            _ => (x - t) / (2.0 * x),
        };
        if x <= b {
            let mut spec = QuadratureSpec::new(a, hi);
            if mu != 0.0 {
                spec = spec.right_exponent(-mu);
            }
            integrate(
                |t| ec.guard(hyp2f1_regularized(-nu, nu + 1.0, c, warg(t))) * f.eval(t),
                &spec,
            )
        } else {
            let spec = QuadratureSpec::new(a, hi);
            integrate(
                |t| {
                    (x - t).powf(-mu)
                        * ec.guard(hyp2f1_regularized(-nu, nu + 1.0, c, warg(t)))
                        * f.eval(t)
                },
                &spec,
            )
        }
    } else {
        if x >= b {
            return Ok(0.0);
        }
        let lo = x.max(a);
        let warg = |t: f64| match family {
            Family::Be1Bm => -(t - x) / (2.0 * x),
            _ => (t - x) / (2.0 * t),
        };
        if x >= a {
            let mut spec = QuadratureSpec::new(lo, b);
            if mu != 0.0 {
                spec = spec.left_exponent(-mu);
            }
            integrate(
                |t| ec.guard(hyp2f1_regularized(-nu, nu + 1.0, c, warg(t))) * f.eval(t),
                &spec,
            )
        } else {
            let spec = QuadratureSpec::new(lo, b);
            integrate(
                |t| {
                    (t - x).powf(-mu)
                        * ec.guard(hyp2f1_regularized(-nu, nu + 1.0, c, warg(t)))
                        * f.eval(t)
                },
                &spec,
            )
        }
    };
    ec.take(v)
}

/// Second-kind Sonin-type operator; principal value across y = x.
fn ev_2s(f: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let ec = ErrCell::new();
    let lower = |y: f64| {
        -ec.guard(legendre_q(nu, 1.0, x / y)) * f.eval(y) / (x * x - y * y).sqrt()
    };
    let upper = |y: f64| {
        ec.guard(legendre_q_cut(nu, 1.0, x / y)) * f.eval(y) / (y * y - x * x).sqrt()
    };
    let v = if x <= a {
        integrate(upper, &QuadratureSpec::new(a, b))
    } else if x >= b {
        integrate(lower, &QuadratureSpec::new(a, b))
    } else {
        let spec = QuadratureSpec::new(a, b).principal_value_at(x);
        integrate(
            |y| {
                if y < x {
                    lower(y)
                } else if y > x {
                    upper(y)
                } else {
                    0.0
                }
            },
            &spec,
        )
    };
    Ok(2.0 / PI * ec.take(v)?)
}

/// Second-kind Poisson-type operator; principal value across y = x. The
/// transpose of the Sonin-type kernel: cut value below the diagonal with a
/// plus sign, branch value above with a minus.
fn ev_2p(f: &GridFunction, nu: f64, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let ec = ErrCell::new();
    let lower = |y: f64| {
        ec.guard(legendre_q_cut(nu, 1.0, y / x)) * f.eval(y) / (x * x - y * y).sqrt()
    };
    let upper = |y: f64| {
        -ec.guard(legendre_q(nu, 1.0, y / x)) * f.eval(y) / (y * y - x * x).sqrt()
    };
    let v = if x <= a {
        integrate(upper, &QuadratureSpec::new(a, b))
    } else if x >= b {
        integrate(lower, &QuadratureSpec::new(a, b))
    } else {
        let spec = QuadratureSpec::new(a, b).principal_value_at(x);
        integrate(
            |y| {
                if y < x {
                    lower(y)
                } else if y > x {
                    upper(y)
                } else {
                    0.0
                }
            },
            &spec,
        )
    };
    Ok(2.0 / PI * ec.take(v)?)
}

/// Averaging Hardy operator (1/x) int_0^x f.
fn ev_h1(f: &GridFunction, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let hi = x.min(b);
    if hi <= a {
        return Ok(0.0);
    }
    let v = integrate(|t| f.eval(t), &QuadratureSpec::new(a, hi))?;
    Ok(v / x)
}

/// Complementary Hardy operator int_x^inf f(y) dy/y.
fn ev_h2(f: &GridFunction, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    let lo = x.max(a);
    if lo >= b {
        return Ok(0.0);
    }
    integrate(|y| f.eval(y) / y, &QuadratureSpec::new(lo, b))
}

/// Stieltjes transform int_0^inf f(t)/(x+t) dt.
fn ev_stieltjes(f: &GridFunction, x: f64) -> Result<f64> {
    let (a, b) = f.support();
    integrate(|t| f.eval(t) / (x + t), &QuadratureSpec::new(a, b))
}

/// Generalized shift along the Bessel structure: the spherical mean
/// T_x^y f = C_nu int_0^pi f(sqrt(x^2+y^2-2xy cos t)) sin^(2nu) t dt with
/// C_nu normalizing T_x^y 1 = 1. Errors if [|x-y|, x+y] exits the grid.
pub fn generalized_shift(nu: f64, f: &GridFunction, x: f64, y: f64) -> Result<f64> {
    if nu <= -0.5 {
        return Err(Error::ParameterRange(format!(
            "generalized shift needs nu > -1/2, got {nu}"
        )));
    }
    if x < 0.0 || y < 0.0 {
        return Err(Error::Domain(format!(
            "shift arguments must be nonnegative, got x = {x}, y = {y}"
        )));
    }
    let nodes = f.nodes();
    let (grid_lo, grid_hi) = (nodes[0], nodes[nodes.len() - 1]);
    let reach_lo = (x - y).abs();
    let reach_hi = x + y;
    if reach_lo < grid_lo || reach_hi > grid_hi {
        return Err(Error::Domain(format!(
            "reachable range [{reach_lo}, {reach_hi}] exits the grid [{grid_lo}, {grid_hi}]"
        )));
    }
    if y == 0.0 {
        return Ok(f.eval(x));
    }
    if x == 0.0 {
        return Ok(f.eval(y));
    }
    let c = gamma(nu + 1.0) / (PI.sqrt() * gamma(nu + 0.5));
    let g = 2.0 * nu;
    let spec = QuadratureSpec::new(0.0, PI).left_exponent(g).right_exponent(g);
    let dmin2 = (x - y) * (x - y);
    let v = integrate(
        |t| {
            let s = (0.5 * t).sin();
            let arg = (dmin2 + 4.0 * x * y * s * s).sqrt();
            // sin t / (t (pi - t)) -> 1/pi at both ends; guard samples that
            // round exactly onto an endpoint
            let ratio = if t == 0.0 || t == PI {
                1.0 / PI
            } else {
                t.sin() / (t * (PI - t))
            };
            ratio.powf(g) * f.eval(arg)
        },
        &spec,
    )?;
    Ok(c * v)
}

/// How far `desc` is from intertwining `source` into `target`:
/// || apply(desc, source f) - target apply(desc, f) ||_2 over an interior
/// window of the support (5 grid cells trimmed per side, keeping
/// finite-difference boundary artifacts out), normalized by ||f||_2.
pub fn intertwine_residual(
    desc: &OperatorDescriptor,
    source: BesselOperatorSpec,
    target: BesselOperatorSpec,
    f: &GridFunction,
) -> Result<f64> {
    let bf = apply_bessel(f, source)?;
    let lhs = apply(desc, &bf)?;
    let rhs = apply_bessel(&apply(desc, f)?, target)?;
    let nodes = f.nodes();
    let (a, b) = f.support();
    let ia = nodes.partition_point(|&t| t < a);
    let ib = nodes.partition_point(|&t| t <= b);
    if ib < ia + 11 {
        return Err(Error::InsufficientGrid(format!(
            "support holds {} nodes, need >= 11 for a trimmed window",
            ib - ia
        )));
    }
    let (wa, wb) = (ia + 5, ib - 5);
    let lv = lhs.values();
    let rv = rhs.values();
    let mut acc = 0.0;
    for i in wa..wb - 1 {
        let d0 = lv[i] - rv[i];
        let d1 = lv[i + 1] - rv[i + 1];
        acc += 0.5 * (d0 * d0 + d1 * d1) * (nodes[i + 1] - nodes[i]);
    }
    let nf = norm_weighted(f, 0.0)?;
    if nf == 0.0 {
        return Err(Error::Domain("residual of the zero function".into()));
    }
    Ok(acc.sqrt() / nf)
}

#[cfg(test)]
#[path = "../tests/common/oracles.rs"]
mod oracles;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gridfn::default_grid;
    use crate::specfun::j_norm;
    use approx::assert_relative_eq;

    fn bump12() -> GridFunction {
        GridFunction::bump(default_grid(), 1.0, 2.0).unwrap()
    }

    #[test]
    fn descriptor_text_round_trip() {
        let d = OperatorDescriptor::new(Family::Be0S0p, 1.0);
        assert_eq!(d.to_text(), "family=BE0_S0p nu=1.0");
        assert_eq!(OperatorDescriptor::parse("family=BE0_S0p nu=1.0").unwrap(), d);

        let d = OperatorDescriptor::first_kind(Family::Be1B0p, 0.5, 0.3);
        let round = OperatorDescriptor::parse(&d.to_text()).unwrap();
        assert_eq!(round, d);

        assert!(OperatorDescriptor::parse("family=NOPE nu=1").is_err());
        assert!(OperatorDescriptor::parse("nu=1.0").is_err());
        assert!(OperatorDescriptor::parse("family=BE0_S0p nu=x").is_err());
    }

    #[test]
    fn descriptor_validation() {
        assert!(OperatorDescriptor::new(Family::Be1B0p, 0.5).validate().is_err());
        assert!(OperatorDescriptor::first_kind(Family::Be1B0p, 0.5, 1.2)
            .validate()
            .is_err());
        assert!(OperatorDescriptor::first_kind(Family::Be0S0p, 0.5, 0.3)
            .validate()
            .is_err());
        assert!(OperatorDescriptor::new(Family::SpdP, -0.6).validate().is_err());
        assert!(OperatorDescriptor::new(Family::SpdS, 1.6).validate().is_err());
        assert!(OperatorDescriptor::new(Family::SpdS, 0.7).validate().is_ok());
        assert!(OperatorDescriptor::first_kind(Family::Be1Em, 0.3, 1.0)
            .validate()
            .is_ok());
    }

    #[test]
    fn unbounded_warning_at_half_integer() {
        for nu in [0.5, 2.5, -1.5] {
            let w = OperatorDescriptor::new(Family::Be0S0p, nu).warnings();
            assert_eq!(w.len(), 1, "nu = {nu}");
            let w = OperatorDescriptor::new(Family::Be0Pm, nu).warnings();
            assert_eq!(w.len(), 1, "nu = {nu}");
        }
        assert!(OperatorDescriptor::new(Family::Be0S0p, 0.3).warnings().is_empty());
        // the adjoint pair stays bounded there
        assert!(OperatorDescriptor::new(Family::Be0P0p, 0.5).warnings().is_empty());
        assert!(OperatorDescriptor::first_kind(Family::Be1B0p, 0.5, 1.0)
            .warnings()
            .len() == 1);
        assert!(OperatorDescriptor::first_kind(Family::Be1B0p, 0.5, 0.3)
            .warnings()
            .is_empty());
    }

    #[test]
    fn s0p_at_nu_zero_is_the_identity() {
        let f = bump12();
        let g = apply(&OperatorDescriptor::new(Family::Be0S0p, 0.0), &f).unwrap();
        for (a, b) in f.values().iter().zip(g.values()) {
            assert_eq!(*a, *b);
        }
    }

    #[test]
    fn u_sk_at_nu_zero_is_the_identity() {
        let f = bump12();
        let g = apply(&OperatorDescriptor::new(Family::USk, 0.0), &f).unwrap();
        for (a, b) in f.values().iter().zip(g.values()) {
            assert_eq!(*a, *b);
        }
    }

    #[test]
    fn b11_lower_halves_the_linear_function() {
        let grid = default_grid();
        let support = (grid[0], grid[grid.len() - 1]);
        let f = GridFunction::from_fn(grid, |x| x, support, 6).unwrap();
        let d = OperatorDescriptor::new(Family::B110p, 0.0);
        for x in [0.5, 1.0, 3.0, 10.0] {
            let v = apply_at(&d, &f, x).unwrap();
            assert_relative_eq!(v, x / 2.0, max_relative = 1e-5);
        }
    }

    #[test]
    fn poisson_transform_sends_cosine_to_normalized_bessel() {
        let nu = 0.7;
        let grid = default_grid();
        let support = (grid[0], grid[grid.len() - 1]);
        let f = GridFunction::from_fn(grid, |x| x.cos(), support, 6).unwrap();
        let d = OperatorDescriptor::new(Family::SpdP, nu);
        let g = apply(&d, &f).unwrap();
        let c = g.eval(1.0) / j_norm(nu, 1.0);
        assert_relative_eq!(c, oracles::SPD_P_COS_CONST, max_relative = 1e-7);
        for x in [0.4, 2.3, 6.0, 9.5] {
            assert_relative_eq!(g.eval(x), c * j_norm(nu, x), epsilon = 1e-6);
        }
    }

    #[test]
    fn shift_with_zero_offset_evaluates_in_place() {
        let f = bump12();
        for x in [1.2, 1.7] {
            assert_eq!(generalized_shift(0.8, &f, x, 0.0).unwrap(), f.eval(x));
        }
    }

    #[test]
    fn shift_of_the_constant_is_the_constant() {
        let grid = default_grid();
        let support = (grid[0], grid[grid.len() - 1]);
        let f = GridFunction::from_fn(grid, |_| 1.0, support, 6).unwrap();
        for nu in [0.2, 0.8, 1.5] {
            let v = generalized_shift(nu, &f, 2.0, 1.0).unwrap();
            assert_relative_eq!(v, 1.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn shift_product_formula_for_half_integer_order() {
        let nu = 0.5;
        let grid = default_grid();
        let support = (grid[0], grid[grid.len() - 1]);
        let f = GridFunction::from_fn(grid, |t| j_norm(nu, t), support, 6).unwrap();
        let (x, y) = (1.3, 0.7);
        let v = generalized_shift(nu, &f, x, y).unwrap();
        assert_relative_eq!(v, j_norm(nu, x) * j_norm(nu, y), max_relative = 1e-6);
    }

    #[test]
    fn shift_rejects_arguments_off_the_grid() {
        let f = bump12();
        assert!(matches!(
            generalized_shift(0.5, &f, 30.0, 25.0),
            Err(Error::Domain(_))
        ));
        // x == y reaches down to zero, below any positive grid
        assert!(matches!(
            generalized_shift(0.5, &f, 1.5, 1.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sonin_transform_intertwines_bessel_into_d2() {
        let nu = 0.7;
        let f = GridFunction::bump(crate::gridfn::log_grid(1e-3, 50.0, 4000), 2.0, 5.0).unwrap();
        let d = OperatorDescriptor::new(Family::SpdS, nu);
        let r = intertwine_residual(
            &d,
            BesselOperatorSpec::bessel(nu),
            BesselOperatorSpec::second_derivative(),
            &f,
        )
        .unwrap();
        assert!(r < 1e-4, "residual {r}");
    }

    #[test]
    fn identity_descriptor_has_zero_residual() {
        let f = GridFunction::bump(default_grid(), 2.0, 5.0).unwrap();
        let d = OperatorDescriptor::new(Family::Be0S0p, 0.0);
        let r = intertwine_residual(
            &d,
            BesselOperatorSpec::second_derivative(),
            BesselOperatorSpec::second_derivative(),
            &f,
        )
        .unwrap();
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn s0p_nu1_intertwines_angular_into_d2() {
        let f = GridFunction::bump(default_grid(), 2.0, 5.0).unwrap();
        let d = OperatorDescriptor::new(Family::Be0S0p, 1.0);
        let r = intertwine_residual(
            &d,
            BesselOperatorSpec::angular(1.0),
            BesselOperatorSpec::second_derivative(),
            &f,
        )
        .unwrap();
        assert!(r < 1e-4, "residual {r}");
    }
}
