//! Grid functions on the positive half-axis and the quadrature engine.
//!
//! Every integral operator in the crate funnels through [`integrate`]:
//! adaptive Gauss-Kronrod with declared algebraic endpoint singularities
//! removed by power substitutions, semi-infinite intervals mapped to (0,1),
//! and principal values computed by symmetric excision with Richardson
//! extrapolation in the excision radius.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::io::{BufRead, Write};

// 21-point Kronrod rule with embedded 10-point Gauss rule (positive
// abscissae; the rule is symmetric).
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// Quadrature request: interval, declared endpoint weight exponents,
/// optional interior principal-value point, and target tolerance.
///
/// A nonzero exponent means the engine itself multiplies the integrand by
/// (t-lo)^left_exponent or (hi-t)^right_exponent, evaluating those factors
/// exactly in the substituted variable; the caller passes only the
/// remaining smooth factor. Recomputing x-t near an endpoint in caller
/// code cancels catastrophically, which is exactly what this avoids.
#[derive(Clone, Debug)]
pub struct QuadratureSpec {
    pub lo: f64,
    pub hi: f64,
    pub left_exponent: f64,
    pub right_exponent: f64,
    pub principal_value_at: Option<f64>,
    pub tol: f64,
}

impl QuadratureSpec {
    pub fn new(lo: f64, hi: f64) -> Self {
        QuadratureSpec {
            lo,
            hi,
            left_exponent: 0.0,
            right_exponent: 0.0,
            principal_value_at: None,
            tol: 1e-10,
        }
    }

    pub fn left_exponent(mut self, g: f64) -> Self {
        self.left_exponent = g;
        self
    }

    pub fn right_exponent(mut self, g: f64) -> Self {
        self.right_exponent = g;
        self
    }

    pub fn principal_value_at(mut self, c: f64) -> Self {
        self.principal_value_at = Some(c);
        self
    }

    pub fn tol(mut self, t: f64) -> Self {
        self.tol = t;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::ParameterRange("quadrature tol must be > 0".into()));
        }
        if self.left_exponent <= -1.0 || self.right_exponent <= -1.0 {
            return Err(Error::ParameterRange(format!(
                "endpoint exponents must be > -1 for integrability, got {} / {}",
                self.left_exponent, self.right_exponent
            )));
        }
        if !(self.lo < self.hi) {
            return Err(Error::ParameterRange(format!(
                "empty quadrature interval [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.hi.is_infinite() && self.right_exponent != 0.0 {
            return Err(Error::ParameterRange(
                "right endpoint exponent is meaningless with an infinite upper limit".into(),
            ));
        }
        if let Some(c) = self.principal_value_at {
            if c <= self.lo || (self.hi.is_finite() && c >= self.hi) {
                return Err(Error::ParameterRange(format!(
                    "principal value point {c} outside ({}, {})",
                    self.lo, self.hi
                )));
            }
        }
        Ok(())
    }
}

struct Panel {
    a: f64,
    b: f64,
    val: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn gk21(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<(f64, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut resk = 0.0;
    let mut resg = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let (f1, f2) = if i == 10 {
            let v = f(c);
            (v, 0.0)
        } else {
            (f(c - h * x), f(c + h * x))
        };
        if !f1.is_finite() || !f2.is_finite() {
            let bad = if f1.is_finite() { c + h * x } else { c - h * x };
            return Err(Error::Singularity(format!(
                "integrand not finite at x = {bad:e}"
            )));
        }
        let s = if i == 10 { f1 } else { f1 + f2 };
        resk += wk * s;
        if i % 2 == 1 {
            resg += WG[i / 2] * s;
        } else if i == 10 {
            // the centre belongs to Kronrod only
        }
    }
    Ok((resk * h, ((resk - resg) * h).abs()))
}

fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let (val, err) = gk21(f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, val, err });
    let mut total_val = val;
    let mut total_err = err;
    let span = b - a;
    let max_panels = 4000;
    while total_err > tol * total_val.abs().max(1.0) {
        let worst = heap.pop().expect("heap cannot be empty");
        let width = worst.b - worst.a;
        if heap.len() + 2 > max_panels || width < 1e-15 * span {
            return Err(Error::Convergence(format!(
                "quadrature stalled on [{}, {}]: err {:.3e} with {} panels",
                a,
                b,
                total_err,
                heap.len() + 1
            )));
        }
        let m = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gk21(f, worst.a, m)?;
        let (v2, e2) = gk21(f, m, worst.b)?;
        total_val += v1 + v2 - worst.val;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: m, val: v1, err: e1 });
        heap.push(Panel { a: m, b: worst.b, val: v2, err: e2 });
    }
    Ok(total_val)
}

// Integral of f(t) (t-a)^gamma over (a, b) via t = a + u^p: the weight
// becomes u^{p gamma} exactly, the u-integrand u^{p(gamma+1)-1} f(a+u^p),
// and p is chosen to push that exponent to at least 3.
fn left_transformed(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    gamma: f64,
    tol: f64,
) -> Result<f64> {
    if gamma == 0.0 {
        return adaptive(f, a, b, tol);
    }
    let p = (4.0 / (gamma + 1.0)).ceil().max(1.0);
    let e = p * (gamma + 1.0) - 1.0;
    let g = |u: f64| f(a + u.powf(p)) * p * u.powf(e);
    adaptive(&g, 0.0, (b - a).powf(1.0 / p), tol)
}

// Same for f(t) (b-t)^gamma.
fn right_transformed(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    gamma: f64,
    tol: f64,
) -> Result<f64> {
    if gamma == 0.0 {
        return adaptive(f, a, b, tol);
    }
    let p = (4.0 / (gamma + 1.0)).ceil().max(1.0);
    let e = p * (gamma + 1.0) - 1.0;
    let g = |u: f64| f(b - u.powf(p)) * p * u.powf(e);
    adaptive(&g, 0.0, (b - a).powf(1.0 / p), tol)
}

// Integral of f(t) (t-lo)^gl (hi-t)^gr over a finite interval. Whichever
// weight is anchored at the far end of a half is smooth there, so it is
// folded into the integrand directly.
fn finite_piece(
    f: &dyn Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    gl: f64,
    gr: f64,
    tol: f64,
) -> Result<f64> {
    if gl != 0.0 && gr != 0.0 {
        let mid = 0.5 * (lo + hi);
        let fl = |t: f64| f(t) * (hi - t).powf(gr);
        let fr = |t: f64| f(t) * (t - lo).powf(gl);
        Ok(left_transformed(&fl, lo, mid, gl, 0.5 * tol)?
            + right_transformed(&fr, mid, hi, gr, 0.5 * tol)?)
    } else if gl != 0.0 {
        left_transformed(f, lo, hi, gl, tol)
    } else {
        right_transformed(f, lo, hi, gr, tol)
    }
}

// Semi-infinite piece over (lo, inf): t = lo + s/(1-s), so the left weight
// (t-lo)^gl = s^gl (1-s)^-gl splits into an exact weight in s and a smooth
// factor. The Kronrod nodes never touch s = 1, so decaying integrands need
// no special casing.
fn infinite_piece(f: &dyn Fn(f64) -> f64, lo: f64, gl: f64, tol: f64) -> Result<f64> {
    let g = |s: f64| {
        let d = 1.0 - s;
        f(lo + s / d) * d.powf(-gl - 2.0)
    };
    finite_piece(&g, 0.0, 1.0, gl, 0.0, tol)
}

fn no_pv_integrate(f: &dyn Fn(f64) -> f64, spec: &QuadratureSpec) -> Result<f64> {
    if spec.hi.is_infinite() {
        infinite_piece(f, spec.lo, spec.left_exponent, spec.tol)
    } else {
        finite_piece(
            f,
            spec.lo,
            spec.hi,
            spec.left_exponent,
            spec.right_exponent,
            spec.tol,
        )
    }
}

/// Evaluate the integral described by `spec`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let fd: &dyn Fn(f64) -> f64 = &f;
    let Some(c) = spec.principal_value_at else {
        return no_pv_integrate(fd, spec);
    };

    // Symmetric excision: S(eps) = int over (lo, c-eps) + (c+eps, hi). For a
    // simple pole the excised piece is 2 sum g^(2k)(0) eps^(2k+1)/(2k+1)! in
    // terms of the regular part g, so S(eps) = PV + c1 eps + c3 eps^3 + ...
    // with odd powers only. Second-kind Legendre kernels additionally carry
    // eps^(2k+1) log eps terms near the pole; one elimination pass at
    // exponent p turns c eps^p log eps into a pure eps^p term, so running
    // each exponent twice (1,1,3,3,5 over six halved radii) clears both the
    // plain and the logarithmic ladder through eps0^5.
    let room = if spec.hi.is_finite() {
        (c - spec.lo).min(spec.hi - c)
    } else {
        c - spec.lo
    };
    let eps0 = 0.25 * room;
    let tol = spec.tol / 8.0;

    let (gl, gr) = (spec.left_exponent, spec.right_exponent);
    let left_outer = {
        let g = |t: f64| {
            if gr != 0.0 {
                f(t) * (spec.hi - t).powf(gr)
            } else {
                f(t)
            }
        };
        let sub = QuadratureSpec {
            lo: spec.lo,
            hi: c - eps0,
            left_exponent: gl,
            right_exponent: 0.0,
            principal_value_at: None,
            tol,
        };
        no_pv_integrate(&g, &sub)?
    };
    let right_outer = {
        let g = |t: f64| {
            if gl != 0.0 {
                f(t) * (t - spec.lo).powf(gl)
            } else {
                f(t)
            }
        };
        let sub = QuadratureSpec {
            lo: c + eps0,
            hi: spec.hi,
            left_exponent: 0.0,
            right_exponent: gr,
            principal_value_at: None,
            tol,
        };
        no_pv_integrate(&g, &sub)?
    };

    // full integrand, weights included; the strips sit away from both ends
    let fw = |t: f64| {
        let mut v = f(t);
        if gl != 0.0 {
            v *= (t - spec.lo).powf(gl);
        }
        if gr != 0.0 {
            v *= (spec.hi - t).powf(gr);
        }
        v
    };

    let levels = 6;
    let mut eps = Vec::with_capacity(levels);
    let mut s = Vec::with_capacity(levels);
    eps.push(eps0);
    s.push(left_outer + right_outer);
    for k in 1..levels {
        let e_prev = eps[k - 1];
        let e = 0.5 * e_prev;
        // strips between the previous and current excision radii
        let l = adaptive(&fw, c - e_prev, c - e, tol)?;
        let r = adaptive(&fw, c + e, c + e_prev, tol)?;
        eps.push(e);
        s.push(s[k - 1] + l + r);
    }

    let mut t = s;
    for (j, p) in [1i32, 1, 3, 3, 5].iter().enumerate() {
        let f = 2f64.powi(*p);
        for i in (j + 1..levels).rev() {
            t[i] = (f * t[i] - t[i - 1]) / (f - 1.0);
        }
    }
    Ok(t[levels - 1])
}

/// Bessel-type second-order operator B f = f'' + (drift/x) f'
/// - (inverse_square/x^2) f.
#[derive(Clone, Copy, Debug)]
pub struct BesselOperatorSpec {
    pub drift: f64,
    pub inverse_square: f64,
}

impl BesselOperatorSpec {
    /// B_nu = D^2 + ((2 nu + 1)/x) D.
    pub fn bessel(nu: f64) -> Self {
        BesselOperatorSpec {
            drift: 2.0 * nu + 1.0,
            inverse_square: 0.0,
        }
    }

    /// L_nu = D^2 - nu(nu+1)/x^2.
    pub fn angular(nu: f64) -> Self {
        BesselOperatorSpec {
            drift: 0.0,
            inverse_square: nu * (nu + 1.0),
        }
    }

    /// Plain second derivative.
    pub fn second_derivative() -> Self {
        BesselOperatorSpec {
            drift: 0.0,
            inverse_square: 0.0,
        }
    }
}

/// A function sampled on a strictly increasing positive grid, compactly
/// supported inside `support`.
#[derive(Clone, Debug)]
pub struct GridFunction {
    nodes: Vec<f64>,
    values: Vec<f64>,
    support: (f64, f64),
    smoothness: u32,
}

impl GridFunction {
    pub fn new(
        nodes: Vec<f64>,
        values: Vec<f64>,
        support: (f64, f64),
        smoothness: u32,
    ) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::InsufficientGrid(format!(
                "{} nodes vs {} values",
                nodes.len(),
                values.len()
            )));
        }
        if nodes.len() < 2 {
            return Err(Error::InsufficientGrid("need at least 2 nodes".into()));
        }
        if nodes[0] <= 0.0 || nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InsufficientGrid(
                "nodes must be strictly increasing and positive".into(),
            ));
        }
        let (a, b) = support;
        if !(0.0 < a && a < b && b.is_finite()) {
            return Err(Error::Domain(format!("bad support ({a}, {b})")));
        }
        if a < nodes[0] || b > nodes[nodes.len() - 1] {
            return Err(Error::Domain(format!(
                "support ({a}, {b}) sticks out of the grid [{}, {}]",
                nodes[0],
                nodes[nodes.len() - 1]
            )));
        }
        Ok(GridFunction {
            nodes,
            values,
            support,
            smoothness,
        })
    }

    /// Sample a callable on `nodes`, zeroing it outside `support`.
    pub fn from_fn(
        nodes: Vec<f64>,
        f: impl Fn(f64) -> f64,
        support: (f64, f64),
        smoothness: u32,
    ) -> Result<Self> {
        let values = nodes
            .iter()
            .map(|&x| if x < support.0 || x > support.1 { 0.0 } else { f(x) })
            .collect();
        GridFunction::new(nodes, values, support, smoothness)
    }

    /// C-infinity bump exp(-1/(1-u^2)) rescaled to (a, b).
    pub fn bump(nodes: Vec<f64>, a: f64, b: f64) -> Result<Self> {
        GridFunction::from_fn(nodes, bump_fn(a, b), (a, b), u32::MAX)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    pub fn smoothness(&self) -> u32 {
        self.smoothness
    }

    /// Interpolated value: 6-point Lagrange inside the grid, exact zero
    /// outside the support.
    pub fn eval(&self, x: f64) -> f64 {
        if x < self.support.0 || x > self.support.1 {
            return 0.0;
        }
        let n = self.nodes.len();
        let j = match self.nodes.binary_search_by(|p| p.total_cmp(&x)) {
            Ok(i) => return self.values[i],
            Err(i) => i,
        };
        let lo = j.saturating_sub(3).min(n - 6);
        let xs = &self.nodes[lo..lo + 6];
        let ys = &self.values[lo..lo + 6];
        let mut acc = 0.0;
        for i in 0..6 {
            let mut l = ys[i];
            for k in 0..6 {
                if k != i {
                    l *= (x - xs[k]) / (xs[i] - xs[k]);
                }
            }
            acc += l;
        }
        acc
    }

    /// Same nodes and support, values mapped.
    pub fn map(&self, g: impl Fn(f64, f64) -> f64) -> Self {
        let values = self
            .nodes
            .iter()
            .zip(self.values.iter())
            .map(|(&x, &v)| g(x, v))
            .collect();
        GridFunction {
            nodes: self.nodes.clone(),
            values,
            support: self.support,
            smoothness: self.smoothness,
        }
    }

    /// Write `x,value` CSV with full float precision.
    pub fn to_csv(&self, w: &mut dyn Write) -> Result<()> {
        writeln!(w, "x,value")?;
        for (x, v) in self.nodes.iter().zip(self.values.iter()) {
            writeln!(w, "{x:.16e},{v:.16e}")?;
        }
        Ok(())
    }

    /// Read CSV produced by [`to_csv`]. Support spans the whole grid and
    /// smoothness is taken conservatively as 2.
    pub fn from_csv(r: &mut dyn BufRead) -> Result<Self> {
        let mut nodes = Vec::new();
        let mut values = Vec::new();
        for (ln, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if ln == 0 {
                if line != "x,value" {
                    return Err(Error::Parse(format!("expected `x,value` header, got {line}")));
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let (xs, vs) = line.split_once(',').ok_or_else(|| {
                Error::Parse(format!("line {}: expected two comma-separated fields", ln + 1))
            })?;
            let x: f64 = xs.trim().parse().map_err(|_| {
                Error::Parse(format!("line {}: bad float `{xs}`", ln + 1))
            })?;
            let v: f64 = vs.trim().parse().map_err(|_| {
                Error::Parse(format!("line {}: bad float `{vs}`", ln + 1))
            })?;
            nodes.push(x);
            values.push(v);
        }
        if nodes.len() < 2 {
            return Err(Error::Parse("CSV holds fewer than 2 rows".into()));
        }
        let support = (nodes[0], nodes[nodes.len() - 1]);
        GridFunction::new(nodes, values, support, 2)
    }
}

/// The standard bump exp(-1/(1-u^2)) rescaled to vanish outside (a, b),
/// as a closure usable away from any grid.
pub fn bump_fn(a: f64, b: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        let u = (2.0 * x - (a + b)) / (b - a);
        if u.abs() >= 1.0 {
            0.0
        } else {
            (-1.0 / (1.0 - u * u)).exp()
        }
    }
}

/// Analytic derivative of [`bump_fn`].
pub fn bump_deriv_fn(a: f64, b: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        let w = 2.0 / (b - a);
        let u = (2.0 * x - (a + b)) / (b - a);
        if u.abs() >= 1.0 {
            0.0
        } else {
            let d = 1.0 - u * u;
            (-1.0 / d).exp() * (-2.0 * u / (d * d)) * w
        }
    }
}

/// 2000 log-spaced nodes on [1e-3, 50].
pub fn default_grid() -> Vec<f64> {
    log_grid(1e-3, 50.0, 2000)
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (la, lb) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

// Finite-difference weights on arbitrary nodes (Fornberg's recursion):
// weights[i] approximates the m-th derivative at z from values at xs[i].
fn fd_weights(z: f64, xs: &[f64], m: usize) -> Vec<f64> {
    let n = xs.len();
    let mut c = vec![vec![0.0; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = xs[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - z;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// Differentiate on the grid: 5-point stencils give 4th-order accuracy for
/// the first derivative on the interior (3rd-order for the second).
pub fn differentiate(f: &GridFunction, order: u32) -> Result<GridFunction> {
    if !(order == 1 || order == 2) {
        return Err(Error::Domain(format!("derivative order {order} not supported")));
    }
    if order > f.smoothness {
        return Err(Error::Smoothness(format!(
            "requested order {order} exceeds smoothness {}",
            f.smoothness
        )));
    }
    let n = f.nodes.len();
    if n < 5 {
        return Err(Error::InsufficientGrid(format!(
            "differentiation needs >= 5 nodes, got {n}"
        )));
    }
    let mut values = vec![0.0; n];
    for i in 0..n {
        let x = f.nodes[i];
        if x < f.support.0 || x > f.support.1 {
            continue;
        }
        let lo = i.saturating_sub(2).min(n - 5);
        let w = fd_weights(x, &f.nodes[lo..lo + 5], order as usize);
        values[i] = w
            .iter()
            .zip(&f.values[lo..lo + 5])
            .map(|(wi, vi)| wi * vi)
            .sum();
    }
    Ok(GridFunction {
        nodes: f.nodes.clone(),
        values,
        support: f.support,
        smoothness: f.smoothness.saturating_sub(order),
    })
}

/// Apply B f = f'' + (drift/x) f' - (inverse_square/x^2) f on the grid.
pub fn apply_bessel(f: &GridFunction, op: BesselOperatorSpec) -> Result<GridFunction> {
    if f.smoothness < 2 {
        return Err(Error::Smoothness(
            "Bessel operator needs two derivatives".into(),
        ));
    }
    let d1 = differentiate(f, 1)?;
    let d2 = differentiate(f, 2)?;
    let values = f
        .nodes
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            d2.values[i] + op.drift / x * d1.values[i]
                - op.inverse_square / (x * x) * f.values[i]
        })
        .collect();
    Ok(GridFunction {
        nodes: f.nodes.clone(),
        values,
        support: f.support,
        smoothness: f.smoothness.saturating_sub(2),
    })
}

/// Weighted L2 norm (int |f|^2 x^k dx)^(1/2) over the support.
pub fn norm_weighted(f: &GridFunction, weight_exponent: f64) -> Result<f64> {
    let (a, b) = f.support;
    let spec = QuadratureSpec::new(a, b).tol(1e-10);
    let v = integrate(|x| f.eval(x).powi(2) * x.powf(weight_exponent), &spec)?;
    Ok(v.max(0.0).sqrt())
}

/// Weighted L2 norm of a callable on (a, b).
pub fn norm_weighted_fn(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    weight_exponent: f64,
) -> Result<f64> {
    let spec = QuadratureSpec::new(a, b).tol(1e-11);
    let v = integrate(|x| f(x).powi(2) * x.powf(weight_exponent), &spec)?;
    Ok(v.max(0.0).sqrt())
}

#[cfg(test)]
#[path = "../tests/common/oracles.rs"]
mod oracles;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{beta, j_norm};
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_exactness() {
        for k in 0..=10u32 {
            let spec = QuadratureSpec::new(0.0, 1.0).tol(1e-13);
            let v = integrate(|x| x.powi(k as i32), &spec).unwrap();
            assert_relative_eq!(v, 1.0 / (k as f64 + 1.0), max_relative = 1e-12);
        }
    }

    #[test]
    fn inverse_sqrt_left_singularity() {
        let spec = QuadratureSpec::new(0.0, 1.0).left_exponent(-0.5).tol(1e-11);
        let v = integrate(|_| 1.0, &spec).unwrap();
        assert_relative_eq!(v, 2.0, max_relative = 1e-10);
    }

    #[test]
    fn beta_integral() {
        // int_0^1 t^{-0.3} (1-t)^{0.3} dt = B(0.7, 1.3); the weights are the
        // whole integrand, so the remaining smooth factor is 1
        let spec = QuadratureSpec::new(0.0, 1.0)
            .left_exponent(-0.3)
            .right_exponent(0.3)
            .tol(1e-11);
        let v = integrate(|_| 1.0, &spec).unwrap();
        assert_relative_eq!(v, beta(0.7, 1.3), max_relative = 1e-10);
        assert_relative_eq!(v, oracles::BETA_07_13, max_relative = 1e-10);
    }

    #[test]
    fn principal_values() {
        let spec = QuadratureSpec::new(-1.0, 1.0).principal_value_at(0.0);
        let v = integrate(|t| 1.0 / t, &spec).unwrap();
        assert!(v.abs() < 1e-10, "PV of odd pole should vanish, got {v}");

        // PV int_0^2 dt/(t-1) = 0 shifted; with a smooth factor:
        // PV int_{-1}^{1} e^t / t dt = 2 Shi(1) = 2.1145017837932503...
        let spec = QuadratureSpec::new(-1.0, 1.0).principal_value_at(0.0).tol(1e-11);
        let v = integrate(|t| t.exp() / t, &spec).unwrap();
        assert_relative_eq!(v, 2.114_501_750_751_457, max_relative = 1e-9);
    }

    #[test]
    fn infinite_upper_limit() {
        let spec = QuadratureSpec::new(0.0, f64::INFINITY).tol(1e-11);
        let v = integrate(|x| (-x).exp(), &spec).unwrap();
        assert_relative_eq!(v, 1.0, max_relative = 1e-10);

        let v = integrate(|x| x * (-x * x).exp(), &spec).unwrap();
        assert_relative_eq!(v, 0.5, max_relative = 1e-10);

        // oscillatory with decay, reference from the oracle set
        let v = integrate(|x| (-x).exp() * (40.0 * x).sin(), &spec).unwrap();
        assert_relative_eq!(v, oracles::OSC_SIN40_EXP, max_relative = 1e-8);
    }

    #[test]
    fn linearity() {
        let spec = QuadratureSpec::new(0.0, 2.0).tol(1e-12);
        let cases = [(1.7, -0.4), (0.3, 2.2), (-1.1, 0.9)];
        for (al, be) in cases {
            let i1 = integrate(|x| x.sin(), &spec).unwrap();
            let i2 = integrate(|x| (1.3 * x).cos(), &spec).unwrap();
            let i3 = integrate(|x| al * x.sin() + be * (1.3 * x).cos(), &spec).unwrap();
            assert!((i3 - al * i1 - be * i2).abs() < 2e-12);
        }
    }

    #[test]
    fn undeclared_singularity_detected() {
        let spec = QuadratureSpec::new(0.0, 1.0);
        let r = integrate(|x| 1.0 / x, &spec);
        assert!(matches!(
            r,
            Err(Error::Singularity(_)) | Err(Error::Convergence(_))
        ));
        let r = integrate(|x| if x > 0.5 { f64::NAN } else { 1.0 }, &spec);
        assert!(matches!(r, Err(Error::Singularity(_))));
    }

    #[test]
    fn differentiate_polynomials() {
        let g = uniform_grid(0.5, 2.5, 201);
        let f = GridFunction::from_fn(g.clone(), |x| x * x, (0.6, 2.4), 10).unwrap();
        let d = differentiate(&f, 1).unwrap();
        for (i, &x) in d.nodes().iter().enumerate() {
            if x > 0.7 && x < 2.3 {
                assert_relative_eq!(d.values()[i], 2.0 * x, max_relative = 1e-8);
            }
        }
        let c = GridFunction::from_fn(g, |_| 3.0, (0.6, 2.4), 10).unwrap();
        let dc = differentiate(&c, 1).unwrap();
        for (&x, &v) in dc.nodes().iter().zip(dc.values()) {
            if x > 0.7 && x < 2.3 {
                assert!(v.abs() < 1e-9, "d const = {v} at {x}");
            }
        }
    }

    #[test]
    fn differentiate_sine_high_accuracy() {
        let g = uniform_grid(1.0, 4.0, 3001);
        let f = GridFunction::from_fn(g, |x| x.sin(), (1.01, 3.99), 10).unwrap();
        let d = differentiate(&f, 1).unwrap();
        let mut worst = 0.0f64;
        for (&x, &v) in d.nodes().iter().zip(d.values()) {
            if x > 1.05 && x < 3.95 {
                worst = worst.max((v - x.cos()).abs());
            }
        }
        assert!(worst < 1e-9, "max first-derivative error {worst:.3e}");
    }

    #[test]
    fn bessel_operator_on_squares() {
        let nu = 0.7;
        let g = uniform_grid(0.5, 3.0, 501);
        let f = GridFunction::from_fn(g, |x| x * x, (0.6, 2.9), 10).unwrap();
        let bf = apply_bessel(&f, BesselOperatorSpec::bessel(nu)).unwrap();
        for (&x, &v) in bf.nodes().iter().zip(bf.values()) {
            if x > 0.8 && x < 2.7 {
                assert_relative_eq!(v, 4.0 * nu + 4.0, max_relative = 1e-6);
            }
        }
        let one = GridFunction::from_fn(uniform_grid(0.5, 3.0, 501), |_| 1.0, (0.6, 2.9), 10)
            .unwrap();
        let b1 = apply_bessel(&one, BesselOperatorSpec::bessel(nu)).unwrap();
        for (&x, &v) in b1.nodes().iter().zip(b1.values()) {
            if x > 0.8 && x < 2.7 {
                assert!(v.abs() < 1e-7, "B 1 = {v} at {x}");
            }
        }
    }

    #[test]
    fn bessel_operator_eigenfunction() {
        // B_nu j_nu(lambda x) = -lambda^2 j_nu(lambda x)
        let (nu, lam) = (0.7, 2.0);
        let g = uniform_grid(0.2, 4.0, 2001);
        let f = GridFunction::from_fn(g, |x| j_norm(nu, lam * x), (0.25, 3.95), 10).unwrap();
        let bf = apply_bessel(&f, BesselOperatorSpec::bessel(nu)).unwrap();
        let scale = lam * lam;
        let mut worst = 0.0f64;
        for (i, &x) in bf.nodes().iter().enumerate() {
            if x > 0.4 && x < 3.8 {
                let want = -scale * f.values()[i];
                worst = worst.max((bf.values()[i] - want).abs() / scale);
            }
        }
        assert!(worst < 1e-5, "ODE residual {worst:.3e}");
    }

    #[test]
    fn bessel_operator_scaling_commutes() {
        // B[f(lam .)](x) = lam^2 (B f)(lam x) for the pure Bessel operator.
        let lam = 1.7;
        let op = BesselOperatorSpec::bessel(0.3);
        let fa = GridFunction::from_fn(
            uniform_grid(0.2, 5.0, 2401),
            bump_fn(1.0, 4.0),
            (1.0, 4.0),
            10,
        )
        .unwrap();
        let fb = GridFunction::from_fn(
            uniform_grid(0.1, 3.0, 2401),
            move |x| bump_fn(1.0, 4.0)(lam * x),
            (1.0 / lam, 4.0 / lam),
            10,
        )
        .unwrap();
        let ba = apply_bessel(&fa, op).unwrap();
        let bb = apply_bessel(&fb, op).unwrap();
        let mut worst = 0.0f64;
        for &x in &[0.7, 1.0, 1.5, 2.0, 2.2] {
            let lhs = bb.eval(x);
            let rhs = lam * lam * ba.eval(lam * x);
            worst = worst.max((lhs - rhs).abs() / rhs.abs().max(1.0));
        }
        assert!(worst < 1e-6, "scaling residual {worst:.3e}");
    }

    #[test]
    fn weighted_norms() {
        let g = uniform_grid(1e-6, 1.0, 2001);
        let f = GridFunction::from_fn(g, |x| x, (1e-6, 1.0), 10).unwrap();
        let n = norm_weighted(&f, 0.0).unwrap();
        assert_relative_eq!(n, 1.0 / 3.0f64.sqrt(), max_relative = 1e-6);

        let doubled = f.map(|_, v| 2.0 * v);
        let n2 = norm_weighted(&doubled, 0.0).unwrap();
        assert_relative_eq!(n2, 2.0 * n, max_relative = 1e-12);

        // normalize a bump, then its norm is 1 by construction
        let bump = GridFunction::bump(uniform_grid(0.5, 3.0, 1501), 1.0, 2.0).unwrap();
        let nb = norm_weighted(&bump, 0.0).unwrap();
        let unit = bump.map(|_, v| v / nb);
        assert_relative_eq!(norm_weighted(&unit, 0.0).unwrap(), 1.0, max_relative = 1e-9);
    }

    #[test]
    fn csv_roundtrip() {
        let f = GridFunction::bump(log_grid(0.1, 10.0, 64), 0.5, 5.0).unwrap();
        let mut buf = Vec::new();
        f.to_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("x,value\n"));
        let g = GridFunction::from_csv(&mut std::io::Cursor::new(&buf)).unwrap();
        assert_eq!(f.nodes(), g.nodes());
        assert_eq!(f.values(), g.values());
    }

    #[test]
    fn eval_interpolation_accuracy() {
        let f = GridFunction::from_fn(
            log_grid(0.5, 4.0, 800),
            |x| (x * 1.3).sin(),
            (0.6, 3.9),
            10,
        )
        .unwrap();
        for &x in &[0.9, 1.234, 2.0001, 3.3333] {
            assert_relative_eq!(f.eval(x), (x * 1.3).sin(), max_relative = 1e-10);
        }
        assert_eq!(f.eval(0.55), 0.0);
        assert_eq!(f.eval(3.95), 0.0);
    }

    #[test]
    fn invalid_constructions() {
        assert!(GridFunction::new(vec![1.0, 0.5], vec![0.0, 0.0], (0.6, 0.9), 2).is_err());
        assert!(GridFunction::new(vec![1.0, 2.0], vec![0.0], (1.2, 1.8), 2).is_err());
        assert!(GridFunction::new(vec![1.0, 2.0], vec![0.0, 0.0], (0.5, 1.8), 2).is_err());
        assert!(QuadratureSpec::new(0.0, 1.0).left_exponent(-1.5).tol(1e-9).validate().is_err());
        assert!(QuadratureSpec::new(1.0, 0.5).validate().is_err());
    }
}
