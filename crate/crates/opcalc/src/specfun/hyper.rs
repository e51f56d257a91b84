//! Gauss and Kummer hypergeometric functions on the real line.
//!
//! `hyp2f1` covers the parameter ranges the Legendre kernels need: real
//! parameters, real argument z < 1, including the logarithmic cases where
//! c - a - b is an integer.  Values on the branch cut z >= 1 are refused.

use crate::error::{Error, Result};
use crate::specfun::gamma::{digamma, gamma, rgamma};

const MAX_TERMS: usize = 2000;
const EPS: f64 = 1e-16;

/// Returns n >= 0 if x is within `tol` of the nonpositive integer -n.
fn nonpos_int(x: f64, tol: f64) -> Option<usize> {
    if x > 0.5 {
        return None;
    }
    let r = x.round();
    if (x - r).abs() < tol {
        Some((-r) as usize)
    } else {
        None
    }
}

/// Maclaurin series, valid for |z| < 1 and best for |z| <= 0.7 or so.
fn series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.abs() < EPS * sum.abs().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::Convergence(format!(
        "2F1 series stalled at a={a}, b={b}, c={c}, z={z}"
    )))
}

/// Terminating series when a = -n is a nonpositive integer.
fn poly(n: usize, a: f64, b: f64, c: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
    }
    sum
}

/// Connection at z -> 1 for non-integer d = c - a - b.  Both inner series
/// run in powers of s = 1 - z < 1/2.
fn near_one_noninteger(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let d = c - a - b;
    let s = 1.0 - z;
    let gc = gamma(c);
    let term1 = gc * gamma(d) * rgamma(c - a) * rgamma(c - b) * series(a, b, 1.0 - d, s)?;
    let term2 = gc * gamma(-d) * rgamma(a) * rgamma(b)
        * s.powf(d)
        * series(c - a, c - b, 1.0 + d, s)?;
    Ok(term1 + term2)
}

/// Connection at z -> 1 for c = a + b + m with integer m >= 0.  The
/// expansion in s = 1 - z carries a log(s) factor.
fn near_one_log(a: f64, b: f64, c: f64, m: usize, z: f64) -> Result<f64> {
    let s = 1.0 - z;
    let ls = s.ln();
    let mf = m as f64;
    let gc = gamma(c);

    // Finite part: sum_{n=0}^{m-1} (a)_n (b)_n / (n! (1-m)_n) s^n.
    let mut finite = 0.0;
    if m >= 1 {
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 0..m - 1 {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((1.0 - mf + nf) * (nf + 1.0)) * s;
            sum += term;
        }
        finite = gc * gamma(mf) * rgamma(a + mf) * rgamma(b + mf) * sum;
    }

    // Log part: sum over n of (a+m)_n (b+m)_n / (n! (m+n)!) s^{m+n}
    //           * [psi(1+n) + psi(1+m+n) - psi(a+m+n) - psi(b+m+n) - ln s].
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let pref = sign * gc * rgamma(a) * rgamma(b) * s.powi(m as i32) * rgamma(mf + 1.0);

    let mut psi1 = digamma(1.0);
    let mut psi2 = digamma(1.0 + mf);
    let mut psia = digamma(a + mf);
    let mut psib = digamma(b + mf);
    let mut term = 1.0;
    let mut sum = 0.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let bracket = psi1 + psi2 - psia - psib - ls;
        sum += term * bracket;
        if n > 2 && term.abs() * (bracket.abs() + 1.0) < EPS * sum.abs().max(1.0) {
            break;
        }
        psi1 += 1.0 / (nf + 1.0);
        psi2 += 1.0 / (mf + nf + 1.0);
        psia += 1.0 / (a + mf + nf);
        psib += 1.0 / (b + mf + nf);
        term *= (a + mf + nf) * (b + mf + nf) / ((nf + 1.0) * (mf + nf + 1.0)) * s;
        if n + 1 == MAX_TERMS {
            return Err(Error::Convergence(format!(
                "2F1 log series stalled at a={a}, b={b}, c={c}, z={z}"
            )));
        }
    }
    Ok(finite + pref * sum)
}

/// Connection at z -> 1, dispatching on whether d = c - a - b is integer.
fn near_one(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let d = c - a - b;
    let r = d.round();
    if (d - r).abs() < 1e-7 {
        if r >= 0.0 {
            near_one_log(a, b, c, r as usize, z)
        } else {
            // Euler transform flips d to -d > 0.
            let f = near_one_log(c - a, c - b, c, (-r) as usize, z)?;
            Ok((1.0 - z).powf(d) * f)
        }
    } else {
        near_one_noninteger(a, b, c, z)
    }
}

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if !z.is_finite() || !a.is_finite() || !b.is_finite() || !c.is_finite() {
        return Err(Error::Domain("non-finite 2F1 argument".into()));
    }
    if z >= 1.0 {
        return Err(Error::Branch(format!(
            "2F1 evaluated on the branch cut: a={a}, b={b}, c={c}, z={z}"
        )));
    }

    // Terminating cases do not care about poles of c or the cut structure.
    let na = nonpos_int(a, 1e-12);
    let nb = nonpos_int(b, 1e-12);
    if na.is_some() || nb.is_some() {
        let (n, aa, bb) = match (na, nb) {
            (Some(n), Some(m)) if m < n => (m, b, a),
            (Some(n), _) => (n, a, b),
            (_, Some(m)) => (m, b, a),
            _ => unreachable!(),
        };
        if let Some(nc) = nonpos_int(c, 1e-12) {
            if nc < n {
                return Err(Error::Pole(format!("2F1 pole: c={c} with a={a}, b={b}")));
            }
        }
        return Ok(poly(n, aa, bb, c, z));
    }
    if nonpos_int(c, 1e-9).is_some() {
        return Err(Error::Pole(format!("2F1 pole at c={c}")));
    }

    // Elementary cases: c = a or c = b reduce to a binomial.
    if (c - a).abs() < 1e-12 {
        return Ok((1.0 - z).powf(-b));
    }
    if (c - b).abs() < 1e-12 {
        return Ok((1.0 - z).powf(-a));
    }

    if z < -0.7 {
        // Pfaff transform maps z in (-inf, -0.7) to w in (0.41, 1).
        // Keep the smaller of a, b as the retained parameter.
        let w = z / (z - 1.0);
        let (p, q) = if a.abs() <= b.abs() { (a, b) } else { (b, a) };
        // Re-dispatch: the new parameter c - q may terminate the series or
        // land in the logarithmic case even when the original does not.
        return Ok((1.0 - z).powf(-p) * hyp2f1(p, c - q, c, w)?);
    }
    if z <= 0.5 {
        return series(a, b, c, z);
    }
    near_one(a, b, c, z)
}

/// Regularized function 2F1(a, b; c; z) / Gamma(c), finite for all real c.
pub fn hyp2f1_regularized(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if let Some(n) = nonpos_int(c, 1e-7) {
        // Continuation through the pole of Gamma(c): the first n+1 series
        // coefficients vanish and the sum restarts at order z^{n+1}.
        let nf = n as f64;
        let mut coef = 1.0;
        for k in 0..=n {
            let kf = k as f64;
            coef *= (a + kf) * (b + kf) / (kf + 1.0);
        }
        if coef == 0.0 {
            return Ok(0.0);
        }
        let f = hyp2f1(a + nf + 1.0, b + nf + 1.0, nf + 2.0, z)?;
        return Ok(coef * z.powi(n as i32 + 1) * f);
    }
    Ok(rgamma(c) * hyp2f1(a, b, c, z)?)
}

/// Kummer confluent hypergeometric function 1F1(a; c; z).
///
/// For z < 0 the series alternates badly, so the Kummer transform
/// e^z 1F1(c-a; c; -z) is used instead.
pub fn hyp1f1(a: f64, c: f64, z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::Domain("non-finite 1F1 argument".into()));
    }
    if nonpos_int(c, 1e-12).is_some() {
        return Err(Error::Pole(format!("1F1 pole at c={c}")));
    }
    if z < 0.0 {
        return Ok(z.exp() * hyp1f1(c - a, c, -z)?);
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.abs() < EPS * sum.abs().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::Convergence(format!(
        "1F1 series stalled at a={a}, c={c}, z={z}"
    )))
}

#[cfg(test)]
#[path = "../../tests/common/oracles.rs"]
mod oracles;
