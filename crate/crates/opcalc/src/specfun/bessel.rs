//! Bessel functions J, Y, I, K of real order and the normalized
//! j_nu(x) = 2^nu Gamma(nu+1) J_nu(x) / x^nu with j_nu(0) = 1.

use super::gamma::{digamma, gamma, rgamma};
use std::f64::consts::PI;

const SERIES_CUTOFF: f64 = 12.0;

/// Ascending series sum S with J_nu = (x/2)^nu rgamma(nu+1) S restored by the
/// caller; sign = -1 for J, +1 for I.
fn bessel_series(nu: f64, x: f64, sign: f64) -> f64 {
    let q = sign * 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let k = k as f64;
        term *= q / (k * (nu + k));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Hankel asymptotic amplitude/phase sums P and Q.
fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    let mut prev = f64::INFINITY;
    for m in 1..20 {
        let m = m as f64;
        a *= (mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (m * 8.0 * x);
        if a.abs() > prev {
            break; // series turned divergent
        }
        prev = a.abs();
        let s = if ((m as i64) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if (m as i64) % 2 == 1 {
            q += s * a;
        } else {
            p += s * a;
        }
        if a.abs() < 1e-17 {
            break;
        }
    }
    (p, q)
}

/// Bessel function of the first kind, real order nu (integer or not),
/// x >= 0. Small arguments by the ascending series, large by the Hankel
/// asymptotic expansion.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    if nu < 0.0 && nu == nu.floor() {
        let n = -nu as i64;
        return if n % 2 == 0 { 1.0 } else { -1.0 } * bessel_j(-nu, x);
    }
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if x < SERIES_CUTOFF.max(nu * nu / 4.0) {
        let s = bessel_series(nu, x, -1.0);
        return (0.5 * x).powf(nu) * rgamma(nu + 1.0) * s;
    }
    let (p, q) = hankel_pq(nu, x);
    let chi = x - (0.5 * nu + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Weber function Y_n for integer n >= 0, ascending (logarithmic) series.
fn bessel_y_int_series(n: u32, x: f64) -> f64 {
    let xh = 0.5 * x;
    let jn = bessel_j(n as f64, x);
    let mut v = 2.0 / PI * xh.ln() * jn;
    // finite part
    let mut fact = gamma(n as f64); // (n-1)! when n >= 1
    for k in 0..n {
        // (n-k-1)! / k! * (x/2)^{2k-n}
        v -= fact / PI * xh.powi(2 * k as i32 - n as i32);
        let kk = k as f64;
        let d = (n as f64 - kk - 1.0) * (kk + 1.0);
        if d != 0.0 {
            fact /= d;
        }
    }
    // infinite part
    let mut t = xh.powi(n as i32) * rgamma(n as f64 + 1.0);
    let mut k = 0f64;
    let mut sum = t * (digamma(1.0) + digamma(n as f64 + 1.0));
    loop {
        k += 1.0;
        t *= -(xh * xh) / (k * (n as f64 + k));
        let add = t * (digamma(k + 1.0) + digamma(n as f64 + k + 1.0));
        sum += add;
        if add.abs() < 1e-18 * sum.abs().max(1e-300) || k > 200.0 {
            break;
        }
    }
    v - sum / PI
}

/// Bessel function of the second kind, real order, x > 0.
pub fn bessel_y(nu: f64, x: f64) -> f64 {
    assert!(x > 0.0, "bessel_y needs x > 0");
    if x >= SERIES_CUTOFF.max(nu * nu / 4.0) {
        let (p, q) = hankel_pq(nu, x);
        let chi = x - (0.5 * nu + 0.25) * PI;
        return (2.0 / (PI * x)).sqrt() * (p * chi.sin() + q * chi.cos());
    }
    let near = (nu - nu.round()).abs();
    if near < 1e-8 {
        let n = nu.round();
        if n < 0.0 {
            let m = -n as i64;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            return sign * bessel_y_int_series(-n as u32, x);
        }
        return bessel_y_int_series(n as u32, x);
    }
    (bessel_j(nu, x) * (nu * PI).cos() - bessel_j(-nu, x)) / (nu * PI).sin()
}

/// Modified Bessel function of the first kind.
pub fn bessel_i(nu: f64, x: f64) -> f64 {
    if nu < 0.0 && nu == nu.floor() {
        return bessel_i(-nu, x);
    }
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if x <= 20.0f64.max(nu * nu / 4.0) {
        let s = bessel_series(nu, x, 1.0);
        return (0.5 * x).powf(nu) * rgamma(nu + 1.0) * s;
    }
    // asymptotic: I_nu ~ e^x / sqrt(2 pi x) * sum (-1)^k a_k
    let mu = 4.0 * nu * nu;
    let mut sum = 1.0;
    let mut a = 1.0;
    let mut prev = f64::INFINITY;
    for m in 1..20 {
        let m = m as f64;
        a *= -(mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (m * 8.0 * x);
        if a.abs() > prev {
            break;
        }
        prev = a.abs();
        sum += a;
        if a.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    x.exp() / (2.0 * PI * x).sqrt() * sum
}

/// Macdonald function K_nu(x), x > 0, via the integral representation
/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt. The integrand is even
/// and analytic, so the trapezoid rule converges spectrally.
pub fn bessel_k(nu: f64, x: f64) -> f64 {
    assert!(x > 0.0, "bessel_k needs x > 0");
    let nu = nu.abs(); // K_{-nu} = K_nu
    // pick tmax with x (cosh t - 1) - nu t > 50 at t = tmax
    let mut tmax = ((1.0 + 50.0 / x) + ((1.0 + 50.0 / x) * (1.0 + 50.0 / x) - 1.0).sqrt()).ln();
    for _ in 0..4 {
        tmax = {
            let target = 1.0 + (50.0 + nu * tmax) / x;
            (target + (target * target - 1.0).sqrt()).ln()
        };
    }
    let n = 800usize;
    let h = tmax / n as f64;
    // scale by e^x to keep intermediate values sane for large x
    let mut s = 0.5 * 1.0; // t = 0 term: exp(-x (cosh 0 - 1)) cosh(0) = 1
    for k in 1..=n {
        let t = k as f64 * h;
        let w = -x * (t.cosh() - 1.0) + ((nu * t).cosh()).ln();
        s += w.exp();
    }
    s * h * (-x).exp()
}

/// Normalized Bessel function j_nu(x) = 2^nu Gamma(nu+1) J_nu(x)/x^nu,
/// entire in x with j_nu(0) = 1. Requires nu > -1.
pub fn j_norm(nu: f64, x: f64) -> f64 {
    let x = x.abs(); // even function
    if x < SERIES_CUTOFF.max(nu * nu / 4.0) {
        // the prefactors 2^nu Gamma(nu+1) and (x/2)^nu rgamma(nu+1) cancel,
        // which avoids 0^0 at x = 0
        return bessel_series(nu, x, -1.0);
    }
    2.0f64.powf(nu) * gamma(nu + 1.0) * x.powf(-nu) * bessel_j(nu, x)
}
