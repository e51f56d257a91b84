//! Gamma function family: real and complex log-gamma, reciprocal gamma,
//! digamma. Lanczos approximation (g = 7, n = 9) near the real axis,
//! Stirling series farther out.

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    let mut a = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + k as f64 - 1.0);
    }
    a
}

/// Gamma function for real argument. Returns NaN at the poles
/// (nonpositive integers).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        if x == x.floor() {
            return f64::NAN;
        }
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    if x > 171.6 {
        return f64::INFINITY;
    }
    let t = x + LANCZOS_G - 0.5;
    (2.0 * PI).sqrt() * t.powf(x - 0.5) * (-t).exp() * lanczos_sum(x)
}

/// log Gamma(x) for x > 0.
pub fn lgamma(x: f64) -> f64 {
    assert!(x > 0.0, "lgamma requires a positive argument, got {x}");
    if x < 0.5 {
        // log Gamma(x) = log pi - log sin(pi x) - log Gamma(1-x), safe: x in (0, 1/2)
        return PI.ln() - (PI * x).sin().ln() - lgamma(1.0 - x);
    }
    let t = x + LANCZOS_G - 0.5;
    0.5 * (2.0 * PI).ln() + (x - 0.5) * t.ln() - t + lanczos_sum(x).ln()
}

/// Reciprocal gamma 1/Gamma(x), entire: zero at nonpositive integers.
pub fn rgamma(x: f64) -> f64 {
    if x >= 0.5 {
        if x > 171.6 {
            return (-lgamma(x)).exp();
        }
        return 1.0 / gamma(x);
    }
    if x == x.floor() {
        return 0.0;
    }
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    let g1 = 1.0 - x;
    if g1 > 171.6 {
        let s = (PI * x).sin();
        return s.signum() * (lgamma(g1) + s.abs().ln() - PI.ln()).exp();
    }
    (PI * x).sin() * gamma(g1) / PI
}

/// Digamma (logarithmic derivative of Gamma).
pub fn digamma(x: f64) -> f64 {
    if x <= 0.0 {
        if x == x.floor() {
            return f64::NAN;
        }
        // reflection: psi(1-x) - psi(x) = pi cot(pi x)
        return digamma(1.0 - x) - PI / (PI * x).tan();
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    // asymptotic series at y >= 10
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    acc + y.ln() - 0.5 * inv
        - inv2
            * (1.0 / 12.0
                - inv2
                    * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))))
}

/// Rising factorial (z)_n = z (z+1) ... (z+n-1), with (z)_0 = 1.
pub fn pochhammer(z: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for k in 0..n {
        p *= z + k as f64;
    }
    p
}

/// Euler beta function B(a, b).
pub fn beta(a: f64, b: f64) -> f64 {
    if a > 0.0 && b > 0.0 {
        (lgamma(a) + lgamma(b) - lgamma(a + b)).exp()
    } else {
        gamma(a) * gamma(b) * rgamma(a + b)
    }
}

// Bernoulli numbers B_2n / (2n (2n-1)) for the Stirling series of log Gamma.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn clgamma_stirling(z: Complex64) -> Complex64 {
    let mut s = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln();
    let z2 = z * z;
    let mut zp = z;
    for c in STIRLING {
        s += c / zp;
        zp *= z2;
    }
    s
}

/// Principal branch of log Gamma(z). Accurate on the half-plane reached by
/// upward recurrence from Re z > 0.5; arguments on the Mellin critical line
/// are the intended use.
pub fn clgamma(mut z: Complex64) -> Complex64 {
    if z.im.abs() > 10.0 {
        // |z| >= 10 here, Stirling converges; lift small real parts first
        let mut shift = Complex64::new(0.0, 0.0);
        while z.re < 1.0 {
            shift -= z.ln();
            z += 1.0;
        }
        return clgamma_stirling(z) + shift;
    }
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < 0.5 {
        shift -= z.ln();
        z += 1.0;
    }
    let t = z + (LANCZOS_G - 0.5);
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + (k as f64 - 1.0));
    }
    0.5 * (2.0 * PI).ln() + (z - 0.5) * t.ln() - t + a.ln() + shift
}

/// Gamma(z) for complex z via the principal log-gamma branch.
pub fn cgamma(z: Complex64) -> Complex64 {
    clgamma(z).exp()
}

#[cfg(test)]
#[path = "../../tests/common/oracles.rs"]
mod oracles;
