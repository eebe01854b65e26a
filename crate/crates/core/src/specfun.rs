//! Special functions needed by the closed-form potentials and shifts:
//! generalized exponential integrals Eₙ, the Gauss hypergeometric ₂F₁ on the
//! real z ≤ 0 slice, spherical Bessel j₀/j₁, and ln Γ.

use crate::constants::EULER_GAMMA;
use crate::{Error, Result};

const MAX_SERIES_TERMS: usize = 20_000_000;

/// Generalized exponential integral Eₙ(x) = ∫₁^∞ e^(−xt) t^(−n) dt.
///
/// Series for small x, continued fraction for large x. Underflows to 0 for
/// very large x instead of erroring.
pub fn expint(n: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("expint: x must be finite, got {x}")));
    }
    if x < 0.0 {
        return Err(Error::Domain(format!("expint: x must be >= 0, got {x}")));
    }
    if x == 0.0 {
        if n >= 2 {
            return Ok(1.0 / (n as f64 - 1.0));
        }
        return Err(Error::Domain(format!("expint: E{n}(0) diverges")));
    }
    if n == 0 {
        return Ok((-x).exp() / x);
    }
    if x <= 1.0 {
        Ok(expint_series(n, x))
    } else {
        Ok(expint_continued_fraction(n, x))
    }
}

/// Eₙ extended to negative orders by the closed forms
/// E₀ = e^(−x)/x, E₋₁ = e^(−x)(x+1)/x², E₋₂ = e^(−x)(x²+2x+2)/x³.
/// Needed by the stable small-difference kernels in the potentials module.
pub(crate) fn expint_signed(n: i32, x: f64) -> Result<f64> {
    match n {
        0 => Ok((-x).exp() / x),
        -1 => Ok((-x).exp() * (x + 1.0) / (x * x)),
        -2 => Ok((-x).exp() * (x * x + 2.0 * x + 2.0) / (x * x * x)),
        n if n > 0 => expint(n as u32, x),
        _ => Err(Error::Domain(format!("expint_signed: order {n} not supported"))),
    }
}

// A&S 5.1.12 ascending series, x in (0, 1].
fn expint_series(n: u32, x: f64) -> f64 {
    let nm1 = n as i64 - 1;
    // psi(n) = -gamma + sum_{k=1}^{n-1} 1/k
    let mut psi = -EULER_GAMMA;
    for k in 1..n {
        psi += 1.0 / k as f64;
    }
    let mut sum = 0.0;
    let mut pow = 1.0; // (-x)^m / m!
    for m in 0..200i64 {
        if m == nm1 {
            sum += pow * (psi - x.ln());
        } else {
            let term = -pow / (m as f64 - nm1 as f64);
            sum += term;
            if pow.abs() < 1e-18 * sum.abs().max(1e-300) && m > nm1 {
                break;
            }
        }
        pow *= -x / (m as f64 + 1.0);
    }
    sum
}

// Lentz continued fraction, x > 1.
fn expint_continued_fraction(n: u32, x: f64) -> f64 {
    let nf = n as f64;
    const FPMIN: f64 = 1e-300;
    let mut b = x + nf;
    let mut c = 1.0 / FPMIN;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=400 {
        let a = -(i as f64) * (nf - 1.0 + i as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-x).exp()
}

/// Gauss hypergeometric ₂F₁(a, b; c; z) for real arguments with z ≤ 0.
///
/// The Pfaff transformation maps z < 0 to w = z/(z−1) ∈ (0, 1) where the
/// series converges; |z| may be arbitrarily large (convergence slows as
/// z → −∞).
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if c <= 0.0 && c == c.floor() {
        return Err(Error::Domain(format!(
            "hyp2f1: c = {c} is a non-positive integer"
        )));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("hyp2f1: z must be finite, got {z}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z > 0.0 {
        return Err(Error::Domain(format!(
            "hyp2f1: only z <= 0 is supported, got z = {z}"
        )));
    }
    // Pfaff: F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1))
    let w = z / (z - 1.0);
    let series = gauss_series(a, c - b, c, w)?;
    Ok((1.0 - z).powf(-a) * series)
}

// Plain Gauss series at 0 <= w < 1, Kahan-compensated.
fn gauss_series(a: f64, b: f64, c: f64, w: f64) -> Result<f64> {
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut term = 1.0f64;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * w;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() < 1e-17 * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::HypergeometricNonConvergence {
        a,
        b,
        c,
        z: w,
        terms: MAX_SERIES_TERMS,
    })
}

/// Spherical Bessel function of the first kind, orders 0 and 1 only.
pub fn sph_bessel_j(k: u32, x: f64) -> f64 {
    match k {
        0 => sph_j0(x),
        1 => sph_j1(x),
        _ => panic!("sph_bessel_j: only orders 0 and 1 are implemented"),
    }
}

/// j₀(x) = sin x / x, with ascending series near 0 (the closed form loses
/// absolute accuracy to cancellation there).
pub fn sph_j0(x: f64) -> f64 {
    let x2 = x * x;
    if x.abs() < 0.05 {
        1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0 + x2 * x2 * x2 * x2 / 362_880.0
    } else {
        x.sin() / x
    }
}

/// j₁(x) = sin x / x² − cos x / x, with ascending series near 0.
pub fn sph_j1(x: f64) -> f64 {
    let x2 = x * x;
    if x.abs() < 0.05 {
        x / 3.0 - x * x2 / 30.0 + x * x2 * x2 / 840.0 - x * x2 * x2 * x2 / 45_360.0
    } else {
        (x.sin() / x - x.cos()) / x
    }
}

/// ln Γ(x) for x > 0 (Lanczos, g = 7, 9 coefficients).
pub fn ln_gamma(x: f64) -> f64 {
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    debug_assert!(x > 0.0);
    let x = x - 1.0;
    let mut a = COEF[0];
    let t = x + 7.5;
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}
