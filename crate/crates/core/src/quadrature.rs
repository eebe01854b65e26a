//! Quadrature machinery: Gauss–Legendre rules, adaptive bisection, and
//! oscillation-aware integration with Wynn-epsilon tail acceleration.
//!
//! The momentum-space Uehling integrals oscillate as j₀(qr) with slowly
//! decaying log envelopes; those are integrated between consecutive zeros of
//! the trigonometric factor and the resulting alternating partial sums are
//! extrapolated with the epsilon algorithm.

use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Compute the n-point rule by Newton iteration on Pₙ.
    pub fn compute(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi initial guess
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, d) = legendre_and_derivative(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrate f over [a, b] with this rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F, a: f64, b: f64) -> f64 {
        let mid = 0.5 * (a + b);
        let hw = 0.5 * (b - a);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + hw * x);
        }
        hw * sum
    }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Shared cache of Gauss–Legendre rules by order.
pub fn gauss_legendre(n: usize) -> Arc<GaussLegendre> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussLegendre>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry(n)
        .or_insert_with(|| Arc::new(GaussLegendre::compute(n)))
        .clone()
}

/// Adaptive integration of a smooth integrand by recursive bisection with an
/// embedded GL15/GL31 error estimate.
pub fn adaptive<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<f64> {
    let lo = gauss_legendre(15);
    let hi = gauss_legendre(31);
    let mut total = 0.0;
    let mut worst: f64 = 0.0;
    // explicit stack of (a, b, depth)
    let mut stack = vec![(a, b, 0u32)];
    while let Some((a, b, depth)) = stack.pop() {
        let coarse = lo.integrate(&mut f, a, b);
        let fine = hi.integrate(&mut f, a, b);
        let err = (fine - coarse).abs();
        if err <= rel_tol * fine.abs() + abs_tol || depth >= 60 {
            if depth >= 60 {
                worst = worst.max(err);
            }
            total += fine;
        } else {
            let mid = 0.5 * (a + b);
            stack.push((a, mid, depth + 1));
            stack.push((mid, b, depth + 1));
        }
    }
    if worst > 0.0 && worst > rel_tol * total.abs() + abs_tol {
        return Err(Error::QuadratureNonConvergence {
            context: format!("adaptive on [{a}, {b}]"),
            achieved: worst,
            requested: rel_tol * total.abs() + abs_tol,
        });
    }
    Ok(total)
}

/// Wynn epsilon extrapolation of a sequence of partial sums. Estimates are
/// read from even epsilon columns only; odd columns are auxiliary and a
/// degenerate (zero or non-finite) difference anywhere stops the table with
/// the last even-column estimate.
pub fn wynn_epsilon(partial: &[f64]) -> f64 {
    if partial.is_empty() {
        return 0.0;
    }
    let mut prev: Vec<f64> = vec![0.0; partial.len() + 1];
    let mut curr: Vec<f64> = partial.to_vec();
    let mut best = *partial.last().unwrap();
    let mut col = 0usize; // epsilon-column index of `curr`
    while curr.len() >= 2 {
        let mut next = Vec::with_capacity(curr.len() - 1);
        let mut degenerate = false;
        for i in 0..curr.len() - 1 {
            let d = curr[i + 1] - curr[i];
            let scale = curr[i].abs().max(curr[i + 1].abs());
            if !d.is_finite() || d.abs() <= f64::MIN_POSITIVE.max(1e-16 * scale) * 0.5 {
                // converged (even column) or degenerate auxiliary entry
                if col % 2 == 0 {
                    best = curr[i + 1];
                }
                degenerate = true;
                break;
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        if degenerate || next.is_empty() || next.iter().any(|v| !v.is_finite()) {
            break;
        }
        prev = curr;
        curr = next;
        col += 1;
        if col % 2 == 0 {
            best = *curr.last().unwrap();
        }
    }
    best
}

/// Tail ∫_from^∞ f(q) dq of an integrand oscillating with angular frequency
/// `omega` (sign changes every π/ω): segment-by-segment sums accelerated with
/// the epsilon algorithm. The envelope must decay (or grow slower than the
/// oscillation cancels); convergence is checked on the extrapolation.
pub fn oscillatory_tail<F: FnMut(f64) -> f64>(
    mut f: F,
    omega: f64,
    from: f64,
    rel_tol: f64,
) -> Result<f64> {
    oscillatory_tail_abs(&mut f, omega, from, rel_tol, 0.0)
}

/// [`oscillatory_tail`] with an additional absolute floor below which the
/// extrapolation error is accepted (for tails that are negligible on the
/// caller's scale but cannot converge relative to their own size).
pub fn oscillatory_tail_abs<F: FnMut(f64) -> f64>(
    mut f: F,
    omega: f64,
    from: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<f64> {
    let half = std::f64::consts::PI / omega;
    let gl = gauss_legendre(20);
    let mut sums = Vec::with_capacity(72);
    let mut s = 0.0;
    let mut edge = from;
    let mut k = (from / half).ceil() as i64;
    if (k as f64) * half <= from + 1e-14 * half {
        k += 1;
    }
    for _ in 0..72 {
        let next = (k as f64) * half;
        s += gl.integrate(&mut f, edge, next);
        sums.push(s);
        edge = next;
        k += 1;
    }
    let est = wynn_epsilon(&sums);
    // error heuristic: compare extrapolation of the full table with the one
    // dropping the last four segments
    let est2 = wynn_epsilon(&sums[..sums.len() - 4]);
    let err = (est - est2).abs();
    let scale = est.abs().max(sums.last().unwrap().abs()).max(1e-300);
    if err > rel_tol.max(1e-13) * scale + abs_tol {
        return Err(Error::QuadratureNonConvergence {
            context: format!("oscillatory tail from {from} (omega {omega})"),
            achieved: err / scale,
            requested: rel_tol,
        });
    }
    Ok(est)
}

/// ∫_lo^hi of an integrand with oscillation frequency `omega`. Short spans
/// are summed directly over the zero-delimited segments; long spans are
/// evaluated as tail(lo) − tail(hi) with both tails extending the local
/// envelope, which cancels exactly in the difference.
pub fn oscillatory_range<F: FnMut(f64) -> f64>(
    f: &mut F,
    lo: f64,
    hi: f64,
    omega: f64,
    rel_tol: f64,
) -> Result<f64> {
    oscillatory_range_abs(f, lo, hi, omega, rel_tol, 0.0)
}

/// [`oscillatory_range`] with an absolute tolerance floor for the tails.
pub fn oscillatory_range_abs<F: FnMut(f64) -> f64>(
    f: &mut F,
    lo: f64,
    hi: f64,
    omega: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<f64> {
    debug_assert!(hi > lo && omega > 0.0);
    let half = std::f64::consts::PI / omega;
    let n_osc = (hi - lo) / half;
    if n_osc <= 80.0 {
        let gl = gauss_legendre(20);
        let mut s = 0.0;
        let mut edge = lo;
        let mut k = (lo / half).floor() as i64 + 1;
        while edge < hi {
            let next = ((k as f64) * half).min(hi);
            if next > edge {
                s += gl.integrate(&mut *f, edge, next);
            }
            edge = next;
            k += 1;
        }
        Ok(s)
    } else {
        let t_lo = oscillatory_tail_abs(&mut *f, omega, lo, rel_tol, abs_tol)?;
        let t_hi = oscillatory_tail_abs(&mut *f, omega, hi, rel_tol, abs_tol)?;
        Ok(t_lo - t_hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gl_rule_exactness() {
        // n-point rule integrates degree 2n-1 polynomials exactly
        let gl = gauss_legendre(8);
        let exact = 2.0 / 16.0 + 2.0 / 4.0; // int_-1^1 (x^14/8... ) pick simple: x^14 + x^2
        let got = gl.integrate(|x| x.powi(14) + x * x, -1.0, 1.0);
        assert_relative_eq!(got, 2.0 / 15.0 + 2.0 / 3.0, max_relative = 1e-14);
        let _ = exact;
    }

    #[test]
    fn adaptive_known_integrals() {
        let v = adaptive(|x| x.exp(), 0.0, 1.0, 1e-13, 0.0).unwrap();
        assert_relative_eq!(v, std::f64::consts::E - 1.0, max_relative = 1e-12);
        let v = adaptive(|x| 1.0 / (1.0 + x * x), 0.0, 1.0, 1e-13, 0.0).unwrap();
        assert_relative_eq!(v, std::f64::consts::FRAC_PI_4, max_relative = 1e-12);
    }

    #[test]
    fn oscillatory_tail_dirichlet() {
        // int_pi^inf sin(x)/x dx = Si(inf) - Si(pi) = pi/2 - Si(pi)
        let si_pi = 1.851_937_051_982_066_6; // Si(pi), mpmath
        let v = oscillatory_tail(|x| x.sin() / x, 1.0, std::f64::consts::PI, 1e-12).unwrap();
        assert_relative_eq!(v, std::f64::consts::FRAC_PI_2 - si_pi, max_relative = 1e-10);
    }

    #[test]
    fn oscillatory_range_matches_adaptive() {
        // moderately oscillatory integral computable both ways
        let mut f = |x: f64| (3.0 * x).sin() * (-0.1 * x).exp();
        let a = adaptive(|x| (3.0 * x).sin() * (-0.1 * x).exp(), 0.5, 40.0, 1e-13, 0.0).unwrap();
        let b = oscillatory_range(&mut f, 0.5, 40.0, 3.0, 1e-12).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-9);
    }

    #[test]
    fn oscillatory_long_range_via_tails() {
        // int_a^b sin(x)/x with b far away: tail difference path
        let mut f = |x: f64| x.sin() / x;
        let got = oscillatory_range(&mut f, 1.0, 4000.0, 1.0, 1e-12).unwrap();
        // Si(4000) - Si(1), mpmath
        assert_relative_eq!(got, 0.624_895_785_863_761_18, max_relative = 1e-9);
    }
}
