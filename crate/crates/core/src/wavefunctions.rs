//! Analytic relativistic Dirac-Coulomb radial wavefunctions (g, f) for point
//! nuclei, their non-relativistic limits, and normalization utilities.
//!
//! States are labeled by (n, κ); the radial components carry the usual
//! normalization ∫ (g² + f²) r² dr = 1 and the r^(γ−1) origin behavior with
//! γ = √(κ² − (Zα)²).

use crate::constants::ALPHA;
use crate::specfun::ln_gamma;
use crate::{Error, Result};

/// Hydrogenic bound-state label: principal quantum number, relativistic
/// angular quantum number κ, lepton mass (GeV) and nuclear charge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundStateLabel {
    pub n: u32,
    pub kappa: i32,
    /// Orbiting lepton mass, GeV.
    pub mass: f64,
    pub z: u32,
}

impl BoundStateLabel {
    pub fn new(n: u32, kappa: i32, mass: f64, z: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidQuantumNumbers("n must be >= 1".into()));
        }
        if kappa == 0 || kappa < -(n as i32) || kappa > n as i32 - 1 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "kappa = {kappa} invalid for n = {n} (need -n <= kappa <= n-1, kappa != 0)"
            )));
        }
        if !(mass > 0.0) {
            return Err(Error::InvalidQuantumNumbers(format!("mass must be positive, got {mass}")));
        }
        if z == 0 {
            return Err(Error::InvalidQuantumNumbers("Z must be >= 1".into()));
        }
        let za = z as f64 * ALPHA;
        if za >= kappa.unsigned_abs() as f64 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "Z*alpha = {za:.4} >= |kappa| = {}; gamma is imaginary",
                kappa.unsigned_abs()
            )));
        }
        Ok(BoundStateLabel { n, kappa, mass, z })
    }

    /// Radial quantum number n_r = n − |κ|.
    pub fn n_radial(&self) -> u32 {
        self.n - self.kappa.unsigned_abs()
    }

    /// Orbital angular momentum of the large component.
    pub fn ell(&self) -> u32 {
        if self.kappa > 0 {
            self.kappa as u32
        } else {
            (-self.kappa - 1) as u32
        }
    }

    /// Orbital angular momentum of the small component (that of −κ).
    pub fn ell_small(&self) -> u32 {
        if self.kappa > 0 {
            (self.kappa - 1) as u32
        } else {
            (-self.kappa) as u32
        }
    }

    /// γ = √(κ² − (Zα)²).
    pub fn gamma(&self) -> f64 {
        let za = self.z as f64 * ALPHA;
        ((self.kappa as f64).powi(2) - za * za).sqrt()
    }

    /// Number of radial nodes of the large component, n − ℓ − 1.
    pub fn g_nodes(&self) -> u32 {
        self.n - self.ell() - 1
    }

    /// Spectroscopic-style label such as `2p1/2`.
    pub fn spectroscopic(&self) -> String {
        let letters = ['s', 'p', 'd', 'f', 'g', 'h', 'i', 'k'];
        let l = self.ell() as usize;
        let letter = letters.get(l).copied().unwrap_or('?');
        let two_j = if self.kappa > 0 {
            2 * self.kappa - 1
        } else {
            -2 * self.kappa - 1
        };
        format!("{}{}{}/2", self.n, letter, two_j)
    }
}

/// Sommerfeld point-nucleus Dirac eigenvalue (including rest mass), GeV.
pub fn sommerfeld_energy(label: &BoundStateLabel) -> f64 {
    let za = label.z as f64 * ALPHA;
    let denom = label.n_radial() as f64 + label.gamma();
    label.mass / (1.0 + (za / denom).powi(2)).sqrt()
}

/// Binding part of the Sommerfeld eigenvalue, E − m (negative), GeV.
pub fn sommerfeld_binding(label: &BoundStateLabel) -> f64 {
    sommerfeld_energy(label) - label.mass
}

/// Analytic point-Coulomb radial wavefunction.
///
/// g and f are evaluated from the confluent-hypergeometric closed form with
/// log-domain prefactors (the Γ ratios overflow naive evaluation at high Z
/// and large n).
#[derive(Debug, Clone)]
pub struct RadialWavefunction {
    pub label: BoundStateLabel,
    /// Dirac-Sommerfeld eigenvalue including rest mass, GeV.
    pub energy: f64,
    lambda: f64,
    gamma: f64,
    big_n: f64, // N = sqrt(n_r^2 + 2 n_r gamma + kappa^2)
    ln_cg: f64,
    ln_cf: f64,
    sign_f: f64,
}

impl RadialWavefunction {
    /// Exponential decay constant λ = √(m² − E²); for 1s this is Zα·m.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Large component g(r), r in GeV⁻¹.
    pub fn g(&self, r: f64) -> f64 {
        self.component(r).0
    }

    /// Small component f(r).
    pub fn f(&self, r: f64) -> f64 {
        self.component(r).1
    }

    /// (g, f) evaluated together.
    pub fn component(&self, r: f64) -> (f64, f64) {
        let nr = self.label.n_radial();
        let kappa = self.label.kappa as f64;
        let rho = 2.0 * self.lambda * r;
        let b = 2.0 * self.gamma + 1.0;
        let m1 = kummer_poly(-(nr as i32), b, rho);
        let m2 = if nr == 0 { 0.0 } else { kummer_poly(1 - nr as i32, b, rho) };
        let big_n = self.big_n;
        let shape = (self.gamma - 1.0) * rho.ln() - 0.5 * rho;
        let poly_g = (big_n - kappa) * m1 - nr as f64 * m2;
        let poly_f = (big_n - kappa) * m1 + nr as f64 * m2;
        let g = (self.ln_cg + shape).exp() * poly_g;
        let f = self.sign_f * (self.ln_cf + shape).exp() * poly_f;
        (g, f)
    }

    /// g² + f² at radius r.
    pub fn density(&self, r: f64) -> f64 {
        let (g, f) = self.component(r);
        g * g + f * f
    }
}

// Kummer M(a, b, x) for non-positive integer a: a finite polynomial.
fn kummer_poly(a: i32, b: f64, x: f64) -> f64 {
    debug_assert!(a <= 0);
    let terms = (-a) as usize;
    let mut sum = 1.0;
    let mut tk = 1.0;
    for k in 0..terms {
        let kf = k as f64;
        tk *= (a as f64 + kf) * x / ((b + kf) * (kf + 1.0));
        sum += tk;
    }
    sum
}

/// Construct the analytic Dirac-Coulomb bound state for a label.
pub fn dirac_coulomb(label: &BoundStateLabel) -> Result<RadialWavefunction> {
    // label invariants were checked at construction; re-validate to protect
    // against literal struct construction
    let label = BoundStateLabel::new(label.n, label.kappa, label.mass, label.z)?;
    let m = label.mass;
    let gamma = label.gamma();
    let nr = label.n_radial() as f64;
    let kappa = label.kappa as f64;
    let energy = sommerfeld_energy(&label);
    let lambda = (m * m - energy * energy).sqrt();
    let big_n = (nr * nr + 2.0 * nr * gamma + kappa * kappa).sqrt();
    // prefactor^2 = (2 lambda)^3 (m +- E) Gamma(2 gamma + 1 + n_r)
    //              / (4 m N (N - kappa) n_r! Gamma(2 gamma + 1)^2)
    let ln_common = 3.0 * (2.0 * lambda).ln() + ln_gamma(2.0 * gamma + 1.0 + nr)
        - (4.0 * m * big_n * (big_n - kappa)).ln()
        - ln_gamma(nr + 1.0)
        - 2.0 * ln_gamma(2.0 * gamma + 1.0);
    let ln_cg = 0.5 * (ln_common + (m + energy).ln());
    let ln_cf = 0.5 * (ln_common + (m - energy).ln());
    Ok(RadialWavefunction {
        label,
        energy,
        lambda,
        gamma,
        big_n,
        ln_cg,
        ln_cf,
        sign_f: -1.0,
    })
}

/// Non-relativistic s-state density at the origin |ψ(0)|² = (Zα·m)³/(π n³).
pub fn nonrel_density_at_origin(n: u32, z: u32, mass: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidQuantumNumbers("n must be >= 1".into()));
    }
    let za = z as f64 * ALPHA;
    Ok((za * mass).powi(3) / (std::f64::consts::PI * (n as f64).powi(3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{M_ELECTRON, M_MUON};
    use crate::quadrature;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn norm_integral(wf: &RadialWavefunction) -> f64 {
        let tail = 40.0 / wf.lambda();
        quadrature::adaptive(|r| wf.density(r) * r * r, 0.0, tail, 1e-11, 0.0).unwrap()
    }

    #[test]
    fn normalization_across_states() {
        for &(n, kappa, z, mass) in &[
            (1u32, -1i32, 1u32, M_ELECTRON),
            (2, -1, 82, M_ELECTRON),
            (2, 1, 54, M_ELECTRON),
            (2, -2, 82, M_ELECTRON),
            (3, 2, 92, M_ELECTRON),
            (1, -1, 1, M_MUON),
        ] {
            let wf = dirac_coulomb(&BoundStateLabel::new(n, kappa, mass, z).unwrap()).unwrap();
            assert_relative_eq!(norm_integral(&wf), 1.0, max_relative = 1e-8);
        }
    }

    #[test]
    fn sommerfeld_reference_values() {
        // binding energies, mpmath
        let b = sommerfeld_binding(&BoundStateLabel::new(1, -1, M_ELECTRON, 1).unwrap());
        assert_relative_eq!(b, -1.360_587_425_828_976_5e-8, max_relative = 1e-12);
        let b = sommerfeld_binding(&BoundStateLabel::new(1, -1, M_ELECTRON, 82).unwrap());
        assert_relative_eq!(b, -1.015_813_447_518_862_7e-4, max_relative = 1e-12);
        let b = sommerfeld_binding(&BoundStateLabel::new(2, -2, M_ELECTRON, 82).unwrap());
        assert_relative_eq!(b, -2.340_727_754_485_855e-5, max_relative = 1e-12);
        let b = sommerfeld_binding(&BoundStateLabel::new(1, -1, M_MUON, 1).unwrap());
        assert_relative_eq!(b, -2.813_263_258_932_653_3e-6, max_relative = 1e-12);
        // 2s and 2p1/2 degenerate in the point-Dirac spectrum
        let b2s = sommerfeld_binding(&BoundStateLabel::new(2, -1, M_ELECTRON, 82).unwrap());
        let b2p = sommerfeld_binding(&BoundStateLabel::new(2, 1, M_ELECTRON, 82).unwrap());
        assert_relative_eq!(b2s, b2p, max_relative = 1e-15);
    }

    #[test]
    fn dirac_equation_residual() {
        // g' = -((1+kappa)/r) g + (E + m - V) f
        // f' = ((kappa-1)/r) f - (E - m - V) g
        for &(n, kappa, z) in &[(1u32, -1i32, 1u32), (2, 1, 82), (2, -2, 54)] {
            let label = BoundStateLabel::new(n, kappa, M_ELECTRON, z).unwrap();
            let wf = dirac_coulomb(&label).unwrap();
            let za = z as f64 * ALPHA;
            for &rf in &[0.3, 1.0, 3.0] {
                let r = rf / wf.lambda();
                let h = r * 1e-6;
                let (g, f) = wf.component(r);
                let dg = (wf.g(r + h) - wf.g(r - h)) / (2.0 * h);
                let df = (wf.f(r + h) - wf.f(r - h)) / (2.0 * h);
                let v = -za / r;
                let rhs_g = -(1.0 + kappa as f64) / r * g + (wf.energy + label.mass - v) * f;
                let rhs_f = (kappa as f64 - 1.0) / r * f - (wf.energy - label.mass - v) * g;
                let scale = (g.abs() + f.abs()) * wf.lambda();
                assert!((dg - rhs_g).abs() < 1e-6 * scale, "g residual at {n},{kappa},{z}");
                assert!((df - rhs_f).abs() < 1e-6 * scale, "f residual at {n},{kappa},{z}");
            }
        }
    }

    #[test]
    fn ground_state_shape() {
        // g ~ r^(gamma-1) e^(-lambda r) with lambda = Z alpha m for 1s
        let label = BoundStateLabel::new(1, -1, M_ELECTRON, 30).unwrap();
        let wf = dirac_coulomb(&label).unwrap();
        assert_relative_eq!(wf.lambda(), 30.0 * ALPHA * M_ELECTRON, max_relative = 1e-12);
        let gamma = label.gamma();
        let shape = |r: f64| wf.g(r) / (r.powf(gamma - 1.0) * (-wf.lambda() * r).exp());
        let c1 = shape(0.3 / wf.lambda());
        let c2 = shape(2.0 / wf.lambda());
        assert_relative_eq!(c1, c2, max_relative = 1e-10);
    }

    #[test]
    fn orthogonality_same_kappa() {
        let l1 = BoundStateLabel::new(1, -1, M_ELECTRON, 54).unwrap();
        let l2 = BoundStateLabel::new(2, -1, M_ELECTRON, 54).unwrap();
        let w1 = dirac_coulomb(&l1).unwrap();
        let w2 = dirac_coulomb(&l2).unwrap();
        let overlap = quadrature::adaptive(
            |r| (w1.g(r) * w2.g(r) + w1.f(r) * w2.f(r)) * r * r,
            0.0,
            60.0 / w2.lambda(),
            1e-12,
            1e-14,
        )
        .unwrap();
        assert!(overlap.abs() < 1e-7, "overlap = {overlap}");
    }

    #[test]
    fn small_component_suppression_grows_with_z() {
        let frac = |z: u32| {
            let wf = dirac_coulomb(&BoundStateLabel::new(1, -1, M_ELECTRON, z).unwrap()).unwrap();
            let tail = 40.0 / wf.lambda();
            let fg: f64 = quadrature::adaptive(|r| wf.f(r).powi(2) * r * r, 0.0, tail, 1e-10, 0.0)
                .unwrap();
            let gg: f64 = quadrature::adaptive(|r| wf.g(r).powi(2) * r * r, 0.0, tail, 1e-10, 0.0)
                .unwrap();
            fg / gg
        };
        let f1 = frac(1);
        let f82 = frac(82);
        let za1 = ALPHA;
        let za82 = 82.0 * ALPHA;
        // O((Z alpha)^2): within a factor of a few of (Z alpha / 2)^2
        assert!(f1 / (za1 * za1) > 0.1 && f1 / (za1 * za1) < 1.0, "f1 = {f1}");
        assert!(f82 / (za82 * za82) > 0.1 && f82 / (za82 * za82) < 1.0, "f82 = {f82}");
        assert!(f82 > f1);
    }

    #[test]
    fn approximate_2p12_components_at_small_z() {
        // lowest order in Z alpha:
        //   g = -sqrt(Za/2) (Za)^2 r / (2 sqrt3) exp(-Za r / 2)
        //   f = -(Za/2)^{3/2} 3 Za / (2 sqrt3) exp(-Za r / 2)
        // in units m = 1; relative accuracy O((Z alpha)^2)
        let label = BoundStateLabel::new(2, 1, 1.0, 1).unwrap();
        let wf = dirac_coulomb(&label).unwrap();
        let za = ALPHA;
        for &rf in &[0.5, 1.0, 4.0] {
            let r = rf / za; // natural 2p scale
            let g_model = -(za / 2.0).sqrt() * za * za * r / (2.0 * 3.0f64.sqrt())
                * (-za * r / 2.0).exp();
            assert_relative_eq!(wf.g(r), g_model, max_relative = 5e-4);
        }
        // the printed f is the r -> 0 amplitude (the exact shape carries an
        // extra (3 - Za r/2)/3 falloff), so compare it near the origin
        for &rf in &[1e-3, 1e-2] {
            let r = rf / za;
            let f_model = -(za / 2.0).powf(1.5) * 3.0 * za / (2.0 * 3.0f64.sqrt())
                * (-za * r / 2.0).exp();
            assert_relative_eq!(wf.f(r), f_model, max_relative = 5e-3);
        }
    }

    #[test]
    fn nonrel_density_values() {
        let d = nonrel_density_at_origin(1, 1, M_ELECTRON).unwrap();
        assert_relative_eq!(
            d,
            (ALPHA * M_ELECTRON).powi(3) / std::f64::consts::PI,
            max_relative = 1e-15
        );
        let r12 = nonrel_density_at_origin(1, 1, M_ELECTRON).unwrap()
            / nonrel_density_at_origin(2, 1, M_ELECTRON).unwrap();
        assert_relative_eq!(r12, 8.0, max_relative = 1e-14);
        let z_scaling = nonrel_density_at_origin(1, 3, M_ELECTRON).unwrap()
            / nonrel_density_at_origin(1, 1, M_ELECTRON).unwrap();
        assert_relative_eq!(z_scaling, 27.0, max_relative = 1e-12);
    }

    #[test]
    fn label_validation() {
        assert!(BoundStateLabel::new(1, -1, M_ELECTRON, 1).is_ok());
        assert!(BoundStateLabel::new(1, 1, M_ELECTRON, 1).is_err()); // kappa <= n-1
        assert!(BoundStateLabel::new(2, 0, M_ELECTRON, 1).is_err());
        assert!(BoundStateLabel::new(2, 2, M_ELECTRON, 1).is_err());
        assert!(BoundStateLabel::new(2, -3, M_ELECTRON, 1).is_err());
        assert!(BoundStateLabel::new(1, -1, M_ELECTRON, 140).is_err()); // Z alpha > 1
        assert!(BoundStateLabel::new(2, -2, M_ELECTRON, 150).is_ok()); // |kappa| = 2 allows higher Z
        assert_eq!(
            BoundStateLabel::new(2, 1, M_ELECTRON, 1).unwrap().spectroscopic(),
            "2p1/2"
        );
        assert_eq!(
            BoundStateLabel::new(2, -2, M_ELECTRON, 1).unwrap().spectroscopic(),
            "2p3/2"
        );
    }

    proptest! {
        #[test]
        fn sommerfeld_matches_expansion(z in 1u32..100, n in 1u32..4) {
            // binding = -m (Za)^2 / (2 n^2) (1 + O((Za)^2))
            prop_assume!((z as f64) * ALPHA < 1.0);
            let label = BoundStateLabel::new(n, -1, M_ELECTRON, z).unwrap();
            let b = sommerfeld_binding(&label);
            let za = z as f64 * ALPHA;
            let nonrel = -M_ELECTRON * za * za / (2.0 * (n as f64).powi(2));
            prop_assert!((b - nonrel).abs() < 1.5 * za * za * nonrel.abs() + 1e-30);
        }
    }
}
