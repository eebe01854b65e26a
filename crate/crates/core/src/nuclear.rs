//! Nuclear charge-distribution models (point, homogeneous sphere, Fermi),
//! their momentum-space form factors, and the embedded rms-radius table.
//!
//! Conventions: the radial density ρ(r) used here is normalized to the charge
//! number Z (the elementary charge is factored out); form factors are
//! returned in the same units, i.e. `form_factor(q→0) = Z`. The Fermi skin
//! thickness t is the 10%–90% falloff distance, t = 4·ln(3)·a with a the
//! diffuseness.

use crate::constants::{ALPHA, HBARC_GEV_FM};
use crate::quadrature;
use crate::specfun::sph_j1;
use crate::{Error, Result};
use std::path::Path;

/// Factor between the homogeneous-sphere radius and the rms radius,
/// R = sqrt(5/3)·R_rms.
pub const SPHERE_RMS_FACTOR: f64 = 1.290_994_448_735_805_6; // sqrt(5/3)

/// Nuclear charge distribution. Lengths are stored in GeV⁻¹ (natural units);
/// constructors taking fm do the conversion.
#[derive(Debug, Clone, PartialEq)]
pub enum NuclearModel {
    Point {
        z: u32,
    },
    /// Homogeneous sphere of radius R (GeV⁻¹).
    Sphere {
        z: u32,
        radius: f64,
    },
    /// Two-parameter Fermi distribution ρ ∝ 1/(1+exp((r−c)/a)), stored with
    /// the half-density radius c and diffuseness a (GeV⁻¹) plus the
    /// numerically enforced normalization.
    Fermi(FermiModel),
}

/// Fermi distribution with cached normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct FermiModel {
    pub z: u32,
    /// Half-density radius, GeV⁻¹.
    pub c: f64,
    /// Diffuseness a = t / (4 ln 3), GeV⁻¹.
    pub a: f64,
    rho0: f64,
}

pub fn fm_to_gev_inv(x_fm: f64) -> f64 {
    x_fm / HBARC_GEV_FM
}

pub fn gev_inv_to_fm(x: f64) -> f64 {
    x * HBARC_GEV_FM
}

/// R = sqrt(5/3)·r_rms (same unit in and out).
pub fn rms_to_sphere_radius(r_rms: f64) -> Result<f64> {
    if !(r_rms > 0.0) {
        return Err(Error::Domain(format!(
            "rms_to_sphere_radius: need r_rms > 0, got {r_rms}"
        )));
    }
    Ok(SPHERE_RMS_FACTOR * r_rms)
}

/// Inverse of [`rms_to_sphere_radius`].
pub fn sphere_radius_to_rms(radius: f64) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::Domain(format!(
            "sphere_radius_to_rms: need radius > 0, got {radius}"
        )));
    }
    Ok(radius / SPHERE_RMS_FACTOR)
}

impl NuclearModel {
    pub fn point(z: u32) -> Result<Self> {
        check_z(z)?;
        Ok(NuclearModel::Point { z })
    }

    /// Homogeneous sphere from the rms radius in fm.
    pub fn sphere_from_rms_fm(z: u32, r_rms_fm: f64) -> Result<Self> {
        check_z(z)?;
        let radius = fm_to_gev_inv(rms_to_sphere_radius(r_rms_fm)?);
        Ok(NuclearModel::Sphere { z, radius })
    }

    /// Fermi distribution from the rms radius and skin thickness in fm;
    /// the half-density radius c is solved from the second-moment equation
    /// by bisection.
    pub fn fermi_from_rms_fm(z: u32, r_rms_fm: f64, t_fm: f64) -> Result<Self> {
        check_z(z)?;
        if !(r_rms_fm > 0.0 && t_fm > 0.0) {
            return Err(Error::Domain(format!(
                "fermi_from_rms_fm: need positive radii, got rms={r_rms_fm}, t={t_fm}"
            )));
        }
        let a = fm_to_gev_inv(t_fm / (4.0 * 3.0f64.ln()));
        let rms = fm_to_gev_inv(r_rms_fm);
        let rms_of_c = |c: f64| -> Result<f64> {
            let xmax = c + 40.0 * a;
            let m2 = quadrature::adaptive(|r| r * r / (1.0 + ((r - c) / a).exp()), 0.0, xmax, 1e-12, 0.0)?;
            let m4 = quadrature::adaptive(
                |r| r * r * r * r / (1.0 + ((r - c) / a).exp()),
                0.0,
                xmax,
                1e-12,
                0.0,
            )?;
            Ok((m4 / m2).sqrt())
        };
        let (mut lo, mut hi) = (1e-3 * rms, 3.0 * rms + 10.0 * a);
        if rms_of_c(hi)? < rms {
            return Err(Error::Domain(format!(
                "fermi_from_rms_fm: rms {r_rms_fm} fm unreachable with t = {t_fm} fm"
            )));
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if rms_of_c(mid)? < rms {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-14 * rms {
                break;
            }
        }
        Self::fermi_from_c_a(z, 0.5 * (lo + hi), a)
    }

    /// Fermi distribution from explicit (c, a) in GeV⁻¹.
    pub fn fermi_from_c_a(z: u32, c: f64, a: f64) -> Result<Self> {
        check_z(z)?;
        if !(c > 0.0 && a > 0.0) {
            return Err(Error::Domain(format!(
                "fermi_from_c_a: need c > 0 and a > 0, got c={c}, a={a}"
            )));
        }
        let norm = quadrature::adaptive(
            |r| r * r / (1.0 + ((r - c) / a).exp()),
            0.0,
            c + 40.0 * a,
            1e-12,
            0.0,
        )?;
        let rho0 = z as f64 / (4.0 * std::f64::consts::PI * norm);
        Ok(NuclearModel::Fermi(FermiModel { z, c, a, rho0 }))
    }

    pub fn z(&self) -> u32 {
        match self {
            NuclearModel::Point { z } => *z,
            NuclearModel::Sphere { z, .. } => *z,
            NuclearModel::Fermi(f) => f.z,
        }
    }

    /// Radial charge density normalized to Z (zero for the point model
    /// except at the origin, where it is a delta distribution).
    pub fn density(&self, r: f64) -> f64 {
        match self {
            NuclearModel::Point { .. } => 0.0,
            NuclearModel::Sphere { z, radius } => {
                if r <= *radius {
                    3.0 * *z as f64 / (4.0 * std::f64::consts::PI * radius.powi(3))
                } else {
                    0.0
                }
            }
            NuclearModel::Fermi(f) => f.rho0 / (1.0 + ((r - f.c) / f.a).exp()),
        }
    }

    /// Radius beyond which the density is negligible (exactly zero for the
    /// sphere); the integration cutoff used by the quadratures.
    pub fn support_radius(&self) -> f64 {
        match self {
            NuclearModel::Point { .. } => 0.0,
            NuclearModel::Sphere { radius, .. } => *radius,
            NuclearModel::Fermi(f) => f.c + 40.0 * f.a,
        }
    }

    /// Electrostatic potential energy V(r) of the electron in this charge
    /// distribution, in GeV (r in GeV⁻¹).
    pub fn coulomb_potential(&self, r: f64) -> f64 {
        let z = self.z() as f64;
        match self {
            NuclearModel::Point { .. } => -z * ALPHA / r,
            NuclearModel::Sphere { radius, .. } => {
                if r >= *radius {
                    -z * ALPHA / r
                } else {
                    -z * ALPHA * (3.0 * radius * radius - r * r) / (2.0 * radius.powi(3))
                }
            }
            NuclearModel::Fermi(f) => f.coulomb_potential(r),
        }
    }

    /// Momentum-space form factor ρ̃(q) normalized to Z at q = 0.
    pub fn form_factor(&self, q: f64) -> Result<f64> {
        if q < 0.0 {
            return Err(Error::Domain(format!("form_factor: q must be >= 0, got {q}")));
        }
        let z = self.z() as f64;
        match self {
            NuclearModel::Point { .. } => Ok(z),
            NuclearModel::Sphere { radius, .. } => {
                let y = q * radius;
                if y < 1e-8 {
                    Ok(z)
                } else {
                    Ok(z * 3.0 * sph_j1(y) / y)
                }
            }
            NuclearModel::Fermi(f) => f.form_factor(q),
        }
    }
}

impl FermiModel {
    /// (4π/q)·∫ r sin(qr) ρ(r) dr; the integrand carries both the sin(qr)
    /// oscillation and the sharp density edge at r = c, so each
    /// zero-delimited segment is integrated adaptively.
    pub fn form_factor(&self, q: f64) -> Result<f64> {
        let xmax = self.c + 40.0 * self.a;
        if q * xmax < 1e-3 {
            // 1 - q^2 <r^2>/6 regime; integrate the expansion directly
            let m2 = quadrature::adaptive(
                |r| r.powi(4) * self.density_unit(r),
                0.0,
                xmax,
                1e-12,
                0.0,
            )?;
            return Ok(self.z as f64 - q * q * 4.0 * std::f64::consts::PI * self.rho0 * m2 / 6.0);
        }
        let half = std::f64::consts::PI / q;
        let mut integral = 0.0;
        let mut edge = 0.0f64;
        while edge < xmax {
            let next = (edge + half).min(xmax);
            integral += quadrature::adaptive(
                |r| r * (q * r).sin() * self.density_unit(r),
                edge,
                next,
                1e-11,
                1e-300,
            )?;
            edge = next;
        }
        Ok(4.0 * std::f64::consts::PI * self.rho0 * integral / q)
    }

    fn density_unit(&self, r: f64) -> f64 {
        1.0 / (1.0 + ((r - self.c) / self.a).exp())
    }

    /// V(r) from the enclosed-charge integrals, adaptively evaluated.
    pub fn coulomb_potential(&self, r: f64) -> f64 {
        let z = self.z as f64;
        let xmax = self.c + 40.0 * self.a;
        if r >= xmax {
            return -z * ALPHA / r;
        }
        let pref = 4.0 * std::f64::consts::PI * self.rho0;
        // charge inside r (over r) plus potential of the shell outside r
        let q_in = quadrature::adaptive(|x| x * x * self.density_unit(x), 0.0, r, 1e-11, 1e-300)
            .unwrap_or(0.0);
        let shell = quadrature::adaptive(|x| x * self.density_unit(x), r, xmax, 1e-11, 1e-300)
            .unwrap_or(0.0);
        -ALPHA * pref * (q_in / r.max(1e-300) + shell)
    }
}

fn check_z(z: u32) -> Result<()> {
    if z == 0 {
        return Err(Error::Domain("charge number Z must be >= 1".into()));
    }
    if z as f64 * ALPHA >= 1.0 {
        return Err(Error::Domain(format!(
            "Z = {z} has Z*alpha >= 1; gamma is imaginary for |kappa| = 1"
        )));
    }
    Ok(())
}

/// rms charge radius table: Z → (R_rms fm, uncertainty fm).
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusTable {
    entries: Vec<(u32, f64, f64)>,
}

impl RadiusTable {
    pub fn lookup(&self, z: u32) -> Result<(f64, f64)> {
        self.entries
            .iter()
            .find(|e| e.0 == z)
            .map(|e| (e.1, e.2))
            .ok_or(Error::RadiusLookup(z))
    }

    pub fn entries(&self) -> &[(u32, f64, f64)] {
        &self.entries
    }

    /// Merge entries from another table, overriding duplicates.
    pub fn merge(&mut self, other: &RadiusTable) {
        for &(z, r, u) in &other.entries {
            if let Some(e) = self.entries.iter_mut().find(|e| e.0 == z) {
                *e = (z, r, u);
            } else {
                self.entries.push((z, r, u));
            }
        }
        self.entries.sort_by_key(|e| e.0);
    }
}

/// Embedded rms radii (fm) for the systems covered by the result tables.
pub fn builtin_radii() -> RadiusTable {
    RadiusTable {
        entries: vec![
            (1, 0.8783, 0.0086),
            (14, 3.1224, 0.0024),
            (20, 3.4776, 0.0019),
            (36, 4.1884, 0.0022),
            (54, 4.7859, 0.0048),
            (74, 5.3658, 0.0023),
            (82, 5.5012, 0.0013),
            (96, 5.85, 0.0),
        ],
    }
}

/// Load a radius CSV with header `Z,R_rms_fm,uncertainty_fm`.
pub fn load_radii(path: &Path) -> Result<RadiusTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: 0,
        message: e.to_string(),
    })?;
    parse_radii(&text, &path.display().to_string())
}

/// Parse radius CSV text (see [`load_radii`]).
pub fn parse_radii(text: &str, path: &str) -> Result<RadiusTable> {
    let mut lines = text.lines().enumerate();
    let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
        path: path.into(),
        line: 0,
        message: "empty file".into(),
    })?;
    let norm: String = header.split(',').map(|s| s.trim().to_lowercase() + ",").collect();
    if norm != "z,r_rms_fm,uncertainty_fm," {
        return Err(Error::Parse {
            path: path.into(),
            line: hline + 1,
            message: format!("expected header 'Z,R_rms_fm,uncertainty_fm', got '{header}'"),
        });
    }
    let mut entries = Vec::new();
    for (i, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').map(str::trim).collect();
        if cols.len() != 3 {
            return Err(Error::Parse {
                path: path.into(),
                line: i + 1,
                message: format!("expected 3 columns, got {}", cols.len()),
            });
        }
        let parse_err = |f: &str| Error::Parse {
            path: path.into(),
            line: i + 1,
            message: format!("not a number: '{f}'"),
        };
        let z: u32 = cols[0].parse().map_err(|_| parse_err(cols[0]))?;
        let r: f64 = cols[1].parse().map_err(|_| parse_err(cols[1]))?;
        let u: f64 = cols[2].parse().map_err(|_| parse_err(cols[2]))?;
        if !(r > 0.0) || u < 0.0 {
            return Err(Error::Parse {
                path: path.into(),
                line: i + 1,
                message: format!("invalid radius row: Z={z}, R={r}, unc={u}"),
            });
        }
        entries.push((z, r, u));
    }
    entries.sort_by_key(|e| e.0);
    Ok(RadiusTable { entries })
}
