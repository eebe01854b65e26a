//! Length and energy unit conversions at the I/O boundary.

use crate::constants::{HBARC_GEV_FM, M_ELECTRON};

/// Length units understood by the CLI and conversion helpers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthUnit {
    /// Natural unit, GeV⁻¹.
    InverseGev,
    /// Femtometer.
    Fm,
    /// Reduced Compton wavelength of the electron, 1/mₑ.
    ElectronCompton,
}

/// Energy units understood by the CLI and conversion helpers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyUnit {
    Gev,
    Ev,
    MilliEv,
}

impl LengthUnit {
    /// Factor turning a value in this unit into GeV⁻¹.
    fn to_inverse_gev(self) -> f64 {
        match self {
            LengthUnit::InverseGev => 1.0,
            LengthUnit::Fm => 1.0 / HBARC_GEV_FM,
            LengthUnit::ElectronCompton => 1.0 / M_ELECTRON,
        }
    }
}

impl EnergyUnit {
    fn to_gev(self) -> f64 {
        match self {
            EnergyUnit::Gev => 1.0,
            EnergyUnit::Ev => 1e-9,
            EnergyUnit::MilliEv => 1e-12,
        }
    }
}

/// Exact linear rescale between length units.
pub fn convert_length(x: f64, from: LengthUnit, to: LengthUnit) -> f64 {
    if from == to {
        return x;
    }
    x * from.to_inverse_gev() / to.to_inverse_gev()
}

/// Exact linear rescale between energy units.
pub fn convert_energy(x: f64, from: EnergyUnit, to: EnergyUnit) -> f64 {
    if from == to {
        return x;
    }
    x * from.to_gev() / to.to_gev()
}
