//! Physical constants, pinned for reproducibility (CODATA 2018 / PDG).
//!
//! Natural units with ħ = c = 1 are used throughout the crate: energies and
//! masses in GeV, lengths in GeV⁻¹. `HBARC_GEV_FM` carries the conversion to
//! femtometers.

/// Fine-structure constant α.
pub const ALPHA: f64 = 7.297_352_569_3e-3;

/// Electron mass in GeV.
pub const M_ELECTRON: f64 = 0.510_998_950_00e-3;

/// Muon mass in GeV.
pub const M_MUON: f64 = 0.105_658_375_5;

/// Proton mass in GeV (reduced-mass display mode only).
pub const M_PROTON: f64 = 0.938_272_088_16;

/// Z-boson mass in GeV; one of the momentum-region edges of the hadronic
/// polarization parameterization.
pub const M_Z_BOSON: f64 = 91.1876;

/// ħc in GeV·fm.
pub const HBARC_GEV_FM: f64 = 0.197_326_980_4;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Frozen constant set, exposed as a value for callers that want to thread
/// the constants explicitly (all operations in this crate read the statics).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub alpha: f64,
    /// Electron mass, GeV.
    pub m_e: f64,
    /// Muon mass, GeV.
    pub m_mu: f64,
    /// Z-boson mass, GeV.
    pub m_z: f64,
    /// ħc, GeV·fm.
    pub hbar_c: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            alpha: ALPHA,
            m_e: M_ELECTRON,
            m_mu: M_MUON,
            m_z: M_Z_BOSON,
            hbar_c: HBARC_GEV_FM,
        }
    }
}
