//! Hadronic vacuum-polarization Uehling potentials and the resulting
//! energy shifts of hydrogenlike ions and muonic hydrogen.
//!
//! The polarization function Re Π(−q²) is the piecewise log parameterization
//! fitted to e⁺e⁻ → hadrons data; from it the crate builds the effective
//! Uehling potential in several variants (closed-form point approximation,
//! full piecewise momentum quadrature, closed-form homogeneous sphere,
//! numerical convolution for arbitrary spherical charge models) and evaluates
//! first-order level shifts with analytic Dirac-Coulomb wavefunctions or with
//! a finite-nuclear-size B-spline Galerkin solver.
//!
//! All internal computation is in natural units (GeV powers); unit
//! conversions happen only at the I/O boundary via [`units`].

pub mod constants;
pub mod nuclear;
pub mod polarization;
pub mod potentials;
pub mod quadrature;
pub mod reference;
pub mod shifts;
pub mod solver;
pub mod specfun;
pub mod units;
pub mod wavefunctions;

mod error;

pub use error::Error;
pub use nuclear::{NuclearModel, RadiusTable};
pub use polarization::{LoopSpecies, PolarizationParamSet};
pub use potentials::{PotentialMethod, PotentialSpec, RadialPotential};
pub use shifts::{ShiftMethod, ShiftRequest, ShiftResult};
pub use solver::{SolverConfig, SpectrumResult};
pub use wavefunctions::{BoundStateLabel, RadialWavefunction};

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
