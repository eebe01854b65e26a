//! Energy-shift engine: analytic 1s closed form, Zα expansions for
//! 1s/2s/2p₁/₂/2p₃/₂, non-relativistic values, relativistic point-nucleus
//! expectation values for general states, finite-size pipeline orchestration,
//! and uncertainty assembly.
//!
//! Shift operations return eV (meV only via the units module); everything
//! under the hood stays in GeV.

use crate::constants::{ALPHA, M_MUON, M_PROTON};
use crate::nuclear::{self, NuclearModel};
use crate::polarization::PolarizationParamSet;
use crate::potentials::{uehling_point_approx, PotentialMethod, PotentialSpec, RadialPotential};
use crate::quadrature;
use crate::solver::{solve_dirac_fns, SolverConfig};
use crate::specfun::hyp2f1;
use crate::wavefunctions::{dirac_coulomb, BoundStateLabel};
use crate::{Error, LoopSpecies, Result};

const GEV_TO_EV: f64 = 1e9;

/// Evaluation route for [`shift_perturbative`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMethod {
    /// Leading non-relativistic term (s states).
    NonRelPoint,
    /// All-order closed form with analytic wavefunctions (1s only).
    RelPointAnalytic,
    /// Expectation value with analytic point-Coulomb wavefunctions, any state.
    RelPointNumeric,
    /// Finite-size wavefunctions with the first-region finite-size potential
    /// (closed-form sphere or convolved density).
    RelFnsApprox,
    /// Finite-size wavefunctions with the full piecewise momentum-quadrature
    /// potential.
    RelFnsFull,
}

impl ShiftMethod {
    pub fn name(&self) -> &'static str {
        match self {
            ShiftMethod::NonRelPoint => "nonrel-point",
            ShiftMethod::RelPointAnalytic => "rel-point-analytic",
            ShiftMethod::RelPointNumeric => "rel-point-numeric",
            ShiftMethod::RelFnsApprox => "rel-fns-approx",
            ShiftMethod::RelFnsFull => "rel-fns-full",
        }
    }
}

/// A single shift evaluation with its uncertainty inputs.
#[derive(Debug, Clone)]
pub struct ShiftRequest {
    pub label: BoundStateLabel,
    pub model: NuclearModel,
    pub method: ShiftMethod,
    pub params: PolarizationParamSet,
    /// Alternate polarization parameter set; when present, the spread between
    /// sets is reported as the parameterization uncertainty (dominant error
    /// of the published numbers). Absent: that term is zero.
    pub alt_params: Option<PolarizationParamSet>,
    /// rms-radius uncertainty (fm) propagated by symmetric recomputation at
    /// R ± σ for the finite-size methods.
    pub radius_unc_fm: Option<f64>,
    /// Solver discretization override.
    pub solver_config: Option<SolverConfig>,
}

impl ShiftRequest {
    pub fn new(
        label: BoundStateLabel,
        model: NuclearModel,
        method: ShiftMethod,
        params: PolarizationParamSet,
    ) -> Self {
        ShiftRequest {
            label,
            model,
            method,
            params,
            alt_params: None,
            radius_unc_fm: None,
            solver_config: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.label.z != self.model.z() {
            return Err(Error::Unsupported(format!(
                "label Z = {} but model Z = {}",
                self.label.z,
                self.model.z()
            )));
        }
        let point = matches!(self.model, NuclearModel::Point { .. });
        match self.method {
            ShiftMethod::NonRelPoint | ShiftMethod::RelPointAnalytic | ShiftMethod::RelPointNumeric => {
                if !point {
                    return Err(Error::Unsupported(format!(
                        "{} requires the point model",
                        self.method.name()
                    )));
                }
            }
            ShiftMethod::RelFnsApprox | ShiftMethod::RelFnsFull => {
                if point {
                    return Err(Error::Unsupported(format!(
                        "{} requires an extended nuclear model",
                        self.method.name()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Shift value (eV) with separated uncertainty components (eV).
#[derive(Debug, Clone, Copy)]
pub struct ShiftResult {
    pub value_ev: f64,
    /// Spread against the alternate parameter set (zero when none given).
    pub unc_param_ev: f64,
    /// Radius-uncertainty propagation.
    pub unc_radius_ev: f64,
    /// Numerics (grid-refinement difference or quadrature tolerance).
    pub unc_numeric_ev: f64,
    pub method: ShiftMethod,
}

impl ShiftResult {
    /// Quadrature combination of the components.
    pub fn total_uncertainty_ev(&self) -> f64 {
        (self.unc_param_ev.powi(2) + self.unc_radius_ev.powi(2) + self.unc_numeric_ev.powi(2))
            .sqrt()
    }
}

/// All-order 1s shift for a point nucleus,
/// −Zα·λ·(2λ√C₁)^2γ·B₁/γ² · ₂F₁(2γ, 2γ; 1+2γ; −2λ√C₁), in eV.
pub fn shift_1s_closed_form(z: u32, mass: f64, params: &PolarizationParamSet) -> Result<f64> {
    let za = z as f64 * ALPHA;
    if za >= 1.0 {
        return Err(Error::Domain(format!("Z*alpha = {za} >= 1")));
    }
    let reg = params.first();
    let lambda = za * mass;
    let gamma = (1.0 - za * za).sqrt();
    let arg = 2.0 * lambda * reg.c.sqrt();
    let f21 = hyp2f1(2.0 * gamma, 2.0 * gamma, 1.0 + 2.0 * gamma, -arg)?;
    let gev = -za * lambda * arg.powf(2.0 * gamma) * reg.b / (gamma * gamma) * f21;
    Ok(gev * GEV_TO_EV)
}

/// Leading non-relativistic shift −4B₁C₁m³(Zα)⁴/n³ for s states, in eV.
pub fn shift_nonrel(label: &BoundStateLabel, params: &PolarizationParamSet) -> Result<f64> {
    if label.ell() != 0 {
        return Err(Error::Domain(format!(
            "shift_nonrel applies to s states, got {}",
            label.spectroscopic()
        )));
    }
    let reg = params.first();
    let za = label.z as f64 * ALPHA;
    let n3 = (label.n as f64).powi(3);
    Ok(-4.0 * reg.b * reg.c * label.mass.powi(3) * za.powi(4) / n3 * GEV_TO_EV)
}

/// Reduced mass of the muon-proton system, for the non-relativistic
/// recoil-corrected display value.
pub fn muon_proton_reduced_mass() -> f64 {
    M_MUON * M_PROTON / (M_MUON + M_PROTON)
}

/// Partial sum of the printed Zα expansion of the point-nucleus shift, in eV.
/// `max_power` is the highest (Zα)-power kept: 1s supports 4..6, 2s 4..5,
/// 2p₁/₂ and 2p₃/₂ 6..7.
pub fn shift_expansion(
    label: &BoundStateLabel,
    max_power: u32,
    params: &PolarizationParamSet,
) -> Result<f64> {
    let reg = params.first();
    let (b1, c1) = (reg.b, reg.c);
    let m = label.mass;
    let za = label.z as f64 * ALPHA;
    let state = (label.n, label.kappa);
    let gev = match state {
        (1, -1) => {
            if !(4..=6).contains(&max_power) {
                return Err(Error::Unsupported(format!(
                    "1s expansion has terms for powers 4..6, requested {max_power}"
                )));
            }
            let t4 = -4.0 * b1 * c1 * m.powi(3) * za.powi(4);
            let t5 = 32.0 / 3.0 * b1 * c1.powf(1.5) * m.powi(4) * za.powi(5);
            let t6 = -4.0
                * b1
                * c1
                * m.powi(3)
                * za.powi(6)
                * (1.0 + 6.0 * c1 * m * m - (2.0 * za * c1.sqrt() * m).ln());
            [t4, t4 + t5, t4 + t5 + t6][(max_power - 4) as usize]
        }
        (2, -1) => {
            if !(4..=5).contains(&max_power) {
                return Err(Error::Unsupported(format!(
                    "2s expansion has terms for powers 4..5, requested {max_power}"
                )));
            }
            let t4 = -0.5 * b1 * c1 * m.powi(3) * za.powi(4);
            let t5 = 4.0 / 3.0 * b1 * c1.powf(1.5) * m.powi(4) * za.powi(5);
            [t4, t4 + t5][(max_power - 4) as usize]
        }
        (2, 1) => {
            if !(6..=7).contains(&max_power) {
                return Err(Error::Unsupported(format!(
                    "2p1/2 expansion has terms for powers 6..7, requested {max_power}"
                )));
            }
            let t6 = -b1 * c1 * (3.0 + 4.0 * c1 * m * m) * m.powi(3) / 32.0 * za.powi(6);
            let t7 = b1 * c1.powf(1.5) * (5.0 + 24.0 * c1 * m * m) * m.powi(4) / 60.0 * za.powi(7);
            [t6, t6 + t7][(max_power - 6) as usize]
        }
        (2, -2) => {
            if !(6..=7).contains(&max_power) {
                return Err(Error::Unsupported(format!(
                    "2p3/2 expansion has terms for powers 6..7, requested {max_power}"
                )));
            }
            let t6 = -b1 * c1 * c1 * m.powi(5) / 8.0 * za.powi(6);
            let t7 = 0.4 * b1 * c1.powf(2.5) * m.powi(6) * za.powi(7);
            [t6, t6 + t7][(max_power - 6) as usize]
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no tabulated expansion for {}",
                label.spectroscopic()
            )))
        }
    };
    Ok(gev * GEV_TO_EV)
}

/// Expectation value of the first-region point potential with the analytic
/// Dirac-Coulomb wavefunction (general state), eV.
pub fn shift_rel_point_numeric(
    label: &BoundStateLabel,
    params: &PolarizationParamSet,
) -> Result<f64> {
    let wf = dirac_coulomb(label)?;
    let z = label.z;
    let a = params.first().c.sqrt();
    // potential support dies at ~60 sqrt(C1); wavefunction tail at 1/lambda
    let rmax = (80.0 * a).min(60.0 / wf.lambda());
    let params = params.clone();
    let integral = quadrature::adaptive(
        |r| {
            if r <= 0.0 {
                return 0.0;
            }
            uehling_point_approx(z, &params, r).unwrap_or(0.0) * wf.density(r) * r * r
        },
        0.0,
        rmax,
        1e-10,
        0.0,
    )?;
    Ok(integral * GEV_TO_EV)
}

fn fns_potential(request: &ShiftRequest, model: &NuclearModel) -> Result<RadialPotential> {
    match request.method {
        ShiftMethod::RelFnsApprox => {
            RadialPotential::closed_form(model.z(), &request.params, model)
        }
        ShiftMethod::RelFnsFull => RadialPotential::full_for_shifts(&PotentialSpec {
            species: LoopSpecies::HadronicParametrized,
            params: request.params.clone(),
            model: model.clone(),
            method: PotentialMethod::FullQuadrature,
        }),
        _ => unreachable!(),
    }
}

fn fns_central(
    request: &ShiftRequest,
    model: &NuclearModel,
    config: &SolverConfig,
) -> Result<f64> {
    let mut cfg = config.clone();
    cfg.target_states = vec![request.label];
    let spectrum = solve_dirac_fns(model, None, &cfg)?;
    let pot = fns_potential(request, model)?;
    Ok(spectrum.expectation_value(&request.label, &pot)? * GEV_TO_EV)
}

// rebuild the nuclear model at a displaced rms radius (fm)
fn model_at_rms(model: &NuclearModel, rms_fm: f64) -> Result<NuclearModel> {
    match model {
        NuclearModel::Point { .. } => Ok(model.clone()),
        NuclearModel::Sphere { z, .. } => NuclearModel::sphere_from_rms_fm(*z, rms_fm),
        NuclearModel::Fermi(f) => {
            let t_fm = nuclear::gev_inv_to_fm(f.a) * 4.0 * 3.0f64.ln();
            NuclearModel::fermi_from_rms_fm(f.z, rms_fm, t_fm)
        }
    }
}

fn model_rms_fm(model: &NuclearModel) -> Result<f64> {
    match model {
        NuclearModel::Point { .. } => Err(Error::Unsupported("point model has no radius".into())),
        NuclearModel::Sphere { radius, .. } => {
            Ok(nuclear::gev_inv_to_fm(nuclear::sphere_radius_to_rms(*radius)?))
        }
        NuclearModel::Fermi(_) => {
            let xmax = model.support_radius();
            let m2 = quadrature::adaptive(|r| r.powi(4) * model.density(r), 0.0, xmax, 1e-11, 0.0)?;
            let m0 = quadrature::adaptive(|r| r.powi(2) * model.density(r), 0.0, xmax, 1e-11, 0.0)?;
            Ok(nuclear::gev_inv_to_fm((m2 / m0).sqrt()))
        }
    }
}

/// Dispatch a [`ShiftRequest`] and assemble the uncertainty components.
pub fn shift_perturbative(request: &ShiftRequest) -> Result<ShiftResult> {
    request.validate()?;
    let central = shift_central(request)?;
    let mut unc_param = 0.0;
    if let Some(alt) = &request.alt_params {
        let mut alt_req = request.clone();
        alt_req.params = alt.clone();
        alt_req.alt_params = None;
        unc_param = (shift_central(&alt_req)? - central).abs();
    }
    let mut unc_radius = 0.0;
    let mut unc_numeric = central.abs() * 1e-9;
    let is_fns = matches!(
        request.method,
        ShiftMethod::RelFnsApprox | ShiftMethod::RelFnsFull
    );
    if is_fns {
        if let Some(sigma) = request.radius_unc_fm {
            if sigma > 0.0 {
                let rms = model_rms_fm(&request.model)?;
                let mut plus = request.clone();
                plus.model = model_at_rms(&request.model, rms + sigma)?;
                plus.alt_params = None;
                plus.radius_unc_fm = None;
                let mut minus = request.clone();
                minus.model = model_at_rms(&request.model, rms - sigma)?;
                minus.alt_params = None;
                minus.radius_unc_fm = None;
                unc_radius = 0.5 * (shift_central(&plus)? - shift_central(&minus)?).abs();
            }
        }
        // grid-refinement estimate
        let base_cfg = request.solver_config.clone().unwrap_or_default();
        let mut fine_cfg = base_cfg.clone();
        fine_cfg.intervals = (base_cfg.intervals as f64 * 1.35) as usize;
        let fine = fns_central(request, &request.model, &fine_cfg)?;
        unc_numeric = (fine - central).abs().max(central.abs() * 1e-10);
    }
    Ok(ShiftResult {
        value_ev: central,
        unc_param_ev: unc_param,
        unc_radius_ev: unc_radius,
        unc_numeric_ev: unc_numeric,
        method: request.method,
    })
}

/// Central value only (eV), without uncertainty recomputations.
pub fn shift_central(request: &ShiftRequest) -> Result<f64> {
    request.validate()?;
    match request.method {
        ShiftMethod::NonRelPoint => shift_nonrel(&request.label, &request.params),
        ShiftMethod::RelPointAnalytic => {
            if (request.label.n, request.label.kappa) != (1, -1) {
                return Err(Error::Unsupported(
                    "the all-order closed form covers the 1s state".into(),
                ));
            }
            shift_1s_closed_form(request.label.z, request.label.mass, &request.params)
        }
        ShiftMethod::RelPointNumeric => shift_rel_point_numeric(&request.label, &request.params),
        ShiftMethod::RelFnsApprox | ShiftMethod::RelFnsFull => {
            let cfg = request.solver_config.clone().unwrap_or_default();
            fns_central(request, &request.model, &cfg)
        }
    }
}

/// Ratio of the non-relativistic hadronic shift to the non-relativistic
/// muonic-loop VP shift. Both scale with |ψ(0)|², so the ratio is
/// 15π·B₁C₁·m_μ²/α, independent of Z and n at leading order.
pub fn muonic_vp_ratio(_z: u32, params: &PolarizationParamSet) -> f64 {
    let reg = params.first();
    15.0 * std::f64::consts::PI * reg.b * reg.c * M_MUON * M_MUON / ALPHA
}
