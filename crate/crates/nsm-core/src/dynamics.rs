//! State, parameters, and right-hand-side evaluation for an incompressible
//! two-fluid flow coupled to an electromagnetic field, with Rayleigh friction
//! between the species.
//!
//! Four interchangeable formulations are supported:
//! * **physical** — dimensional constants, pressure removed by projection;
//! * **normalized two-fluid** — every constant set to one except the friction
//!   coefficient, which keeps its value;
//! * **bulk current** — the same normalized dynamics rewritten in the bulk
//!   velocity `u = (v₋+v₊)/2` and current `j = (v₊−v₋)/2`;
//! * **truncated** — the physical system restricted to the closed frequency
//!   ball `|k| ≤ k_max` (a finite-dimensional ODE): state copies are cut off
//!   on entry and every product is cut off on exit, so the ball is invariant.
//!
//! Tangents are returned as values and never applied in place, which is what
//! multi-stage time integrators and tangent-level tests need.

use thiserror::Error;

use crate::field::{FieldError, SpectralField};
use crate::grid::Grid;
use crate::ops;

/// Largest divergence residual (relative to the coefficient amplitude) a
/// state may carry and still be accepted by the right-hand side.
pub const DIV_TOLERANCE: f64 = 1e-11;

#[derive(Debug, Error)]
pub enum DynamicsError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("state fields live on different grids")]
    MixedGrids,
    #[error(
        "state violates the divergence-free constraint: residual {residual:.3e} \
         exceeds {limit:.3e}"
    )]
    NotSolenoidal { residual: f64, limit: f64 },
    #[error("parameter {name} must be {requirement}, got {value}")]
    BadParam {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },
}

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// Dimensional constants of the two-fluid system.
///
/// The negative species carries charge −e and mass `m_minus`; the positive
/// species carries charge +Ze and mass `m_plus`. Both share the number
/// density `n` (quasineutral background n₊ = n, n₋ = Zn is folded into the
/// coefficients below).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Number density of the positive species.
    pub n: f64,
    /// Mass of the negative species.
    pub m_minus: f64,
    /// Mass of the positive species.
    pub m_plus: f64,
    /// Elementary charge (zero switches the electromagnetic coupling off).
    pub e: f64,
    /// Charge number of the positive species (an integer ≥ 1).
    pub z: u32,
    /// Vacuum dielectric constant.
    pub eps0: f64,
    /// Vacuum permeability.
    pub mu0: f64,
    /// Dynamic viscosity of the negative species.
    pub nu_minus: f64,
    /// Dynamic viscosity of the positive species.
    pub nu_plus: f64,
    /// Rayleigh friction coefficient between the species.
    pub alpha: f64,
}

impl PhysicalParams {
    /// Every constant one: the reference point for the normalized and
    /// bulk-current formulations.
    pub fn unit() -> Self {
        Self {
            n: 1.0,
            m_minus: 1.0,
            m_plus: 1.0,
            e: 1.0,
            z: 1,
            eps0: 1.0,
            mu0: 1.0,
            nu_minus: 1.0,
            nu_plus: 1.0,
            alpha: 1.0,
        }
    }

    /// Unit constants with a prescribed friction coefficient.
    pub fn normalized(alpha: f64) -> Self {
        Self { alpha, ..Self::unit() }
    }

    /// Validate signs: densities, masses and vacuum constants must be
    /// strictly positive; charge, viscosities and friction may vanish (the
    /// uncharged, inviscid and frictionless regimes are all meaningful).
    pub fn validate(&self) -> Result<(), DynamicsError> {
        let positive: [(&'static str, f64); 4] = [
            ("n", self.n),
            ("m_minus", self.m_minus),
            ("m_plus", self.m_plus),
            ("eps0", self.eps0),
        ];
        for (name, value) in positive {
            if !(value > 0.0) || !value.is_finite() {
                return Err(DynamicsError::BadParam {
                    name,
                    requirement: "strictly positive",
                    value,
                });
            }
        }
        if !(self.mu0 > 0.0) || !self.mu0.is_finite() {
            return Err(DynamicsError::BadParam {
                name: "mu0",
                requirement: "strictly positive",
                value: self.mu0,
            });
        }
        let nonnegative: [(&'static str, f64); 4] = [
            ("e", self.e),
            ("nu_minus", self.nu_minus),
            ("nu_plus", self.nu_plus),
            ("alpha", self.alpha),
        ];
        for (name, value) in nonnegative {
            if !(value >= 0.0) || !value.is_finite() {
                return Err(DynamicsError::BadParam {
                    name,
                    requirement: "finite and not negative",
                    value,
                });
            }
        }
        if self.z < 1 {
            return Err(DynamicsError::BadParam {
                name: "z",
                requirement: "an integer ≥ 1",
                value: f64::from(self.z),
            });
        }
        Ok(())
    }

    /// Kinematic diffusivity of the negative species, ν₋/(n m₋).
    pub fn mu_minus(&self) -> f64 {
        self.nu_minus / (self.n * self.m_minus)
    }

    /// Kinematic diffusivity of the positive species, ν₊/(n m₊).
    pub fn mu_plus(&self) -> f64 {
        self.nu_plus / (self.n * self.m_plus)
    }

    /// Lorentz coupling of the negative species, e/m₋.
    pub fn a_minus(&self) -> f64 {
        self.e / self.m_minus
    }

    /// Lorentz coupling of the positive species, eZ/m₊.
    pub fn a_plus(&self) -> f64 {
        self.e * f64::from(self.z) / self.m_plus
    }

    /// Friction rate on the negative species, α/(n m₋).
    pub fn b_minus(&self) -> f64 {
        self.alpha / (self.n * self.m_minus)
    }

    /// Friction rate on the positive species, α/(n m₊).
    pub fn b_plus(&self) -> f64 {
        self.alpha / (self.n * self.m_plus)
    }

    /// Square of the electromagnetic wave speed, 1/(ε₀μ₀).
    pub fn wave_speed_sqr(&self) -> f64 {
        1.0 / (self.eps0 * self.mu0)
    }

    /// Coefficient of the current source in the electric-field equation,
    /// n e/ε₀.
    pub fn current_source(&self) -> f64 {
        self.n * self.e / self.eps0
    }
}

// ---------------------------------------------------------------------------
// Formulation
// ---------------------------------------------------------------------------

/// Which form of the dynamics the right-hand side evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Formulation {
    /// Full dimensional system.
    Physical,
    /// Unit constants except friction; velocity slots hold v₋ and v₊.
    NormalizedTwoFluid,
    /// Unit constants except friction; velocity slots hold u and j.
    BulkCurrent,
    /// Physical system restricted to the frequency ball |k| ≤ k_max.
    Truncated { k_max: f64 },
}

impl Formulation {
    pub fn validate(&self) -> Result<(), DynamicsError> {
        if let Formulation::Truncated { k_max } = self {
            if !(*k_max > 0.0) || !k_max.is_finite() {
                return Err(DynamicsError::BadParam {
                    name: "k_max",
                    requirement: "strictly positive",
                    value: *k_max,
                });
            }
        }
        Ok(())
    }

    /// True when the velocity slots carry bulk variables (u, j) rather than
    /// the species velocities.
    pub fn is_bulk(&self) -> bool {
        matches!(self, Formulation::BulkCurrent)
    }
}

/// Diffusivities acting on the two velocity slots under a formulation: the
/// derived μ± for the dimensional forms, one for the normalized forms.
pub fn diffusivities(params: &PhysicalParams, form: &Formulation) -> (f64, f64) {
    match form {
        Formulation::Physical | Formulation::Truncated { .. } => {
            (params.mu_minus(), params.mu_plus())
        }
        Formulation::NormalizedTwoFluid | Formulation::BulkCurrent => (1.0, 1.0),
    }
}

/// Weights of the conserved energy functional and of the dissipation
/// integrands under a formulation.
///
/// The energy is `v_minus·‖slot₁‖² + v_plus·‖slot₂‖² + electric·‖E‖² +
/// magnetic·‖B‖²` and decays at rate `diss_minus·‖∇slot₁‖² +
/// diss_plus·‖∇slot₂‖² + friction·F`, where F = ‖v₊−v₋‖² for the two-fluid
/// forms and F = ‖j‖² for the bulk form (whose friction weight is 2α).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyWeights {
    pub v_minus: f64,
    pub v_plus: f64,
    pub electric: f64,
    pub magnetic: f64,
    pub diss_minus: f64,
    pub diss_plus: f64,
    pub friction: f64,
}

pub fn energy_weights(params: &PhysicalParams, form: &Formulation) -> EnergyWeights {
    match form {
        Formulation::Physical | Formulation::Truncated { .. } => EnergyWeights {
            v_minus: params.n * params.m_minus / (2.0 * params.eps0),
            v_plus: params.n * params.m_plus / (2.0 * params.eps0),
            electric: 0.5,
            magnetic: 1.0 / (2.0 * params.eps0 * params.mu0),
            diss_minus: params.nu_minus / params.eps0,
            diss_plus: params.nu_plus / params.eps0,
            friction: params.alpha / params.eps0,
        },
        Formulation::NormalizedTwoFluid => EnergyWeights {
            v_minus: 0.5,
            v_plus: 0.5,
            electric: 0.5,
            magnetic: 0.5,
            diss_minus: 1.0,
            diss_plus: 1.0,
            friction: params.alpha,
        },
        Formulation::BulkCurrent => EnergyWeights {
            v_minus: 0.5,
            v_plus: 0.5,
            electric: 0.25,
            magnetic: 0.25,
            diss_minus: 1.0,
            diss_plus: 1.0,
            friction: 2.0 * params.alpha,
        },
    }
}

// ---------------------------------------------------------------------------
// State and tangent
// ---------------------------------------------------------------------------

/// Instantaneous state: two velocity slots plus the electromagnetic pair.
///
/// In the bulk-current formulation `v_minus` holds the bulk velocity u and
/// `v_plus` holds the current j; everywhere else the slots hold the species
/// velocities. All four fields are divergence-free and share one grid.
#[derive(Debug, Clone)]
pub struct NsmState {
    pub t: f64,
    pub v_minus: SpectralField,
    pub v_plus: SpectralField,
    pub e_field: SpectralField,
    pub b_field: SpectralField,
}

/// Time derivative of a state (no clock of its own).
#[derive(Debug, Clone)]
pub struct NsmTangent {
    pub v_minus: SpectralField,
    pub v_plus: SpectralField,
    pub e_field: SpectralField,
    pub b_field: SpectralField,
}

impl NsmState {
    pub fn zeros(grid: Grid) -> Self {
        Self {
            t: 0.0,
            v_minus: SpectralField::zeros(grid),
            v_plus: SpectralField::zeros(grid),
            e_field: SpectralField::zeros(grid),
            b_field: SpectralField::zeros(grid),
        }
    }

    /// The common grid, or an error if the fields disagree.
    pub fn grid(&self) -> Result<Grid, DynamicsError> {
        let g = self.v_minus.grid();
        if self.v_plus.grid() != g || self.e_field.grid() != g || self.b_field.grid() != g {
            return Err(DynamicsError::MixedGrids);
        }
        Ok(g)
    }

    pub fn fields(&self) -> [&SpectralField; 4] {
        [&self.v_minus, &self.v_plus, &self.e_field, &self.b_field]
    }

    pub fn fields_mut(&mut self) -> [&mut SpectralField; 4] {
        [
            &mut self.v_minus,
            &mut self.v_plus,
            &mut self.e_field,
            &mut self.b_field,
        ]
    }

    /// Largest coefficient magnitude across all four fields.
    pub fn max_coeff(&self) -> f64 {
        self.fields()
            .iter()
            .map(|f| f.max_coeff())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.fields().iter().all(|f| f.is_finite())
    }

    /// Largest divergence residual across all four fields.
    pub fn div_residual(&self) -> f64 {
        self.fields()
            .iter()
            .map(|f| ops::div_residual(f))
            .fold(0.0, f64::max)
    }

    /// Check shared grid and the divergence-free constraint.
    pub fn validate(&self) -> Result<(), DynamicsError> {
        self.grid()?;
        let amplitude = self.max_coeff();
        let residual = self.div_residual();
        let limit = DIV_TOLERANCE * amplitude;
        if residual > limit && amplitude > 0.0 {
            return Err(DynamicsError::NotSolenoidal { residual, limit });
        }
        Ok(())
    }

    /// Project every field onto its divergence-free part (a per-step
    /// safeguard against roundoff drift; a no-op up to roundoff on valid
    /// states).
    pub fn project(&mut self) {
        for f in self.fields_mut() {
            ops::leray_in_place(f);
        }
    }

    /// self += a · tangent (the clock is left alone).
    pub fn axpy_tangent(&mut self, a: f64, tan: &NsmTangent) -> Result<(), DynamicsError> {
        self.v_minus.axpy(a, &tan.v_minus)?;
        self.v_plus.axpy(a, &tan.v_plus)?;
        self.e_field.axpy(a, &tan.e_field)?;
        self.b_field.axpy(a, &tan.b_field)?;
        Ok(())
    }

    /// Multiply the two velocity slots by per-mode factor tables (the
    /// integrating-factor update; the electromagnetic pair is untouched
    /// because it carries no diffusion).
    pub fn mul_velocity_factors(&mut self, fm: &[f64], fp: &[f64]) {
        self.v_minus.mul_mode_factors(fm);
        self.v_plus.mul_mode_factors(fp);
    }

    /// Root-sum-square of the four per-field L² distances.
    pub fn l2_distance(&self, other: &Self) -> Result<f64, DynamicsError> {
        let mut sum = 0.0;
        for (a, b) in self.fields().into_iter().zip(other.fields()) {
            sum += a.l2_distance(b)?.powi(2);
        }
        Ok(sum.sqrt())
    }

    /// Root-sum-square of the four field norms.
    pub fn l2_norm(&self) -> f64 {
        self.fields()
            .iter()
            .map(|f| f.l2_norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

impl NsmTangent {
    pub fn zeros(grid: Grid) -> Self {
        Self {
            v_minus: SpectralField::zeros(grid),
            v_plus: SpectralField::zeros(grid),
            e_field: SpectralField::zeros(grid),
            b_field: SpectralField::zeros(grid),
        }
    }

    pub fn fields(&self) -> [&SpectralField; 4] {
        [&self.v_minus, &self.v_plus, &self.e_field, &self.b_field]
    }

    pub fn fields_mut(&mut self) -> [&mut SpectralField; 4] {
        [
            &mut self.v_minus,
            &mut self.v_plus,
            &mut self.e_field,
            &mut self.b_field,
        ]
    }

    pub fn scale(&mut self, a: f64) {
        for f in self.fields_mut() {
            f.scale(a);
        }
    }

    /// self += a · other.
    pub fn axpy(&mut self, a: f64, other: &NsmTangent) -> Result<(), DynamicsError> {
        self.v_minus.axpy(a, &other.v_minus)?;
        self.v_plus.axpy(a, &other.v_plus)?;
        self.e_field.axpy(a, &other.e_field)?;
        self.b_field.axpy(a, &other.b_field)?;
        Ok(())
    }

    pub fn mul_velocity_factors(&mut self, fm: &[f64], fp: &[f64]) {
        self.v_minus.mul_mode_factors(fm);
        self.v_plus.mul_mode_factors(fp);
    }

    pub fn max_coeff(&self) -> f64 {
        self.fields()
            .iter()
            .map(|f| f.max_coeff())
            .fold(0.0, f64::max)
    }
}

// ---------------------------------------------------------------------------
// Change of variables
// ---------------------------------------------------------------------------

/// Species velocities → bulk variables: u = (v₋+v₊)/2 into the first slot,
/// j = (v₊−v₋)/2 into the second; the electromagnetic pair is shared.
pub fn to_bulk_current(state: &NsmState) -> NsmState {
    let mut u = state.v_minus.clone();
    u.axpy(1.0, &state.v_plus).expect("same grid by construction");
    u.scale(0.5);
    let mut j = state.v_plus.clone();
    j.axpy(-1.0, &state.v_minus).expect("same grid by construction");
    j.scale(0.5);
    NsmState {
        t: state.t,
        v_minus: u,
        v_plus: j,
        e_field: state.e_field.clone(),
        b_field: state.b_field.clone(),
    }
}

/// Bulk variables → species velocities: v₋ = u − j, v₊ = u + j.
pub fn from_bulk_current(state: &NsmState) -> NsmState {
    let mut vm = state.v_minus.clone();
    vm.axpy(-1.0, &state.v_plus).expect("same grid by construction");
    let mut vp = state.v_minus.clone();
    vp.axpy(1.0, &state.v_plus).expect("same grid by construction");
    NsmState {
        t: state.t,
        v_minus: vm,
        v_plus: vp,
        e_field: state.e_field.clone(),
        b_field: state.b_field.clone(),
    }
}

// ---------------------------------------------------------------------------
// Right-hand sides
// ---------------------------------------------------------------------------

/// Time derivative of `state` under the requested formulation.
///
/// The normalized and bulk-current formulations read only `params.alpha`;
/// the truncated formulation uses the full parameter set.
pub fn rhs(
    state: &NsmState,
    params: &PhysicalParams,
    form: &Formulation,
) -> Result<NsmTangent, DynamicsError> {
    rhs_impl(state, params, form, true)
}

/// Time derivative without the diffusion on the velocity slots — the part an
/// integrating-factor scheme must integrate explicitly, the exponential
/// handling `μ∓Δ` exactly. `rhs = rhs_explicit_part + diffusion`.
pub fn rhs_explicit_part(
    state: &NsmState,
    params: &PhysicalParams,
    form: &Formulation,
) -> Result<NsmTangent, DynamicsError> {
    rhs_impl(state, params, form, false)
}

fn rhs_impl(
    state: &NsmState,
    params: &PhysicalParams,
    form: &Formulation,
    with_diffusion: bool,
) -> Result<NsmTangent, DynamicsError> {
    state.validate()?;
    match form {
        Formulation::Physical => rhs_physical(state, params, with_diffusion),
        Formulation::NormalizedTwoFluid => rhs_physical(
            state,
            &PhysicalParams::normalized(params.alpha),
            with_diffusion,
        ),
        Formulation::BulkCurrent => rhs_bulk_impl(state, params.alpha, with_diffusion),
        Formulation::Truncated { k_max } => {
            let mut cut = state.clone();
            for f in cut.fields_mut() {
                ops::cutoff_in_place(f, *k_max);
            }
            let mut tan = rhs_physical(&cut, params, with_diffusion)?;
            for f in tan.fields_mut() {
                ops::cutoff_in_place(f, *k_max);
            }
            Ok(tan)
        }
    }
}

/// Dimensional two-fluid tangent:
///
/// dv∓ = μ∓Δv∓ − P[(v∓·∇)v∓ ± a∓(E + v∓×B)] ± b∓(v₊ − v₋)
/// dE  = (1/ε₀μ₀)∇×B − (ne/ε₀)(Z v₊ − v₋)
/// dB  = −∇×E
///
/// The projection is applied to the whole momentum forcing in one pass (the
/// electric and magnetic couplings are not individually gradient-free); the
/// friction exchange is a difference of divergence-free fields and needs
/// none.
fn rhs_physical(
    state: &NsmState,
    params: &PhysicalParams,
    with_diffusion: bool,
) -> Result<NsmTangent, DynamicsError> {
    state.grid()?;
    let vm_phys = ops::to_phys(&state.v_minus);
    let vp_phys = ops::to_phys(&state.v_plus);
    let b_phys = ops::to_phys(&state.b_field);

    // (v·∇)v for each species; the symmetric product returns twice the value.
    let mut adv_m = ops::self_advection_phys(&vm_phys);
    adv_m.scale(0.5);
    let mut adv_p = ops::self_advection_phys(&vp_phys);
    adv_p.scale(0.5);
    let cross_m = ops::cross_phys(&vm_phys, &b_phys);
    let cross_p = ops::cross_phys(&vp_phys, &b_phys);

    // Negative species: −adv − a₋(E + v₋×B), projected, then diffusion and
    // friction.
    let mut dvm = adv_m;
    dvm.scale(-1.0);
    dvm.axpy(-params.a_minus(), &state.e_field)?;
    dvm.axpy(-params.a_minus(), &cross_m)?;
    ops::leray_in_place(&mut dvm);
    if with_diffusion {
        dvm.axpy(params.mu_minus(), &ops::laplacian(&state.v_minus))?;
    }
    dvm.axpy(params.b_minus(), &state.v_plus)?;
    dvm.axpy(-params.b_minus(), &state.v_minus)?;

    // Positive species: −adv + a₊(E + v₊×B), projected, diffusion, friction.
    let mut dvp = adv_p;
    dvp.scale(-1.0);
    dvp.axpy(params.a_plus(), &state.e_field)?;
    dvp.axpy(params.a_plus(), &cross_p)?;
    ops::leray_in_place(&mut dvp);
    if with_diffusion {
        dvp.axpy(params.mu_plus(), &ops::laplacian(&state.v_plus))?;
    }
    dvp.axpy(-params.b_plus(), &state.v_plus)?;
    dvp.axpy(params.b_plus(), &state.v_minus)?;

    // Electric field: wave term minus the net current.
    let mut de = ops::curl(&state.b_field);
    de.scale(params.wave_speed_sqr());
    let src = params.current_source();
    de.axpy(-src * f64::from(params.z), &state.v_plus)?;
    de.axpy(src, &state.v_minus)?;

    // Magnetic field: pure induction.
    let mut db = ops::curl(&state.e_field);
    db.scale(-1.0);

    Ok(NsmTangent {
        v_minus: dvm,
        v_plus: dvp,
        e_field: de,
        b_field: db,
    })
}

/// Bulk-variable tangent at unit constants (friction coefficient `alpha`):
///
/// du = Δu − P[u·∇u + j·∇j − j×B]
/// dj = Δj − P[u·∇j + j·∇u − E − u×B] − 2αj
/// dE = ∇×B − 2j
/// dB = −∇×E
///
/// The state's first velocity slot is read as u, the second as j.
pub fn rhs_bulk_current(state: &NsmState, alpha: f64) -> Result<NsmTangent, DynamicsError> {
    rhs_bulk_impl(state, alpha, true)
}

fn rhs_bulk_impl(
    state: &NsmState,
    alpha: f64,
    with_diffusion: bool,
) -> Result<NsmTangent, DynamicsError> {
    state.grid()?;
    let u = &state.v_minus;
    let j = &state.v_plus;
    let u_phys = ops::to_phys(u);
    let j_phys = ops::to_phys(j);
    let b_phys = ops::to_phys(&state.b_field);

    let mut adv_uu = ops::self_advection_phys(&u_phys);
    adv_uu.scale(0.5);
    let mut adv_jj = ops::self_advection_phys(&j_phys);
    adv_jj.scale(0.5);
    // u·∇j + j·∇u arrives in one symmetric pass.
    let adv_mixed = ops::sym_advection_phys(&u_phys, &j_phys);
    let cross_jb = ops::cross_phys(&j_phys, &b_phys);
    let cross_ub = ops::cross_phys(&u_phys, &b_phys);

    let mut du = adv_uu;
    du.scale(-1.0);
    du.axpy(-1.0, &adv_jj)?;
    du.axpy(1.0, &cross_jb)?;
    ops::leray_in_place(&mut du);
    if with_diffusion {
        du.axpy(1.0, &ops::laplacian(u))?;
    }

    let mut dj = adv_mixed;
    dj.scale(-1.0);
    dj.axpy(1.0, &state.e_field)?;
    dj.axpy(1.0, &cross_ub)?;
    ops::leray_in_place(&mut dj);
    if with_diffusion {
        dj.axpy(1.0, &ops::laplacian(j))?;
    }
    dj.axpy(-2.0 * alpha, j)?;

    let mut de = ops::curl(&state.b_field);
    de.axpy(-2.0, j)?;

    let mut db = ops::curl(&state.e_field);
    db.scale(-1.0);

    Ok(NsmTangent {
        v_minus: du,
        v_plus: dj,
        e_field: de,
        b_field: db,
    })
}
