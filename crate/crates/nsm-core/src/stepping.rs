//! Fixed-step time advancement of the semi-discrete system.
//!
//! The workhorse is classical four-stage Runge–Kutta with an integrating
//! factor `e^{−μ∓|k|²τ}` absorbing the diffusion on the velocity slots: the
//! stiffest symbol at moderate resolutions is integrated exactly, while the
//! wave couplings and the friction exchange stay explicit (the wave part is
//! bounded by the grid CFL condition this module enforces, and keeping
//! friction explicit makes the step budget independent of the friction
//! coefficient in the O(1) regime). A plain RK4 variant without the factor
//! exists for convergence cross-checks.
//!
//! The step size is fixed for the whole run — audits and convergence studies
//! must be bit-reproducible, so no adaptivity.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::dynamics::{
    self, diffusivities, DynamicsError, Formulation, NsmState, PhysicalParams,
};
use crate::grid::Grid;

#[derive(Debug, Error)]
pub enum StepError {
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error("stepper config: {name} must be {requirement}, got {value}")]
    BadConfig {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },
    #[error("state grid does not match the stepper's grid")]
    GridMismatch,
    #[error(
        "advective stability bound violated at t = {t:.6}: dt = {dt:.3e} exceeds \
         cfl_safety·Δx/max|v| = {limit:.3e}"
    )]
    AdvectiveCfl { t: f64, dt: f64, limit: f64 },
    #[error(
        "wave stability bound violated: dt = {dt:.3e} exceeds \
         cfl_safety·Δx·√(ε₀μ₀) = {limit:.3e}"
    )]
    WaveCfl { dt: f64, limit: f64 },
    #[error("non-finite values detected at t = {t:.6}: the run has blown up")]
    Blowup { t: f64 },
}

/// Time discretization of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scheme {
    /// RK4 with the diffusion integrated exactly per mode.
    Rk4IntegratingFactor,
    /// Classical RK4, everything explicit.
    Rk4Plain,
}

impl Scheme {
    pub fn name(&self) -> &'static str {
        match self {
            Scheme::Rk4IntegratingFactor => "rk4-integrating-factor",
            Scheme::Rk4Plain => "rk4-plain",
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rk4-integrating-factor" => Ok(Scheme::Rk4IntegratingFactor),
            "rk4-plain" => Ok(Scheme::Rk4Plain),
            other => Err(format!(
                "unknown scheme '{other}' (expected rk4-integrating-factor or rk4-plain)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct StepperConfig {
    pub dt: f64,
    pub scheme: Scheme,
    pub t_end: f64,
    /// Safety fraction of both stability bounds, in (0, 1].
    pub cfl_safety: f64,
}

impl StepperConfig {
    pub fn validate(&self) -> Result<(), StepError> {
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(StepError::BadConfig {
                name: "dt",
                requirement: "strictly positive",
                value: self.dt,
            });
        }
        if !(self.t_end >= 0.0) || !self.t_end.is_finite() {
            return Err(StepError::BadConfig {
                name: "t_end",
                requirement: "finite and not negative",
                value: self.t_end,
            });
        }
        if !(self.cfl_safety > 0.0 && self.cfl_safety <= 1.0) {
            return Err(StepError::BadConfig {
                name: "cfl_safety",
                requirement: "in (0, 1]",
                value: self.cfl_safety,
            });
        }
        Ok(())
    }

    /// Number of fixed steps covering `[0, t_end]`; `t_end` is interpreted as
    /// the nearest multiple of `dt`.
    pub fn step_count(&self) -> u64 {
        (self.t_end / self.dt).round() as u64
    }
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Termination {
    TEndReached,
    Blowup { t: f64 },
    UserStop,
}

/// What a completed (or interrupted) run hands back.
#[derive(Debug)]
pub struct RunSummary {
    /// Final state — on blowup, the last finite state before detection.
    pub final_state: NsmState,
    /// Accepted steps.
    pub steps: u64,
    pub termination: Termination,
    pub wall: Duration,
}

/// Per-(μ, dt) integrating-factor tables: `e^{−μ|k|²·dt/2}` and the full-step
/// variant for both velocity slots.
#[derive(Debug)]
struct IfTables {
    half_minus: Vec<f64>,
    half_plus: Vec<f64>,
    full_minus: Vec<f64>,
    full_plus: Vec<f64>,
}

/// Owns the time loop for one trajectory: parameters, formulation, precomputed
/// integrating factors, and the stability bounds.
#[derive(Debug)]
pub struct Stepper {
    grid: Grid,
    params: PhysicalParams,
    form: Formulation,
    cfg: StepperConfig,
    tables: Option<IfTables>,
    /// cfl_safety·Δx — the advective bound is dt·max|v| ≤ this.
    advective_budget: f64,
    /// cfl_safety·Δx·√(ε₀μ₀) — constant per run.
    wave_limit: f64,
}

impl Stepper {
    pub fn new(
        grid: Grid,
        params: PhysicalParams,
        form: Formulation,
        cfg: StepperConfig,
    ) -> Result<Self, StepError> {
        params.validate()?;
        form.validate()?;
        cfg.validate()?;
        let eps_mu = match form {
            Formulation::Physical | Formulation::Truncated { .. } => params.eps0 * params.mu0,
            Formulation::NormalizedTwoFluid | Formulation::BulkCurrent => 1.0,
        };
        let wave_limit = cfg.cfl_safety * grid.spacing() * eps_mu.sqrt();
        if cfg.dt > wave_limit {
            return Err(StepError::WaveCfl {
                dt: cfg.dt,
                limit: wave_limit,
            });
        }
        let tables = match cfg.scheme {
            Scheme::Rk4Plain => None,
            Scheme::Rk4IntegratingFactor => {
                let (mu_m, mu_p) = diffusivities(&params, &form);
                let modes = grid.modes();
                let mut t = IfTables {
                    half_minus: vec![0.0; modes],
                    half_plus: vec![0.0; modes],
                    full_minus: vec![0.0; modes],
                    full_plus: vec![0.0; modes],
                };
                for m in 0..modes {
                    let ksq = grid.k_squared(m);
                    t.half_minus[m] = (-mu_m * ksq * cfg.dt / 2.0).exp();
                    t.half_plus[m] = (-mu_p * ksq * cfg.dt / 2.0).exp();
                    t.full_minus[m] = (-mu_m * ksq * cfg.dt).exp();
                    t.full_plus[m] = (-mu_p * ksq * cfg.dt).exp();
                }
                Some(t)
            }
        };
        Ok(Self {
            grid,
            params,
            form,
            cfg,
            tables,
            advective_budget: cfg.cfl_safety * grid.spacing(),
            wave_limit,
        })
    }

    pub fn config(&self) -> &StepperConfig {
        &self.cfg
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    /// Both stability bounds against the current state; the error names the
    /// binding constraint.
    pub fn check_cfl(&self, state: &NsmState) -> Result<(), StepError> {
        if self.cfg.dt > self.wave_limit {
            return Err(StepError::WaveCfl {
                dt: self.cfg.dt,
                limit: self.wave_limit,
            });
        }
        let vmax = state
            .v_minus
            .max_speed()
            .max(state.v_plus.max_speed());
        if self.cfg.dt * vmax > self.advective_budget {
            return Err(StepError::AdvectiveCfl {
                t: state.t,
                dt: self.cfg.dt,
                limit: self.advective_budget / vmax,
            });
        }
        Ok(())
    }

    fn half_factors(&self, state: &mut NsmState) {
        if let Some(t) = &self.tables {
            state.mul_velocity_factors(&t.half_minus, &t.half_plus);
        }
    }

    fn full_factors(&self, state: &mut NsmState) {
        if let Some(t) = &self.tables {
            state.mul_velocity_factors(&t.full_minus, &t.full_plus);
        }
    }

    /// The tangent a stage integrates explicitly: everything when no
    /// integrating factor is active, the diffusion-free part when the
    /// exponential handles `μ∓Δ`.
    fn stage_rhs(&self, state: &NsmState) -> Result<dynamics::NsmTangent, StepError> {
        let tan = if self.tables.is_some() {
            dynamics::rhs_explicit_part(state, &self.params, &self.form)?
        } else {
            dynamics::rhs(state, &self.params, &self.form)?
        };
        Ok(tan)
    }

    /// One RK4 stage update without safeguards: no CFL check, no
    /// re-projection, no blowup detection. Exposed so tests can measure how
    /// small the safeguards' corrections are.
    pub fn step_raw(&self, state: &NsmState) -> Result<NsmState, StepError> {
        if state.grid()? != self.grid {
            return Err(StepError::GridMismatch);
        }
        let dt = self.cfg.dt;
        let k1 = self.stage_rhs(state)?;

        // Stage 2 input: e^{L dt/2}(u + dt/2·k1).
        let mut b = state.clone();
        b.axpy_tangent(dt / 2.0, &k1)?;
        self.half_factors(&mut b);
        b.t = state.t + dt / 2.0;
        let k2 = self.stage_rhs(&b)?;

        // Stage 3 input: e^{L dt/2}u + dt/2·k2.
        let mut c = state.clone();
        self.half_factors(&mut c);
        c.axpy_tangent(dt / 2.0, &k2)?;
        c.t = state.t + dt / 2.0;
        let k3 = self.stage_rhs(&c)?;

        // Stage 4 input: e^{L dt}u + dt·e^{L dt/2}k3.
        let mut k3_shift = k3.clone();
        if let Some(t) = &self.tables {
            k3_shift.mul_velocity_factors(&t.half_minus, &t.half_plus);
        }
        let mut d = state.clone();
        self.full_factors(&mut d);
        d.axpy_tangent(dt, &k3_shift)?;
        d.t = state.t + dt;
        let k4 = self.stage_rhs(&d)?;

        // u⁺ = e^{L dt}u + dt/6·(e^{L dt}k1 + 2e^{L dt/2}(k2+k3) + k4).
        let mut acc = k1;
        if let Some(t) = &self.tables {
            acc.mul_velocity_factors(&t.full_minus, &t.full_plus);
        }
        let mut mid = k2;
        mid.axpy(1.0, &k3)?;
        if let Some(t) = &self.tables {
            mid.mul_velocity_factors(&t.half_minus, &t.half_plus);
        }
        acc.axpy(2.0, &mid)?;
        acc.axpy(1.0, &k4)?;

        let mut next = state.clone();
        self.full_factors(&mut next);
        next.axpy_tangent(dt / 6.0, &acc)?;
        next.t = state.t + dt;
        Ok(next)
    }

    /// One guarded step: stability bounds checked on entry, the result
    /// re-projected onto divergence-free fields, non-finite values reported
    /// as blowup with the time stamp.
    pub fn step(&self, state: &NsmState) -> Result<NsmState, StepError> {
        self.check_cfl(state)?;
        let mut next = self.step_raw(state)?;
        next.project();
        if !next.is_finite() {
            return Err(StepError::Blowup { t: next.t });
        }
        Ok(next)
    }

    /// Advance from `initial` to `t_end`. The observer hears about every
    /// accepted step (`after_step`) and is sampled at every `cadence`-th step
    /// index, including index 0 — the initial state; a sample may break to
    /// request an early stop. Blowup is a *termination*, not an error; CFL
    /// and configuration problems are errors.
    pub fn run(
        &self,
        initial: NsmState,
        cadence: u64,
        observer: &mut impl Observer,
    ) -> Result<RunSummary, StepError> {
        let started = Instant::now();
        let cadence = cadence.max(1);
        let n = self.cfg.step_count();
        let t0 = initial.t;
        let mut state = initial;
        for i in 0..=n {
            if i % cadence == 0 {
                if observer.sample(i, &state).is_break() {
                    return Ok(RunSummary {
                        final_state: state,
                        steps: i,
                        termination: Termination::UserStop,
                        wall: started.elapsed(),
                    });
                }
            }
            if i == n {
                break;
            }
            let mut next = match self.step(&state) {
                Ok(next) => next,
                Err(StepError::Blowup { t }) => {
                    return Ok(RunSummary {
                        final_state: state,
                        steps: i,
                        termination: Termination::Blowup { t },
                        wall: started.elapsed(),
                    });
                }
                Err(e) => return Err(e),
            };
            // Pin the clock to an exact multiple of dt: no accumulation drift.
            next.t = t0 + (i + 1) as f64 * self.cfg.dt;
            observer.after_step(&next);
            state = next;
        }
        Ok(RunSummary {
            final_state: state,
            steps: n,
            termination: Termination::TEndReached,
            wall: started.elapsed(),
        })
    }
}

/// Read-only witness of a run: collectors implement this to update audits
/// after every step and to emit output rows at the sampling cadence.
pub trait Observer {
    /// Called after every accepted step with the fresh state.
    fn after_step(&mut self, _state: &NsmState) {}

    /// Called at sampling indices (0, cadence, 2·cadence, …). Break to stop
    /// the run early.
    fn sample(&mut self, _index: u64, _state: &NsmState) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
}

/// Observer that ignores everything.
pub struct NoObserver;

impl Observer for NoObserver {}

/// Single-step convenience wrapper that builds a throwaway stepper.
pub fn step(
    state: &NsmState,
    params: &PhysicalParams,
    form: &Formulation,
    cfg: &StepperConfig,
) -> Result<NsmState, StepError> {
    Stepper::new(state.grid()?, *params, *form, *cfg)?.step(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::SpectralField;
    use crate::synth;

    fn heat_params(mu: f64, alpha: f64) -> PhysicalParams {
        PhysicalParams {
            e: 0.0,
            nu_minus: mu,
            nu_plus: mu,
            alpha,
            ..PhysicalParams::unit()
        }
    }

    fn cfg(dt: f64, t_end: f64, scheme: Scheme) -> StepperConfig {
        StepperConfig {
            dt,
            scheme,
            t_end,
            cfl_safety: 0.9,
        }
    }

    fn run_plain(stepper: &Stepper, initial: NsmState) -> RunSummary {
        stepper.run(initial, u64::MAX, &mut NoObserver).unwrap()
    }

    /// Records sample indices and optionally breaks at one of them.
    struct SampleLog {
        indices: Vec<u64>,
        break_at: Option<u64>,
    }

    impl SampleLog {
        fn new(break_at: Option<u64>) -> Self {
            Self {
                indices: Vec::new(),
                break_at,
            }
        }
    }

    impl Observer for SampleLog {
        fn sample(&mut self, i: u64, _: &NsmState) -> ControlFlow<()> {
            self.indices.push(i);
            if self.break_at.is_some_and(|b| i >= b) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        }
    }

    #[test]
    fn zero_state_stays_zero() {
        let grid = Grid::standard(2, 16).unwrap();
        let stepper = Stepper::new(
            grid,
            PhysicalParams::unit(),
            Formulation::Physical,
            cfg(1e-2, 0.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        let next = stepper.step(&NsmState::zeros(grid)).unwrap();
        assert_eq!(next.max_coeff(), 0.0);
        assert_eq!(next.t, 1e-2);
    }

    #[test]
    fn integrating_factor_is_exact_on_pure_diffusion() {
        // Shear mode, no advection, no friction, no coupling: after t = 1
        // the field is e^{−1}·initial to roundoff.
        let grid = Grid::standard(2, 16).unwrap();
        let v = synth::shear_mode(grid, 1.0);
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = v.clone();
        initial.v_plus = v.clone();
        let stepper = Stepper::new(
            grid,
            heat_params(1.0, 0.0),
            Formulation::Physical,
            cfg(1e-3, 1.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        let summary = run_plain(&stepper, initial);
        assert_eq!(summary.steps, 1000);
        assert_eq!(summary.termination, Termination::TEndReached);
        let mut expected = v;
        expected.scale((-1.0f64).exp());
        let err = summary.final_state.v_minus.l2_distance(&expected).unwrap();
        assert!(err < 1e-10, "decay error {err:.3e}");
    }

    #[test]
    fn plain_scheme_carries_dt4_error_where_factor_is_exact() {
        let grid = Grid::standard(2, 16).unwrap();
        let v = synth::shear_mode(grid, 1.0);
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = v.clone();
        initial.v_plus = v.clone();
        let mut expected = v;
        expected.scale((-0.5f64).exp());

        let mut errs = [0.0f64; 2];
        for (slot, scheme) in [Scheme::Rk4Plain, Scheme::Rk4IntegratingFactor]
            .into_iter()
            .enumerate()
        {
            let stepper = Stepper::new(
                grid,
                heat_params(1.0, 0.0),
                Formulation::Physical,
                cfg(0.05, 0.5, scheme),
            )
            .unwrap();
            let summary = run_plain(&stepper, initial.clone());
            errs[slot] = summary.final_state.v_minus.l2_distance(&expected).unwrap();
        }
        assert!(errs[0] > 1e-9, "plain RK4 error unexpectedly tiny: {:.3e}", errs[0]);
        assert!(
            errs[1] < errs[0] / 100.0,
            "integrating factor should beat plain RK4: {:.3e} vs {:.3e}",
            errs[1],
            errs[0]
        );
    }

    #[test]
    fn friction_pair_decays_at_combined_rate() {
        // v₊ = −v₋: the exchange term acts as 2α damping on each species, so
        // the |k| = 1 shear decays like e^{−(2α+μ)t}. Friction is explicit,
        // so the error is O(dt⁴) rather than roundoff — still far below 1e−10
        // at these rates.
        let grid = Grid::standard(2, 16).unwrap();
        let v = synth::shear_mode(grid, 0.5);
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = v.clone();
        initial.v_plus = v.clone();
        initial.v_minus.scale(-1.0);
        let (mu, alpha) = (0.1, 0.5);
        let stepper = Stepper::new(
            grid,
            heat_params(mu, alpha),
            Formulation::Physical,
            cfg(1e-3, 1.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        let summary = run_plain(&stepper, initial);
        let mut expected = v;
        expected.scale((-(2.0 * alpha + mu)).exp());
        let err = summary.final_state.v_plus.l2_distance(&expected).unwrap();
        assert!(err < 1e-10, "pair decay error {err:.3e}");
    }

    #[test]
    fn wave_bound_rejected_at_construction() {
        let grid = Grid::standard(2, 16).unwrap();
        let err = Stepper::new(
            grid,
            heat_params(1.0, 0.0),
            Formulation::Physical,
            cfg(0.4, 1.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap_err();
        match err {
            StepError::WaveCfl { dt, limit } => {
                assert_eq!(dt, 0.4);
                assert!((limit - 0.9 * grid.spacing()).abs() < 1e-12);
            }
            other => panic!("expected the wave bound, got {other:?}"),
        }
    }

    #[test]
    fn advective_bound_names_the_constraint() {
        // Huge ε₀μ₀ pushes the wave bound out of the way; a fast shear then
        // trips the advective bound.
        let grid = Grid::standard(2, 16).unwrap();
        let mut p = heat_params(1.0, 0.0);
        p.eps0 = 100.0;
        p.mu0 = 100.0;
        let stepper = Stepper::new(
            grid,
            p,
            Formulation::Physical,
            cfg(0.1, 1.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        let mut state = NsmState::zeros(grid);
        state.v_minus = synth::shear_mode(grid, 8.0);
        let err = stepper.step(&state).unwrap_err();
        match err {
            StepError::AdvectiveCfl { dt, limit, .. } => {
                assert_eq!(dt, 0.1);
                assert!(limit < 0.05, "limit {limit} should bind");
            }
            other => panic!("expected the advective bound, got {other:?}"),
        }
    }

    #[test]
    fn explosive_friction_terminates_as_blowup() {
        // A friction rate so large that one explicit step overflows: the
        // guarded step reports blowup with the time stamp, and run() turns it
        // into a termination rather than an error.
        let grid = Grid::standard(2, 8).unwrap();
        let v = synth::shear_mode(grid, 0.01);
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = v.clone();
        initial.v_minus.scale(-1.0);
        initial.v_plus = v;
        let mut p = heat_params(0.0, 1e80);
        p.nu_minus = 0.0;
        p.nu_plus = 0.0;
        let stepper = Stepper::new(
            grid,
            p,
            Formulation::Physical,
            cfg(1e-3, 0.1, Scheme::Rk4Plain),
        )
        .unwrap();
        let summary = run_plain(&stepper, initial);
        match summary.termination {
            Termination::Blowup { t } => assert!((t - 1e-3).abs() < 1e-12),
            other => panic!("expected blowup, got {other:?}"),
        }
        assert_eq!(summary.steps, 0);
        assert!(summary.final_state.is_finite(), "last finite state returned");
    }

    #[test]
    fn sampling_cadence_contract() {
        let grid = Grid::standard(2, 8).unwrap();
        let stepper = Stepper::new(
            grid,
            heat_params(1.0, 0.0),
            Formulation::Physical,
            cfg(1e-2, 0.1, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        // Cadence beyond the ten steps: exactly one sample, at index 0.
        let mut log = SampleLog::new(None);
        stepper.run(NsmState::zeros(grid), 1000, &mut log).unwrap();
        assert_eq!(log.indices, vec![0]);
        // Cadence 5 over ten steps: indices 0, 5, 10.
        let mut log = SampleLog::new(None);
        stepper.run(NsmState::zeros(grid), 5, &mut log).unwrap();
        assert_eq!(log.indices, vec![0, 5, 10]);
        // Zero-length run: initial state back, zero steps, one sample.
        let stepper = Stepper::new(
            grid,
            heat_params(1.0, 0.0),
            Formulation::Physical,
            cfg(1e-2, 0.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        let mut log = SampleLog::new(None);
        let summary = stepper.run(NsmState::zeros(grid), 1, &mut log).unwrap();
        assert_eq!((summary.steps, log.indices.len()), (0, 1));
    }

    #[test]
    fn observer_break_stops_the_run() {
        let grid = Grid::standard(2, 8).unwrap();
        let stepper = Stepper::new(
            grid,
            heat_params(1.0, 0.0),
            Formulation::Physical,
            cfg(1e-2, 1.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        let mut log = SampleLog::new(Some(10));
        let summary = stepper.run(NsmState::zeros(grid), 5, &mut log).unwrap();
        assert_eq!(summary.termination, Termination::UserStop);
        assert_eq!(summary.steps, 10);
    }

    #[test]
    fn reprojection_is_a_small_safeguard() {
        let grid = Grid::standard(2, 16).unwrap();
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = synth::random_vector_field(grid, 4, 2.0, 0.3, true, &mut rng);
        initial.v_plus = synth::random_vector_field(grid, 4, 2.0, 0.3, true, &mut rng);
        initial.e_field = synth::random_vector_field(grid, 4, 2.0, 0.3, true, &mut rng);
        initial.b_field = synth::random_vector_field(grid, 4, 2.0, 0.3, true, &mut rng);
        let stepper = Stepper::new(
            grid,
            PhysicalParams::unit(),
            Formulation::Physical,
            cfg(1e-3, 1.0, Scheme::Rk4IntegratingFactor),
        )
        .unwrap();
        let raw = stepper.step_raw(&initial).unwrap();
        let mut projected = raw.clone();
        projected.project();
        let change = raw.l2_distance(&projected).unwrap();
        let scale = raw.l2_norm();
        assert!(
            change < 1e-11 * scale,
            "projection changed the state by {:.3e} (relative {:.3e})",
            change,
            change / scale
        );
    }

    #[test]
    fn config_validation() {
        let bad_dt = StepperConfig {
            dt: 0.0,
            scheme: Scheme::Rk4Plain,
            t_end: 1.0,
            cfl_safety: 0.9,
        };
        assert!(matches!(
            bad_dt.validate(),
            Err(StepError::BadConfig { name: "dt", .. })
        ));
        let bad_safety = StepperConfig {
            dt: 1e-3,
            scheme: Scheme::Rk4Plain,
            t_end: 1.0,
            cfl_safety: 1.5,
        };
        assert!(matches!(
            bad_safety.validate(),
            Err(StepError::BadConfig {
                name: "cfl_safety",
                ..
            })
        ));
        assert_eq!("rk4-plain".parse::<Scheme>().unwrap(), Scheme::Rk4Plain);
        assert!("euler".parse::<Scheme>().is_err());
    }
}
