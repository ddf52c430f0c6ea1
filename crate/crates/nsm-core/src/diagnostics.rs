//! Run-time audits: the exact energy balance, the weak-solution energy
//! inequality, a priori norm tracking, and structural residual checks.
//!
//! The semi-discrete system conserves a weighted energy up to viscous,
//! frictional and (in truncated runs) no other losses; the audit integrates
//! the dissipation by trapezoidal quadrature at step cadence and reports the
//! identity residual. Inequalities whose sharp constants are unknown are
//! *monitored as ratios*, never asserted against a fixed constant.

use thiserror::Error;

use crate::dynamics::{energy_weights, EnergyWeights, Formulation, NsmState, PhysicalParams};
use crate::norms;

#[derive(Debug, Error)]
pub enum DiagnosticsError {
    #[error("monitor exponent s1 must lie strictly between 0 and 1, got {s1}")]
    BadExponent { s1: f64 },
}

// ---------------------------------------------------------------------------
// Energy audit
// ---------------------------------------------------------------------------

/// Snapshot of the energy ledger at one instant.
///
/// `residual = (total now + dissipated so far) − total at start`; for the
/// exact balance it is pure time-integration/quadrature error, and the weak
/// form of the balance demands it stay below a small positive tolerance.
#[derive(Debug, Clone, Copy)]
pub struct EnergyReport {
    pub t: f64,
    /// Weighted kinetic energy of the first velocity slot.
    pub kinetic_minus: f64,
    /// Weighted kinetic energy of the second velocity slot.
    pub kinetic_plus: f64,
    pub electric: f64,
    pub magnetic: f64,
    /// ∫ weighted ‖∇ slot₁‖² dt so far.
    pub diss_minus: f64,
    /// ∫ weighted ‖∇ slot₂‖² dt so far.
    pub diss_plus: f64,
    /// ∫ weighted friction loss dt so far.
    pub diss_friction: f64,
    pub residual: f64,
}

impl EnergyReport {
    pub fn total(&self) -> f64 {
        self.kinetic_minus + self.kinetic_plus + self.electric + self.magnetic
    }

    pub fn dissipated(&self) -> f64 {
        self.diss_minus + self.diss_plus + self.diss_friction
    }
}

/// Tracks the energy balance of one trajectory.
///
/// Feed it every accepted step (`record`) so the trapezoidal dissipation
/// accumulators see the full resolution of the run, then ask for a `report`
/// at any sampling instant.
#[derive(Debug, Clone)]
pub struct EnergyAudit {
    weights: EnergyWeights,
    bulk: bool,
    initial_total: f64,
    t_prev: f64,
    /// Dissipation integrands at the previous record, for the trapezoid.
    prev: [f64; 3],
    acc: [f64; 3],
}

/// Instantaneous dissipation integrands under the audit's weights:
/// viscous per slot, then friction (‖v₊−v₋‖² in the two-fluid forms, ‖j‖²
/// for bulk variables).
fn dissipation_integrands(state: &NsmState, w: &EnergyWeights, bulk: bool) -> [f64; 3] {
    let friction_sqr = if bulk {
        state.v_plus.l2_norm_sqr()
    } else {
        let mut diff = state.v_plus.clone();
        diff.axpy(-1.0, &state.v_minus)
            .expect("state fields share a grid");
        diff.l2_norm_sqr()
    };
    [
        w.diss_minus * norms::h1dot_sqr(&state.v_minus),
        w.diss_plus * norms::h1dot_sqr(&state.v_plus),
        w.friction * friction_sqr,
    ]
}

fn weighted_total(state: &NsmState, w: &EnergyWeights) -> f64 {
    w.v_minus * state.v_minus.l2_norm_sqr()
        + w.v_plus * state.v_plus.l2_norm_sqr()
        + w.electric * state.e_field.l2_norm_sqr()
        + w.magnetic * state.b_field.l2_norm_sqr()
}

impl EnergyAudit {
    pub fn new(initial: &NsmState, params: &PhysicalParams, form: &Formulation) -> Self {
        let weights = energy_weights(params, form);
        let bulk = form.is_bulk();
        let prev = dissipation_integrands(initial, &weights, bulk);
        Self {
            weights,
            bulk,
            initial_total: weighted_total(initial, &weights),
            t_prev: initial.t,
            prev,
            acc: [0.0; 3],
        }
    }

    pub fn initial_total(&self) -> f64 {
        self.initial_total
    }

    /// Advance the dissipation accumulators to `state.t` by one trapezoid
    /// panel. Call once per accepted step, in order.
    pub fn record(&mut self, state: &NsmState) {
        let now = dissipation_integrands(state, &self.weights, self.bulk);
        let dt = state.t - self.t_prev;
        for (acc, (a, b)) in self.acc.iter_mut().zip(self.prev.iter().zip(now.iter())) {
            *acc += dt * (a + b) / 2.0;
        }
        self.prev = now;
        self.t_prev = state.t;
    }

    /// Energy ledger at `state` (normally the state just recorded).
    pub fn report(&self, state: &NsmState) -> EnergyReport {
        let w = &self.weights;
        let report = EnergyReport {
            t: state.t,
            kinetic_minus: w.v_minus * state.v_minus.l2_norm_sqr(),
            kinetic_plus: w.v_plus * state.v_plus.l2_norm_sqr(),
            electric: w.electric * state.e_field.l2_norm_sqr(),
            magnetic: w.magnetic * state.b_field.l2_norm_sqr(),
            diss_minus: self.acc[0],
            diss_plus: self.acc[1],
            diss_friction: self.acc[2],
            residual: 0.0,
        };
        EnergyReport {
            residual: report.total() + report.dissipated() - self.initial_total,
            ..report
        }
    }

    /// |residual| relative to the initial total (zero for a zero start).
    pub fn relative_residual(&self, report: &EnergyReport) -> f64 {
        if self.initial_total > 0.0 {
            report.residual.abs() / self.initial_total
        } else {
            report.residual.abs()
        }
    }

    /// The computable form of the energy inequality: current total plus
    /// accumulated dissipation must not exceed the initial total by more than
    /// `tol` relative.
    pub fn inequality_ok(&self, report: &EnergyReport, tol: f64) -> bool {
        report.residual <= tol * self.initial_total.max(f64::MIN_POSITIVE)
    }
}

// ---------------------------------------------------------------------------
// A priori monitor
// ---------------------------------------------------------------------------

/// Running norm suprema, dissipation-norm integrals, and the dimension
/// specific tracked quantities: the 2-D bound ratios and the 3-D space-time
/// velocity norm.
#[derive(Debug, Clone, Copy)]
pub struct AprioriReport {
    pub t: f64,
    /// sup over time of the slot L² norms.
    pub sup_v_minus: f64,
    pub sup_v_plus: f64,
    pub sup_e: f64,
    pub sup_b: f64,
    /// L²-in-time first-derivative norms per slot.
    pub l2t_h1dot_minus: f64,
    pub l2t_h1dot_plus: f64,
    /// Sum of the four initial L² norms.
    pub c0: f64,
    /// 2-D only: (sup‖E‖ + sup‖B‖) / (C₀·max(1,T)).
    pub ratio_eb: Option<f64>,
    /// 2-D only: max over slots of ‖v‖_{L¹_T H^{s₁}} / (C₀·max(1,T)²).
    pub ratio_v: Option<f64>,
    /// 3-D only: max over slots of max(sup_t ‖v‖_{Ḣ^{1/2}}, ‖v‖_{L²_T Ḣ^{3/2}}).
    pub xv: Option<f64>,
}

/// Tracks the a priori quantities along a trajectory. Feed every accepted
/// step; the time integrals use left-endpoint panels for the space-time
/// norms (matching the norm module's convention) and the suprema are exact
/// over the recorded instants.
#[derive(Debug, Clone)]
pub struct AprioriMonitor {
    dim: usize,
    s1: f64,
    c0: f64,
    t: f64,
    t_prev: f64,
    sup: [f64; 4],
    /// Trapezoid state for ∫‖∇v∓‖²: previous integrands and accumulators.
    h1_prev: [f64; 2],
    h1_acc: [f64; 2],
    /// 2-D: left-endpoint ∫‖v∓‖_{H^{s₁}} dt accumulators.
    hs1_prev: [f64; 2],
    hs1_acc: [f64; 2],
    /// 3-D: running sup of Ḣ^{1/2} and left-endpoint ∫‖v‖²_{Ḣ^{3/2}}.
    half_sup: [f64; 2],
    three_half_prev: [f64; 2],
    three_half_acc: [f64; 2],
}

impl AprioriMonitor {
    pub fn new(initial: &NsmState, s1: f64) -> Result<Self, DiagnosticsError> {
        if !(s1 > 0.0 && s1 < 1.0) {
            return Err(DiagnosticsError::BadExponent { s1 });
        }
        let dim = initial.v_minus.grid().dim();
        let c0 = initial.v_minus.l2_norm()
            + initial.v_plus.l2_norm()
            + initial.e_field.l2_norm()
            + initial.b_field.l2_norm();
        let mut monitor = Self {
            dim,
            s1,
            c0,
            t: initial.t,
            t_prev: initial.t,
            sup: [0.0; 4],
            h1_prev: [0.0; 2],
            h1_acc: [0.0; 2],
            hs1_prev: [0.0; 2],
            hs1_acc: [0.0; 2],
            half_sup: [0.0; 2],
            three_half_prev: [0.0; 2],
            three_half_acc: [0.0; 2],
        };
        monitor.absorb(initial);
        Ok(monitor)
    }

    /// Update suprema and stage the integrands of `state` for the panel that
    /// ends at the next record.
    fn absorb(&mut self, state: &NsmState) {
        let fields = state.fields();
        for (slot, f) in fields.iter().enumerate() {
            self.sup[slot] = self.sup[slot].max(f.l2_norm());
        }
        for (slot, v) in [&state.v_minus, &state.v_plus].into_iter().enumerate() {
            self.h1_prev[slot] = norms::h1dot_sqr(v);
            if self.dim == 2 {
                self.hs1_prev[slot] = norms::sobolev_norm(v, self.s1, false)
                    .expect("inhomogeneous norms exist for all orders");
            } else {
                let half = norms::sobolev_norm(v, 0.5, true)
                    .expect("mean-free velocity slots have homogeneous norms");
                let three_half = norms::sobolev_norm(v, 1.5, true)
                    .expect("mean-free velocity slots have homogeneous norms");
                self.half_sup[slot] = self.half_sup[slot].max(half);
                self.three_half_prev[slot] = three_half;
            }
        }
    }

    /// Advance to `state.t`. The previous instant closes its trapezoid (for
    /// ‖∇v‖²) and left-endpoint (for the space-time norms) panels.
    pub fn record(&mut self, state: &NsmState) {
        let dt = state.t - self.t_prev;
        let h1_now = [
            norms::h1dot_sqr(&state.v_minus),
            norms::h1dot_sqr(&state.v_plus),
        ];
        for slot in 0..2 {
            self.h1_acc[slot] += dt * (self.h1_prev[slot] + h1_now[slot]) / 2.0;
            if self.dim == 2 {
                self.hs1_acc[slot] += dt * self.hs1_prev[slot];
            } else {
                self.three_half_acc[slot] += dt * self.three_half_prev[slot].powi(2);
            }
        }
        self.t_prev = state.t;
        self.t = state.t;
        self.absorb(state);
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn report(&self) -> AprioriReport {
        let horizon = (self.t).max(1.0);
        let denom_eb = self.c0 * horizon;
        let denom_v = self.c0 * horizon * horizon;
        let (ratio_eb, ratio_v, xv) = if self.dim == 2 {
            let eb = if denom_eb > 0.0 {
                (self.sup[2] + self.sup[3]) / denom_eb
            } else {
                0.0
            };
            let v = if denom_v > 0.0 {
                self.hs1_acc[0].max(self.hs1_acc[1]) / denom_v
            } else {
                0.0
            };
            (Some(eb), Some(v), None)
        } else {
            let xv = (0..2)
                .map(|s| self.half_sup[s].max(self.three_half_acc[s].sqrt()))
                .fold(0.0, f64::max);
            (None, None, Some(xv))
        };
        AprioriReport {
            t: self.t,
            sup_v_minus: self.sup[0],
            sup_v_plus: self.sup[1],
            sup_e: self.sup[2],
            sup_b: self.sup[3],
            l2t_h1dot_minus: self.h1_acc[0].max(0.0).sqrt(),
            l2t_h1dot_plus: self.h1_acc[1].max(0.0).sqrt(),
            c0: self.c0,
            ratio_eb,
            ratio_v,
            xv,
        }
    }
}

// ---------------------------------------------------------------------------
// Structural residuals
// ---------------------------------------------------------------------------

/// Per-field divergence residuals, each normalized by the field's largest
/// coefficient (zero for a zero field). Order: slot₁, slot₂, E, B.
pub fn divergence_residuals(state: &NsmState) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (slot, f) in state.fields().iter().enumerate() {
        let amp = f.max_coeff();
        out[slot] = if amp > 0.0 {
            crate::ops::div_residual(f) / amp
        } else {
            0.0
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::SpectralField;
    use crate::grid::Grid;
    use crate::stepping::{Observer, Scheme, Stepper, StepperConfig};
    use crate::synth;
    use std::f64::consts::PI;
    use std::ops::ControlFlow;

    fn cfg(dt: f64, t_end: f64) -> StepperConfig {
        StepperConfig {
            dt,
            scheme: Scheme::Rk4IntegratingFactor,
            t_end,
            cfl_safety: 0.9,
        }
    }

    /// Feeds the audit every step and snapshots (total, electric) per sample.
    struct AuditObs {
        audit: EnergyAudit,
        totals: Vec<f64>,
        electrics: Vec<f64>,
    }

    impl Observer for AuditObs {
        fn after_step(&mut self, s: &NsmState) {
            self.audit.record(s);
        }

        fn sample(&mut self, _i: u64, s: &NsmState) -> ControlFlow<()> {
            let r = self.audit.report(s);
            self.totals.push(r.total());
            self.electrics.push(r.electric);
            ControlFlow::Continue(())
        }
    }

    /// Collects per-sample kinetic energy and species-velocity gap.
    struct KineticGapObs {
        kinetic: Vec<f64>,
        gaps: Vec<f64>,
    }

    impl Observer for KineticGapObs {
        fn sample(&mut self, _i: u64, s: &NsmState) -> ControlFlow<()> {
            self.kinetic
                .push(s.v_minus.l2_norm_sqr() + s.v_plus.l2_norm_sqr());
            self.gaps.push(s.v_plus.l2_distance(&s.v_minus).unwrap());
            ControlFlow::Continue(())
        }
    }

    /// Feeds the a priori monitor every step and snapshots sup‖E‖ per sample.
    struct MonitorObs {
        monitor: AprioriMonitor,
        sups: Vec<f64>,
    }

    impl Observer for MonitorObs {
        fn after_step(&mut self, s: &NsmState) {
            self.monitor.record(s);
        }

        fn sample(&mut self, _i: u64, _s: &NsmState) -> ControlFlow<()> {
            self.sups.push(self.monitor.report().sup_e);
            ControlFlow::Continue(())
        }
    }

    #[test]
    fn electric_energy_closed_form() {
        // ∫cos² over the 2π square is 2π²; with weight ½ the electric energy
        // is π² and everything else vanishes.
        let grid = Grid::standard(2, 16).unwrap();
        let mut state = NsmState::zeros(grid);
        state.e_field = SpectralField::from_physical(grid, |x| [0.0, x[0].cos(), 0.0]);
        let audit = EnergyAudit::new(&state, &PhysicalParams::unit(), &Formulation::Physical);
        let report = audit.report(&state);
        assert!((report.electric - PI * PI).abs() < 1e-12);
        assert_eq!(report.kinetic_minus, 0.0);
        assert_eq!(report.kinetic_plus, 0.0);
        assert_eq!(report.magnetic, 0.0);
        assert_eq!(report.dissipated(), 0.0);
        assert!(report.residual.abs() < 1e-12);
    }

    #[test]
    fn zero_state_reports_zero() {
        let grid = Grid::standard(2, 8).unwrap();
        let state = NsmState::zeros(grid);
        let audit = EnergyAudit::new(&state, &PhysicalParams::unit(), &Formulation::Physical);
        let report = audit.report(&state);
        assert_eq!(report.total(), 0.0);
        assert_eq!(report.residual, 0.0);
        assert!(audit.inequality_ok(&report, 1e-8));
    }

    #[test]
    fn viscous_decay_balances_to_quadrature_accuracy() {
        // Shear decay at rate 2μ|k|² in energy: the identity residual is pure
        // trapezoid error, far below the viscous audit budget of 1e−5.
        let grid = Grid::standard(2, 16).unwrap();
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = synth::shear_mode(grid, 1.0);
        initial.v_plus = synth::shear_mode(grid, 1.0);
        let params = PhysicalParams {
            e: 0.0,
            alpha: 0.0,
            ..PhysicalParams::unit()
        };
        let form = Formulation::Physical;
        let stepper = Stepper::new(grid, params, form, cfg(1e-3, 0.2)).unwrap();
        let mut obs = AuditObs {
            audit: EnergyAudit::new(&initial, &params, &form),
            totals: Vec::new(),
            electrics: Vec::new(),
        };
        let summary = stepper.run(initial, u64::MAX, &mut obs).unwrap();
        let audit = obs.audit;
        let report = audit.report(&summary.final_state);
        let rel = audit.relative_residual(&report);
        assert!(rel < 1e-5, "viscous residual {rel:.3e}");
        assert!(audit.inequality_ok(&report, 1e-5));
        // The surviving kinetic energy matches the closed form ½·2π²·e^{−2t}.
        let expected = PI * PI * (-2.0f64 * 0.2).exp();
        assert!((report.kinetic_minus - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn standing_wave_exchanges_electric_and_magnetic_energy() {
        // E₀ = (0, cos x₁, 0), B₀ = 0 evolves as E = cos t·cos x₁ e₂,
        // B = sin t·sin x₁ e₃: the two energies trade places while their sum
        // stays put.
        let grid = Grid::standard(2, 32).unwrap();
        let mut initial = NsmState::zeros(grid);
        initial.e_field = SpectralField::from_physical(grid, |x| [0.0, x[0].cos(), 0.0]);
        let params = PhysicalParams {
            e: 0.0,
            alpha: 0.0,
            ..PhysicalParams::unit()
        };
        let form = Formulation::Physical;
        let stepper = Stepper::new(grid, params, form, cfg(1e-3, 1.0)).unwrap();
        let mut obs = AuditObs {
            audit: EnergyAudit::new(&initial, &params, &form),
            totals: Vec::new(),
            electrics: Vec::new(),
        };
        let summary = stepper.run(initial, 100, &mut obs).unwrap();
        let (totals, electrics) = (obs.totals, obs.electrics);
        let first = totals[0];
        for t in &totals {
            assert!((t - first).abs() < 1e-8 * first, "sum wanders: {t} vs {first}");
        }
        let spread = electrics.iter().fold(0.0f64, |m, &e| m.max(e))
            - electrics.iter().fold(f64::MAX, |m, &e| m.min(e));
        assert!(spread > 0.5 * first, "electric energy should oscillate");
        // Closed form at t = 1.
        let t = 1.0f64;
        let expected_e = SpectralField::from_physical(grid, move |x| {
            [0.0, t.cos() * x[0].cos(), 0.0]
        });
        let expected_b = SpectralField::from_physical(grid, move |x| {
            [0.0, 0.0, t.sin() * x[0].sin()]
        });
        let err_e = summary.final_state.e_field.l2_distance(&expected_e).unwrap();
        let err_b = summary.final_state.b_field.l2_distance(&expected_b).unwrap();
        assert!(err_e < 1e-9 && err_b < 1e-9, "wave errors {err_e:.3e}, {err_b:.3e}");
    }

    #[test]
    fn friction_shrinks_kinetic_energy_and_velocity_gap() {
        let grid = Grid::standard(2, 16).unwrap();
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = synth::shear_mode(grid, 0.5);
        initial.v_plus = synth::shear_mode(grid, 0.5);
        initial.v_minus.scale(-1.0);
        let params = PhysicalParams {
            e: 0.0,
            nu_minus: 0.0,
            nu_plus: 0.0,
            alpha: 0.8,
            ..PhysicalParams::unit()
        };
        let form = Formulation::Physical;
        let stepper = Stepper::new(grid, params, form, cfg(1e-2, 0.5)).unwrap();
        let mut obs = KineticGapObs {
            kinetic: Vec::new(),
            gaps: Vec::new(),
        };
        stepper.run(initial, 1, &mut obs).unwrap();
        let (kinetic, gaps) = (obs.kinetic, obs.gaps);
        for pair in kinetic.windows(2) {
            assert!(pair[1] <= pair[0] * (1.0 + 1e-12), "kinetic energy grew");
        }
        for pair in gaps.windows(2) {
            assert!(pair[1] <= pair[0] * (1.0 + 1e-12), "velocity gap grew");
        }
        assert!(gaps.last().unwrap() < &(gaps[0] * 0.6), "gap should decay");
    }

    #[test]
    fn initial_norm_sum_closed_form() {
        let grid = Grid::standard(2, 16).unwrap();
        let mut state = NsmState::zeros(grid);
        state.v_minus = synth::shear_mode(grid, 1.0);
        state.v_plus = synth::shear_mode(grid, 1.0);
        let monitor = AprioriMonitor::new(&state, 0.5).unwrap();
        assert!((monitor.c0() - 2.0 * PI * 2.0f64.sqrt()).abs() < 1e-12);
        assert!(AprioriMonitor::new(&state, 1.5).is_err());
        assert!(AprioriMonitor::new(&state, 0.0).is_err());
    }

    #[test]
    fn monitor_tracks_ratios_in_2d_and_xv_in_3d() {
        let grid = Grid::standard(2, 16).unwrap();
        let mut initial = NsmState::zeros(grid);
        initial.v_minus = synth::shear_mode(grid, 0.3);
        initial.v_plus = synth::shear_mode(grid, 0.3);
        initial.e_field = SpectralField::from_physical(grid, |x| [0.0, 0.2 * x[0].cos(), 0.0]);
        let params = PhysicalParams::unit();
        let form = Formulation::Physical;
        let stepper = Stepper::new(grid, params, form, cfg(1e-2, 0.3)).unwrap();
        let mut obs = MonitorObs {
            monitor: AprioriMonitor::new(&initial, 0.5).unwrap(),
            sups: Vec::new(),
        };
        stepper.run(initial, 10, &mut obs).unwrap();
        let (monitor, sups) = (obs.monitor, obs.sups);
        let report = monitor.report();
        assert!(report.ratio_eb.unwrap().is_finite());
        assert!(report.ratio_v.unwrap().is_finite());
        assert!(report.xv.is_none());
        assert!(report.ratio_eb.unwrap() > 0.0);
        for pair in sups.windows(2) {
            assert!(pair[1] >= pair[0], "supremum must not decrease");
        }

        // 3-D: X^v present, 2-D ratios absent; stationary sanity value.
        let grid3 = Grid::standard(3, 8).unwrap();
        let mut s3 = NsmState::zeros(grid3);
        s3.v_minus = synth::shear_mode(grid3, 1.0);
        let mut monitor3 = AprioriMonitor::new(&s3, 0.5).unwrap();
        s3.t = 1.0;
        monitor3.record(&s3);
        let r3 = monitor3.report();
        assert!(r3.ratio_eb.is_none());
        let xv = r3.xv.unwrap();
        // Single |k| = 1 mode: Ḣ^{1/2} = Ḣ^{3/2} = L² norm; sup part = L²,
        // integral part = L²·√T with T = 1 → X^v = L² norm of the shear.
        let l2 = s3.v_minus.l2_norm();
        assert!((xv - l2).abs() < 1e-12, "xv {xv} vs {l2}");
    }

    #[test]
    fn polluted_divergence_is_detected() {
        let grid = Grid::standard(2, 16).unwrap();
        let mut state = NsmState::zeros(grid);
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        state.v_minus = synth::random_vector_field(grid, 4, 2.0, 1.0, true, &mut rng);
        let clean = divergence_residuals(&state);
        assert!(clean[0] < 1e-13);
        // Pollute with a gradient of comparable size.
        let grad = SpectralField::from_physical(grid, |x| [0.3 * x[0].cos(), 0.0, 0.0]);
        state.v_minus.axpy(1.0, &grad).unwrap();
        let dirty = divergence_residuals(&state);
        assert!(dirty[0] > 1e-3, "pollution invisible: {:.3e}", dirty[0]);
    }
}
