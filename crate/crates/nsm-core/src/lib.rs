//! Pseudo-spectral solver core for an incompressible two-fluid
//! Navier–Stokes–Maxwell system with interspecies friction on the periodic
//! box `[0, L)^d`, `d ∈ {2, 3}` (two-dimensional runs keep all three vector
//! components — the "2.5-D" convention).
//!
//! The crate is organized bottom-up:
//!
//! * [`grid`] / [`field`] — mode bookkeeping and coefficient storage with a
//!   Parseval-exact normalization;
//! * [`ops`] — spectral derivatives, Leray projection, sharp mode cutoffs,
//!   and alias-free pointwise products;
//! * [`norms`] — Sobolev norms, dyadic (shell) decompositions, and the
//!   space-time norms built from them;
//! * [`dynamics`] — the coupled velocity/electromagnetic right-hand sides in
//!   several equivalent formulations;
//! * [`stepping`] — fixed-step RK4 with an exact integrating factor on the
//!   viscous part;
//! * [`diagnostics`] — energy bookkeeping, dissipation accumulators, and
//!   a-priori monitors;
//! * [`thresholds`] — the small-data constants, smallness classification and
//!   guaranteed-existence-time algebra;
//! * [`probes`] — numerical ratio studies for the inequalities the solver's
//!   analysis rests on;
//! * [`synth`] — deterministic closed-form and random divergence-free fields
//!   shared by scenarios, probes and tests.

pub mod diagnostics;
pub mod dynamics;
pub mod field;
mod fft;
pub mod grid;
pub mod norms;
pub mod ops;
pub mod probes;
pub mod stepping;
pub mod synth;
pub mod thresholds;

pub use field::{FieldError, ScalarField, SpectralField};
pub use grid::{Grid, GridError};
