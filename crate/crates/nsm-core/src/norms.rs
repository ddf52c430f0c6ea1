//! Sobolev norms, dyadic shell decompositions, and the space-time norms
//! built on top of them.
//!
//! Shells partition the frequency lattice: shell `q` owns `2^{q−1} < |k| ≤ 2^q`
//! (physical wavenumbers, so boxes with `L ≠ 2π` populate negative indices).
//! Ownership is disjoint, which makes reconstruction and the shell-wise
//! Parseval identity exact rather than up-to-a-constant. The zero mode (box
//! average) is routed to the lowest shell the grid can populate, so that a
//! decomposition always sums back to the original field.
//!
//! Space-time norms follow the "sum norms per shell, then ℓ² over shells"
//! ordering: `‖u‖ = ‖ w_q · ‖Δ_q u‖_{L^r([0,T];L²)} ‖_{ℓ²_q}` with weight
//! `w_q = 2^{qs}` (homogeneous) or `(1+2^q)^s` (inhomogeneous). Time
//! integrals use left-endpoint Riemann sums on a uniform step, matching how
//! the integrator samples trajectories.

use thiserror::Error;

use crate::field::SpectralField;
use crate::grid::Grid;

/// Errors from norm evaluation and series bookkeeping.
#[derive(Debug, Error, PartialEq)]
pub enum NormError {
    #[error("homogeneous norm of order {s} is undefined for a field with nonzero mean")]
    UndefinedNorm { s: f64 },
    #[error("series is empty")]
    EmptySeries,
    #[error("series timestamps must be strictly increasing (got {prev} then {next})")]
    NonMonotoneTime { prev: f64, next: f64 },
    #[error("series values must be finite and nonnegative, got {0}")]
    BadValue(f64),
    #[error("time samples are not uniformly spaced (step {got} vs {expected})")]
    NonUniformTime { got: f64, expected: f64 },
    #[error("block row has {got} entries, expected {expected}")]
    BlockCountMismatch { got: usize, expected: usize },
    #[error("field lives on a different grid than the series")]
    GridMismatch,
}

/// Relative tolerance below which a mean is treated as zero when checking
/// whether a negative-order homogeneous norm is well defined.
const MEAN_TOLERANCE: f64 = 1e-13;

// ---------------------------------------------------------------------------
// Sobolev norms
// ---------------------------------------------------------------------------

/// Sobolev norm of order `s`.
///
/// * `homogeneous = false`: `(Σ_k (1+|k|²)^s |f̂_k|²)^{1/2}` — always defined.
/// * `homogeneous = true`: `(Σ_{k≠0} |k|^{2s} |f̂_k|²)^{1/2}`. The zero mode
///   contributes its full weight at `s = 0` (where the norm is plainly L²),
///   nothing for `s > 0`, and makes the norm undefined for `s < 0` unless the
///   mean vanishes (relative to the largest coefficient).
pub fn sobolev_norm(f: &SpectralField, s: f64, homogeneous: bool) -> Result<f64, NormError> {
    let grid = f.grid();
    let mut sum = 0.0;
    let mut mean_sq = 0.0;
    for c in 0..3 {
        let slab = f.comp(c);
        for (m, v) in slab.iter().enumerate() {
            let k2 = grid.k_squared(m);
            let a2 = v.norm_sqr();
            if homogeneous {
                if k2 == 0.0 {
                    mean_sq += a2;
                    if s == 0.0 {
                        sum += a2;
                    }
                } else {
                    sum += k2.powf(s) * a2;
                }
            } else {
                sum += (1.0 + k2).powf(s) * a2;
            }
        }
    }
    if homogeneous && s < 0.0 {
        let scale = f.max_coeff();
        if mean_sq.sqrt() > MEAN_TOLERANCE * scale.max(f64::MIN_POSITIVE) {
            return Err(NormError::UndefinedNorm { s });
        }
    }
    Ok(sum.sqrt())
}

/// Squared homogeneous H¹ norm, `Σ |k|² |f̂|²` — the dissipation integrand.
pub fn h1dot_sqr(f: &SpectralField) -> f64 {
    let grid = f.grid();
    let mut sum = 0.0;
    for c in 0..3 {
        for (m, v) in f.comp(c).iter().enumerate() {
            sum += grid.k_squared(m) * v.norm_sqr();
        }
    }
    sum
}

// ---------------------------------------------------------------------------
// Dyadic shells
// ---------------------------------------------------------------------------

/// Shell index of a wavenumber magnitude: the `q` with `2^{q−1} < r ≤ 2^q`.
///
/// Exact at the binary shell boundaries (`r` a power of two); callers never
/// probe `r ≤ 0`.
pub fn shell_index(r: f64) -> i32 {
    debug_assert!(r > 0.0 && r.is_finite());
    let mut q = r.log2().ceil() as i32;
    // Guard the boundary against log/ceil roundoff.
    while pow2(q - 1) >= r {
        q -= 1;
    }
    while pow2(q) < r {
        q += 1;
    }
    q
}

#[inline]
fn pow2(q: i32) -> f64 {
    (q as f64).exp2()
}

/// Shell range a grid can populate: `(q_min, q_max)` for the smallest nonzero
/// and the largest representable wavenumber. The zero mode is assigned to
/// `q_min`.
pub fn shell_range(grid: &Grid) -> (i32, i32) {
    let q_min = shell_index(grid.freq_step());
    let q_max = shell_index(grid.max_wavenumber());
    (q_min, q_max)
}

/// Shell index for a flat mode index (zero mode → `q_min`).
#[inline]
fn shell_of_mode(grid: &Grid, m: usize, q_min: i32) -> i32 {
    let k2 = grid.k_squared(m);
    if k2 == 0.0 {
        q_min
    } else {
        shell_index(k2.sqrt())
    }
}

/// A field split into dyadic shells: `blocks[j]` holds exactly the modes of
/// shell `q_min + j`. Shells are disjoint, so the blocks sum to the original
/// field and their squared L² norms sum to its squared L² norm, both exactly.
pub struct DyadicBlocks {
    grid: Grid,
    q_min: i32,
    blocks: Vec<SpectralField>,
}

impl DyadicBlocks {
    pub fn q_min(&self) -> i32 {
        self.q_min
    }

    pub fn q_max(&self) -> i32 {
        self.q_min + self.blocks.len() as i32 - 1
    }

    pub fn block(&self, q: i32) -> Option<&SpectralField> {
        usize::try_from(q - self.q_min).ok().and_then(|j| self.blocks.get(j))
    }

    pub fn blocks(&self) -> &[SpectralField] {
        &self.blocks
    }

    /// Sum the blocks back into one field.
    pub fn reconstruct(&self) -> SpectralField {
        let mut out = SpectralField::zeros(self.grid);
        for b in &self.blocks {
            out.axpy(1.0, b).expect("blocks share the grid");
        }
        out
    }
}

/// Split a field into its dyadic shells.
pub fn decompose(f: &SpectralField) -> DyadicBlocks {
    let grid = f.grid();
    let (q_min, q_max) = shell_range(&grid);
    let count = (q_max - q_min + 1) as usize;
    let mut blocks = vec![SpectralField::zeros(grid); count];
    for m in 0..grid.modes() {
        let j = (shell_of_mode(&grid, m, q_min) - q_min) as usize;
        for c in 0..3 {
            blocks[j].comp_mut(c)[m] = f.comp(c)[m];
        }
    }
    DyadicBlocks { grid, q_min, blocks }
}

/// Per-shell L² norms without materializing the blocks (the per-step fast path).
pub fn block_l2_norms(f: &SpectralField) -> Vec<f64> {
    let grid = f.grid();
    let (q_min, q_max) = shell_range(&grid);
    let mut sums = vec![0.0f64; (q_max - q_min + 1) as usize];
    for c in 0..3 {
        for (m, v) in f.comp(c).iter().enumerate() {
            let j = (shell_of_mode(&grid, m, q_min) - q_min) as usize;
            sums[j] += v.norm_sqr();
        }
    }
    sums.into_iter().map(f64::sqrt).collect()
}

// ---------------------------------------------------------------------------
// Time series of norms
// ---------------------------------------------------------------------------

/// Admissible time exponents for the blockwise space-time norms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TimeExponent {
    One,
    FourThirds,
    Two,
    Infinity,
}

impl TimeExponent {
    fn as_f64(self) -> Option<f64> {
        match self {
            TimeExponent::One => Some(1.0),
            TimeExponent::FourThirds => Some(4.0 / 3.0),
            TimeExponent::Two => Some(2.0),
            TimeExponent::Infinity => None,
        }
    }
}

/// A labeled time series of scalar norm values.
#[derive(Clone, Debug)]
pub struct NormSeries {
    descriptor: String,
    times: Vec<f64>,
    values: Vec<f64>,
}

impl NormSeries {
    pub fn new(descriptor: impl Into<String>) -> Self {
        Self { descriptor: descriptor.into(), times: Vec::new(), values: Vec::new() }
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn push(&mut self, t: f64, value: f64) -> Result<(), NormError> {
        if let Some(&prev) = self.times.last() {
            if t <= prev {
                return Err(NormError::NonMonotoneTime { prev, next: t });
            }
        }
        if !value.is_finite() || value < 0.0 {
            return Err(NormError::BadValue(value));
        }
        self.times.push(t);
        self.values.push(value);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Supremum over the sampled times.
    pub fn sup(&self) -> Result<f64, NormError> {
        if self.is_empty() {
            return Err(NormError::EmptySeries);
        }
        Ok(self.values.iter().copied().fold(0.0, f64::max))
    }

    /// `(∫₀^T v(t)^r dt)^{1/r}` by left-endpoint quadrature on a uniform step.
    pub fn lr_time_norm(&self, r: f64) -> Result<f64, NormError> {
        let dt = uniform_step(&self.times)?;
        let sum: f64 = self.values[..self.values.len() - 1]
            .iter()
            .map(|v| v.powf(r))
            .sum();
        Ok((sum * dt).powf(1.0 / r))
    }
}

fn uniform_step(times: &[f64]) -> Result<f64, NormError> {
    if times.len() < 2 {
        return Err(NormError::EmptySeries);
    }
    let dt = times[1] - times[0];
    for w in times.windows(2) {
        let step = w[1] - w[0];
        if (step - dt).abs() > 1e-9 * dt.max(1.0) {
            return Err(NormError::NonUniformTime { got: step, expected: dt });
        }
    }
    Ok(dt)
}

/// Time series of per-shell L² norms of one field, the input to the blockwise
/// space-time norms.
#[derive(Clone, Debug)]
pub struct BlockSeries {
    q_min: i32,
    shells: usize,
    times: Vec<f64>,
    rows: Vec<Vec<f64>>,
}

impl BlockSeries {
    /// Empty series for the shell layout of `grid`.
    pub fn for_grid(grid: &Grid) -> Self {
        let (q_min, q_max) = shell_range(grid);
        Self { q_min, shells: (q_max - q_min + 1) as usize, times: Vec::new(), rows: Vec::new() }
    }

    pub fn q_min(&self) -> i32 {
        self.q_min
    }

    pub fn shells(&self) -> usize {
        self.shells
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Append a sample computed from a field.
    pub fn push(&mut self, t: f64, f: &SpectralField) -> Result<(), NormError> {
        let row = block_l2_norms(f);
        self.push_block_norms(t, row)
    }

    /// Append a precomputed row of per-shell norms (used where the shell
    /// content is known in closed form).
    pub fn push_block_norms(&mut self, t: f64, row: Vec<f64>) -> Result<(), NormError> {
        if row.len() != self.shells {
            return Err(NormError::BlockCountMismatch { got: row.len(), expected: self.shells });
        }
        if let Some(&prev) = self.times.last() {
            if t <= prev {
                return Err(NormError::NonMonotoneTime { prev, next: t });
            }
        }
        for &v in &row {
            if !v.is_finite() || v < 0.0 {
                return Err(NormError::BadValue(v));
            }
        }
        self.times.push(t);
        self.rows.push(row);
        Ok(())
    }
}

/// Blockwise space-time norm: per shell take the `L^r` norm in time of the
/// shell's L² norm, weight by `2^{qs}` (homogeneous) or `(1+2^q)^s`
/// (inhomogeneous), then combine shells in ℓ².
///
/// Requires at least two uniformly spaced samples for finite `r` (the
/// integral needs a step); `r = ∞` works from one sample on.
pub fn chemin_lerner_norm(
    series: &BlockSeries,
    s: f64,
    r: TimeExponent,
    homogeneous: bool,
) -> Result<f64, NormError> {
    if series.is_empty() {
        return Err(NormError::EmptySeries);
    }
    let weight = |q: i32| -> f64 {
        if homogeneous {
            pow2(q).powf(s)
        } else {
            (1.0 + pow2(q)).powf(s)
        }
    };
    let mut sum = 0.0;
    match r.as_f64() {
        None => {
            for j in 0..series.shells {
                let a = series.rows.iter().map(|row| row[j]).fold(0.0, f64::max);
                let w = weight(series.q_min + j as i32);
                sum += (w * a).powi(2);
            }
        }
        Some(rf) => {
            let dt = uniform_step(&series.times)?;
            for j in 0..series.shells {
                let integral: f64 = series.rows[..series.rows.len() - 1]
                    .iter()
                    .map(|row| row[j].powf(rf))
                    .sum::<f64>()
                    * dt;
                let a = integral.powf(1.0 / rf);
                let w = weight(series.q_min + j as i32);
                sum += (w * a).powi(2);
            }
        }
    }
    Ok(sum.sqrt())
}

/// Running velocity norm pair for the small-data monitor: the supremum of the
/// Ḣ^{1/2} samples and the time-L² of the Ḣ^{3/2} samples.
#[derive(Clone, Debug, Default)]
pub struct XvSeries {
    times: Vec<f64>,
    h_half: Vec<f64>,
    h_three_half: Vec<f64>,
}

impl XvSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, t: f64, h_half: f64, h_three_half: f64) -> Result<(), NormError> {
        if let Some(&prev) = self.times.last() {
            if t <= prev {
                return Err(NormError::NonMonotoneTime { prev, next: t });
            }
        }
        for v in [h_half, h_three_half] {
            if !v.is_finite() || v < 0.0 {
                return Err(NormError::BadValue(v));
            }
        }
        self.times.push(t);
        self.h_half.push(h_half);
        self.h_three_half.push(h_three_half);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// `max( sup_t ‖·‖_{Ḣ^{1/2}}, ‖ ‖·‖_{Ḣ^{3/2}} ‖_{L²_T} )` over the sampled
/// horizon — the norm whose boundedness the small-data theory guarantees.
///
/// A single sample is allowed: the time integral is then empty and only the
/// sup part contributes.
pub fn xv_norm(series: &XvSeries) -> Result<f64, NormError> {
    if series.is_empty() {
        return Err(NormError::EmptySeries);
    }
    let sup = series.h_half.iter().copied().fold(0.0, f64::max);
    let integral = if series.len() >= 2 {
        let dt = uniform_step(&series.times)?;
        (series.h_three_half[..series.len() - 1]
            .iter()
            .map(|v| v * v)
            .sum::<f64>()
            * dt)
            .sqrt()
    } else {
        0.0
    };
    Ok(sup.max(integral))
}
