//! Spectral representation of vector and scalar fields on the periodic box.
//!
//! A [`SpectralField`] always carries three Cartesian components, even on a
//! two-dimensional grid: the "2.5-D" convention keeps all three velocity and
//! field components while derivatives along the third axis vanish. Components
//! are stored as contiguous slabs of Fourier coefficients in the layout fixed
//! by [`Grid`].

use num_complex::Complex64;
use thiserror::Error;

use crate::fft;
use crate::grid::Grid;

/// Mismatched grids or malformed data when combining fields.
#[derive(Debug, Error, PartialEq)]
pub enum FieldError {
    #[error("fields live on different grids ({0:?} vs {1:?})")]
    GridMismatch(Grid, Grid),
}

/// Three-component vector field in spectral space.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralField {
    grid: Grid,
    /// Component-major: `data[c · modes + m]` is component `c` at mode `m`.
    data: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(grid: Grid) -> Self {
        Self { grid, data: vec![Complex64::default(); 3 * grid.modes()] }
    }

    /// Sample a real-valued vector function on the grid and transform it.
    ///
    /// Exact (up to roundoff) for band-limited trigonometric data, which is how
    /// all closed-form test fields are constructed.
    pub fn from_physical(grid: Grid, f: impl Fn([f64; 3]) -> [f64; 3]) -> Self {
        let modes = grid.modes();
        let mut data = vec![Complex64::default(); 3 * modes];
        for m in 0..modes {
            let v = f(grid.point(m));
            data[m] = Complex64::new(v[0], 0.0);
            data[modes + m] = Complex64::new(v[1], 0.0);
            data[2 * modes + m] = Complex64::new(v[2], 0.0);
        }
        let mut field = Self { grid, data };
        for c in 0..3 {
            fft::forward(&grid, field.comp_mut(c));
        }
        field
    }

    /// Build directly from spectral coefficients of the analytic expansion:
    /// the closure returns `f̂_k` per component for the integer frequency `k`;
    /// storage picks up the `L^{d/2}` normalization factor.
    pub fn from_modes(grid: Grid, f: impl Fn([i64; 3]) -> [Complex64; 3]) -> Self {
        let scale = grid.length().powi(grid.dim() as i32).sqrt();
        let mut field = Self::zeros(grid);
        for m in 0..grid.modes() {
            let coeff = f(grid.int_wavevector(m));
            for c in 0..3 {
                field.comp_mut(c)[m] = coeff[c] * scale;
            }
        }
        field
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn comp(&self, c: usize) -> &[Complex64] {
        let modes = self.grid.modes();
        &self.data[c * modes..(c + 1) * modes]
    }

    pub fn comp_mut(&mut self, c: usize) -> &mut [Complex64] {
        let modes = self.grid.modes();
        &mut self.data[c * modes..(c + 1) * modes]
    }

    /// Raw coefficient slab (all components), e.g. for serialization.
    pub fn raw(&self) -> &[Complex64] {
        &self.data
    }

    pub fn raw_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    /// Set the analytic coefficient `f̂_k` of one component (normalization applied).
    pub fn set_mode(&mut self, k: [i64; 3], comp: usize, value: Complex64) {
        let scale = self.grid.length().powi(self.grid.dim() as i32).sqrt();
        let m = self.grid.mode_of(k);
        self.comp_mut(comp)[m] = value * scale;
    }

    /// Real-space samples of one component (imaginary parts dropped; they are
    /// roundoff for Hermitian-symmetric coefficients).
    pub fn to_physical(&self, comp: usize) -> Vec<f64> {
        let mut buf = self.comp(comp).to_vec();
        fft::inverse(&self.grid, &mut buf);
        buf.into_iter().map(|c| c.re).collect()
    }

    /// Largest imaginary magnitude left after an inverse transform, over all
    /// components — the realness / Hermitian-symmetry defect.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for c in 0..3 {
            let mut buf = self.comp(c).to_vec();
            fft::inverse(&self.grid, &mut buf);
            for v in &buf {
                worst = worst.max(v.im.abs());
            }
        }
        worst
    }

    /// `self ← self + a·other`.
    pub fn axpy(&mut self, a: f64, other: &Self) -> Result<(), FieldError> {
        if self.grid != other.grid {
            return Err(FieldError::GridMismatch(self.grid, other.grid));
        }
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x += a * y;
        }
        Ok(())
    }

    pub fn scale(&mut self, a: f64) {
        for x in self.data.iter_mut() {
            *x *= a;
        }
    }

    /// Pointwise (per-mode, per-component) multiply by precomputed factors,
    /// the same factor for all three components. Used by integrating-factor steps.
    pub fn mul_mode_factors(&mut self, factors: &[f64]) {
        let modes = self.grid.modes();
        debug_assert_eq!(factors.len(), modes);
        for c in 0..3 {
            let slab = &mut self.data[c * modes..(c + 1) * modes];
            for (x, &f) in slab.iter_mut().zip(factors) {
                *x *= f;
            }
        }
    }

    /// Squared L² norm, `Σ_{c,k} |c_k|²` (Parseval-exact for our normalization).
    pub fn l2_norm_sqr(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn l2_norm(&self) -> f64 {
        self.l2_norm_sqr().sqrt()
    }

    /// Largest coefficient magnitude (any component).
    pub fn max_coeff(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Maximum pointwise Euclidean speed `max_x |v(x)|` (via inverse transforms).
    pub fn max_speed(&self) -> f64 {
        let vx = self.to_physical(0);
        let vy = self.to_physical(1);
        let vz = self.to_physical(2);
        let mut worst = 0.0f64;
        for i in 0..vx.len() {
            let s = vx[i] * vx[i] + vy[i] * vy[i] + vz[i] * vz[i];
            worst = worst.max(s);
        }
        worst.sqrt()
    }

    /// Real part of the L² inner product `⟨self, other⟩` (Parseval-exact).
    pub fn inner_re(&self, other: &Self) -> Result<f64, FieldError> {
        if self.grid != other.grid {
            return Err(FieldError::GridMismatch(self.grid, other.grid));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a.conj() * b).re)
            .sum())
    }

    /// L² distance to another field on the same grid.
    pub fn l2_distance(&self, other: &Self) -> Result<f64, FieldError> {
        if self.grid != other.grid {
            return Err(FieldError::GridMismatch(self.grid, other.grid));
        }
        let sum: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok(sum.sqrt())
    }
}

/// Scalar field in spectral space (divergences, pressures, probe inputs).
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarField {
    grid: Grid,
    data: Vec<Complex64>,
}

impl ScalarField {
    pub fn zeros(grid: Grid) -> Self {
        Self { grid, data: vec![Complex64::default(); grid.modes()] }
    }

    pub fn from_physical(grid: Grid, f: impl Fn([f64; 3]) -> f64) -> Self {
        let mut data: Vec<Complex64> = (0..grid.modes())
            .map(|m| Complex64::new(f(grid.point(m)), 0.0))
            .collect();
        fft::forward(&grid, &mut data);
        Self { grid, data }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.data
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn to_physical(&self) -> Vec<f64> {
        let mut buf = self.data.clone();
        fft::inverse(&self.grid, &mut buf);
        buf.into_iter().map(|c| c.re).collect()
    }

    pub fn l2_norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_coeff(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}
