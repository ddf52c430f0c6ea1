//! Uniform periodic grid on the torus `[0, L)^d` and its Fourier mode bookkeeping.
//!
//! Real-space samples live at `x_i = j·L/N`; spectral coefficients are indexed by
//! integer frequencies `k ∈ {-N/2+1, …, N/2}` per axis, stored in the usual FFT
//! layout (nonnegative frequencies first). Physical wavenumbers carry the `2π/L`
//! factor so that `e^{i k·x}` is periodic on the box. All coefficient arrays are
//! flat, row-major over axes, one contiguous slab per vector component.

use thiserror::Error;

/// Smallest supported grid resolution per axis.
///
/// Below this the alias-safe product band `|k| ≤ ⌈N/3⌉ − 1` holds fewer than
/// two active shells and nothing meaningful can be simulated.
pub const MIN_RESOLUTION: usize = 8;

/// Errors from grid construction.
#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("dimension must be 2 or 3, got {0}")]
    BadDimension(usize),
    #[error("N must be even (the FFT layout pairs +k with -k), got {0}")]
    OddResolution(usize),
    #[error("N must be at least {MIN_RESOLUTION}, got {0}")]
    TooCoarse(usize),
    #[error("box length must be positive and finite, got {0}")]
    BadLength(f64),
}

/// Discretization of the periodic box: `dim` axes, `n` points per axis, side length `len`.
///
/// Cheap to copy; all index math lives here so that fields, transforms and
/// operators agree on one layout.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    dim: usize,
    n: usize,
    len: f64,
}

impl Grid {
    /// Validated constructor. `dim ∈ {2, 3}`, `n` even and ≥ [`MIN_RESOLUTION`], `len > 0`.
    pub fn new(dim: usize, n: usize, len: f64) -> Result<Self, GridError> {
        if dim != 2 && dim != 3 {
            return Err(GridError::BadDimension(dim));
        }
        if n % 2 != 0 {
            return Err(GridError::OddResolution(n));
        }
        if n < MIN_RESOLUTION {
            return Err(GridError::TooCoarse(n));
        }
        if !(len > 0.0) || !len.is_finite() {
            return Err(GridError::BadLength(len));
        }
        Ok(Self { dim, n, len })
    }

    /// Standard box: side `2π`, so integer frequencies are the physical wavenumbers.
    pub fn standard(dim: usize, n: usize) -> Result<Self, GridError> {
        Self::new(dim, n, std::f64::consts::TAU)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn resolution(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.len
    }

    /// Real-space mesh width `Δx = L/N`.
    pub fn spacing(&self) -> f64 {
        self.len / self.n as f64
    }

    /// Spacing of the physical frequency lattice, `2π/L`.
    pub fn freq_step(&self) -> f64 {
        std::f64::consts::TAU / self.len
    }

    /// Total number of modes (= number of real-space samples), `N^d`.
    pub fn modes(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    /// Integer frequency of FFT slot `i` along one axis: `i` for `i ≤ N/2`, else `i − N`.
    #[inline]
    pub fn int_freq(&self, i: usize) -> i64 {
        if i <= self.n / 2 {
            i as i64
        } else {
            i as i64 - self.n as i64
        }
    }

    /// Decompose a flat mode index into per-axis FFT slots (third slot 0 in 2-D).
    #[inline]
    pub fn decode(&self, m: usize) -> [usize; 3] {
        let n = self.n;
        if self.dim == 2 {
            [m / n, m % n, 0]
        } else {
            [m / (n * n), (m / n) % n, m % n]
        }
    }

    /// Flat index of per-axis FFT slots.
    #[inline]
    pub fn encode(&self, idx: [usize; 3]) -> usize {
        let n = self.n;
        if self.dim == 2 {
            idx[0] * n + idx[1]
        } else {
            (idx[0] * n + idx[1]) * n + idx[2]
        }
    }

    /// Integer frequency vector of a flat mode index (third entry 0 in 2-D).
    #[inline]
    pub fn int_wavevector(&self, m: usize) -> [i64; 3] {
        let idx = self.decode(m);
        let mut k = [0i64; 3];
        for a in 0..self.dim {
            k[a] = self.int_freq(idx[a]);
        }
        k
    }

    /// Physical wavenumber vector `(2π/L)·k_int` of a flat mode index.
    #[inline]
    pub fn wavevector(&self, m: usize) -> [f64; 3] {
        let fs = self.freq_step();
        let k = self.int_wavevector(m);
        [k[0] as f64 * fs, k[1] as f64 * fs, k[2] as f64 * fs]
    }

    /// `|k|²` in physical units for a flat mode index.
    #[inline]
    pub fn k_squared(&self, m: usize) -> f64 {
        let k = self.wavevector(m);
        k[0] * k[0] + k[1] * k[1] + k[2] * k[2]
    }

    /// Flat index of the mode with integer frequencies `k` (entries in `{-N/2+1, …, N/2}`).
    pub fn mode_of(&self, k: [i64; 3]) -> usize {
        let n = self.n as i64;
        let slot = |f: i64| -> usize {
            debug_assert!(f > -n / 2 && f <= n / 2, "frequency {f} outside grid");
            f.rem_euclid(n) as usize
        };
        let idx = [slot(k[0]), slot(k[1]), if self.dim == 3 { slot(k[2]) } else { 0 }];
        self.encode(idx)
    }

    /// Per-axis half-width of the alias-safe product band: largest `K` with `3K < N`.
    ///
    /// Quadratic products of fields supported in `|k_i| ≤ K` have their retained
    /// modes free of aliasing, because alias images land at `|k_i| ≥ N − 2K > K`.
    pub fn dealias_band(&self) -> i64 {
        (self.n as i64 + 2) / 3 - 1 // = ceil(N/3) - 1
    }

    /// Whether mode `m` survives the dealias mask (`|k_i| ≤ dealias_band()` on every axis).
    #[inline]
    pub fn dealias_keep(&self, m: usize) -> bool {
        let band = self.dealias_band();
        let k = self.int_wavevector(m);
        k[0].abs() <= band && k[1].abs() <= band && k[2].abs() <= band
    }

    /// Largest physical `|k|` representable on the grid, `√d·(N/2)·(2π/L)`.
    pub fn max_wavenumber(&self) -> f64 {
        (self.dim as f64).sqrt() * (self.n as f64 / 2.0) * self.freq_step()
    }

    /// Real-space coordinates of sample `m` (same flat layout as modes).
    #[inline]
    pub fn point(&self, m: usize) -> [f64; 3] {
        let dx = self.spacing();
        let idx = self.decode(m);
        [idx[0] as f64 * dx, idx[1] as f64 * dx, idx[2] as f64 * dx]
    }
}
