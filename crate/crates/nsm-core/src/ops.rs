//! Spectral differential operators, projections, mode cutoffs, and dealiased
//! pointwise products.
//!
//! Derivatives are diagonal in Fourier space. The first-derivative symbol is
//! set to zero at the unpaired highest frequency `k_i = N/2` (which has no
//! conjugate partner on an even grid) so that curls, gradients and divergences
//! of real fields stay real; the Laplacian keeps its full `−|k|²` symbol, which
//! is even and therefore already realness-safe. None of this affects dynamics:
//! states live inside the dealias band, far below `N/2`.
//!
//! Products are evaluated pseudo-spectrally. Both operands and the result are
//! restricted to the alias-safe band `|k_i| ≤ ⌈N/3⌉ − 1` (see
//! [`Grid::dealias_band`]); with that restriction the retained coefficients of
//! a quadratic product are the *exact* convolution of the operands — aliased
//! images cannot reach them. Exactness of retained products is what makes the
//! semi-discrete energy identity hold to roundoff.

use num_complex::Complex64;

use crate::fft;
use crate::field::{FieldError, ScalarField, SpectralField};
use crate::grid::Grid;

/// First-derivative symbol along axis `a` for FFT slot `i`: `i·k_a`, with the
/// unpaired Nyquist slot zeroed. Returns the real factor `k_a` (the `i` is
/// applied by the caller as a complex rotation).
#[inline]
fn deriv_factor(grid: &Grid, slot: usize) -> f64 {
    if slot == grid.resolution() / 2 {
        0.0
    } else {
        grid.freq_step() * grid.int_freq(slot) as f64
    }
}

/// Wavevector with the first-derivative convention (Nyquist slots zeroed).
#[inline]
fn deriv_wavevector(grid: &Grid, m: usize) -> [f64; 3] {
    let idx = grid.decode(m);
    let mut k = [0.0; 3];
    for a in 0..grid.dim() {
        k[a] = deriv_factor(grid, idx[a]);
    }
    k
}

/// Curl `∇×f`, spectrally: `(∇×f)̂ = i k × f̂`.
pub fn curl(f: &SpectralField) -> SpectralField {
    let grid = f.grid();
    let mut out = SpectralField::zeros(grid);
    for m in 0..grid.modes() {
        let k = deriv_wavevector(&grid, m);
        let fx = f.comp(0)[m];
        let fy = f.comp(1)[m];
        let fz = f.comp(2)[m];
        let i = Complex64::new(0.0, 1.0);
        out.comp_mut(0)[m] = i * (k[1] * fz - k[2] * fy);
        out.comp_mut(1)[m] = i * (k[2] * fx - k[0] * fz);
        out.comp_mut(2)[m] = i * (k[0] * fy - k[1] * fx);
    }
    out
}

/// Laplacian `Δf`, spectrally `−|k|² f̂` (full symbol, including Nyquist).
pub fn laplacian(f: &SpectralField) -> SpectralField {
    let grid = f.grid();
    let mut out = f.clone();
    for c in 0..3 {
        let slab = out.comp_mut(c);
        for (m, v) in slab.iter_mut().enumerate() {
            *v *= -grid.k_squared(m);
        }
    }
    out
}

/// Divergence `∇·f` as a scalar field: `i k·f̂`.
pub fn divergence(f: &SpectralField) -> ScalarField {
    let grid = f.grid();
    let mut out = ScalarField::zeros(grid);
    for m in 0..grid.modes() {
        let k = deriv_wavevector(&grid, m);
        let d = k[0] * f.comp(0)[m] + k[1] * f.comp(1)[m] + k[2] * f.comp(2)[m];
        out.coeffs_mut()[m] = Complex64::new(0.0, 1.0) * d;
    }
    out
}

/// Gradient of a scalar: `(∇s)̂ = i k ŝ`.
pub fn gradient(s: &ScalarField) -> SpectralField {
    let grid = s.grid();
    let mut out = SpectralField::zeros(grid);
    for m in 0..grid.modes() {
        let k = deriv_wavevector(&grid, m);
        let v = Complex64::new(0.0, 1.0) * s.coeffs()[m];
        out.comp_mut(0)[m] = k[0] * v;
        out.comp_mut(1)[m] = k[1] * v;
        out.comp_mut(2)[m] = k[2] * v;
    }
    out
}

/// Maximum absolute divergence coefficient, `max_k |k·f̂(k)|`.
///
/// Zero (to roundoff) for fields produced by [`leray`]; used as the
/// incompressibility audit.
pub fn div_residual(f: &SpectralField) -> f64 {
    let grid = f.grid();
    let mut worst = 0.0f64;
    for m in 0..grid.modes() {
        let k = deriv_wavevector(&grid, m);
        let d = k[0] * f.comp(0)[m] + k[1] * f.comp(1)[m] + k[2] * f.comp(2)[m];
        worst = worst.max(d.norm());
    }
    worst
}

/// Leray projection onto divergence-free fields: `f̂ ← f̂ − k (k·f̂)/|k|²`.
///
/// The zero mode (the box average) is untouched — constants are already
/// divergence-free.
pub fn leray(f: &SpectralField) -> SpectralField {
    let mut out = f.clone();
    leray_in_place(&mut out);
    out
}

pub fn leray_in_place(f: &mut SpectralField) {
    let grid = f.grid();
    for m in 0..grid.modes() {
        let k = grid.wavevector(m);
        let k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        if k2 == 0.0 {
            continue;
        }
        let dot = k[0] * f.comp(0)[m] + k[1] * f.comp(1)[m] + k[2] * f.comp(2)[m];
        let proj = dot / k2;
        f.comp_mut(0)[m] -= k[0] * proj;
        f.comp_mut(1)[m] -= k[1] * proj;
        f.comp_mut(2)[m] -= k[2] * proj;
    }
}

/// Sharp Fourier cutoff to the closed ball `|k| ≤ k_max` (physical wavenumbers).
///
/// Idempotent; commutes with every other Fourier multiplier here, including
/// [`leray`]. A `k_max` at or above the grid's largest representable `|k|`
/// leaves the field unchanged.
pub fn cutoff(f: &SpectralField, k_max: f64) -> SpectralField {
    let mut out = f.clone();
    cutoff_in_place(&mut out, k_max);
    out
}

pub fn cutoff_in_place(f: &mut SpectralField, k_max: f64) {
    let grid = f.grid();
    let limit = k_max * k_max;
    for m in 0..grid.modes() {
        if grid.k_squared(m) > limit {
            for c in 0..3 {
                f.comp_mut(c)[m] = Complex64::default();
            }
        }
    }
}

/// Zero every mode outside the alias-safe product band.
pub fn dealias_in_place(f: &mut SpectralField) {
    let grid = f.grid();
    for m in 0..grid.modes() {
        if !grid.dealias_keep(m) {
            for c in 0..3 {
                f.comp_mut(c)[m] = Complex64::default();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Pseudo-spectral products
// ---------------------------------------------------------------------------

/// A vector field held as real samples, ready for pointwise arithmetic.
///
/// Produced from dealias-masked coefficients so that any quadratic combination
/// of `PhysField`s has alias-free retained modes.
pub struct PhysField {
    grid: Grid,
    comps: [Vec<f64>; 3],
}

impl PhysField {
    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn comp(&self, c: usize) -> &[f64] {
        &self.comps[c]
    }
}

/// Inverse-transform a field for product formation (mask applied first).
pub fn to_phys(f: &SpectralField) -> PhysField {
    let grid = f.grid();
    let masked = {
        let mut g = f.clone();
        dealias_in_place(&mut g);
        g
    };
    PhysField {
        grid,
        comps: [masked.to_physical(0), masked.to_physical(1), masked.to_physical(2)],
    }
}

/// Forward-transform three real sample slabs into a masked spectral field.
fn phys_to_spectral(grid: Grid, comps: [Vec<f64>; 3]) -> SpectralField {
    let mut out = SpectralField::zeros(grid);
    for (c, samples) in comps.into_iter().enumerate() {
        let slab = out.comp_mut(c);
        for (dst, s) in slab.iter_mut().zip(&samples) {
            *dst = Complex64::new(*s, 0.0);
        }
        fft::forward(&grid, slab);
    }
    dealias_in_place(&mut out);
    out
}

/// Which bilinear pointwise operation to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    /// `(f·∇)g` — advective derivative of `g` along `f`.
    Advection,
    /// `f × g` — pointwise cross product.
    Cross,
    /// `f₀ · g` — scale every component of `g` by component 0 of `f`
    /// (scalar-times-field products for the inequality probes).
    Scale,
}

/// Dealiased pointwise product. Both operands are masked to the alias-safe
/// band before transforming, so the retained output coefficients equal the
/// exact convolution whenever the operands already live inside the band.
pub fn pointwise_product(
    f: &SpectralField,
    g: &SpectralField,
    kind: ProductKind,
) -> Result<SpectralField, FieldError> {
    if f.grid() != g.grid() {
        return Err(FieldError::GridMismatch(f.grid(), g.grid()));
    }
    let grid = f.grid();
    match kind {
        ProductKind::Advection => {
            let fp = to_phys(f);
            // ∂_j g_i in physical space, for every needed axis.
            let dim = grid.dim();
            let mut g_masked = g.clone();
            dealias_in_place(&mut g_masked);
            let modes = grid.modes();
            let mut out = [vec![0.0; modes], vec![0.0; modes], vec![0.0; modes]];
            let mut buf = vec![Complex64::default(); modes];
            for i in 0..3 {
                for j in 0..dim {
                    // (∂_j g_i)̂ = i k_j ĝ_i
                    for (m, dst) in buf.iter_mut().enumerate() {
                        let idx = grid.decode(m);
                        let kj = deriv_factor(&grid, idx[j]);
                        *dst = Complex64::new(0.0, kj) * g_masked.comp(i)[m];
                    }
                    fft::inverse(&grid, &mut buf);
                    let fj = fp.comp(j);
                    for m in 0..modes {
                        out[i][m] += fj[m] * buf[m].re;
                    }
                }
            }
            Ok(phys_to_spectral(grid, out))
        }
        ProductKind::Cross => {
            let a = to_phys(f);
            let b = to_phys(g);
            Ok(cross_phys(&a, &b))
        }
        ProductKind::Scale => {
            let a = to_phys(f);
            let b = to_phys(g);
            let modes = grid.modes();
            let mut out = [vec![0.0; modes], vec![0.0; modes], vec![0.0; modes]];
            for c in 0..3 {
                let (s, gc, oc) = (a.comp(0), b.comp(c), &mut out[c]);
                for m in 0..modes {
                    oc[m] = s[m] * gc[m];
                }
            }
            Ok(phys_to_spectral(grid, out))
        }
    }
}

/// `a × b` from physical-space operands.
pub fn cross_phys(a: &PhysField, b: &PhysField) -> SpectralField {
    let grid = a.grid;
    let modes = grid.modes();
    let mut out = [vec![0.0; modes], vec![0.0; modes], vec![0.0; modes]];
    let (a0, a1, a2) = (a.comp(0), a.comp(1), a.comp(2));
    let (b0, b1, b2) = (b.comp(0), b.comp(1), b.comp(2));
    for m in 0..modes {
        out[0][m] = a1[m] * b2[m] - a2[m] * b1[m];
        out[1][m] = a2[m] * b0[m] - a0[m] * b2[m];
        out[2][m] = a0[m] * b1[m] - a1[m] * b0[m];
    }
    phys_to_spectral(grid, out)
}

/// Self-advection `2(v·∇)v` via the symmetrized divergence form — callers
/// halve the result. Requires `div v = 0`, which every dynamical state
/// satisfies by projection.
pub fn self_advection_phys(v: &PhysField) -> SpectralField {
    sym_advection_phys(v, v)
}

/// The six distinct entries of the symmetric tensor `a_j b_i + b_j a_i`.
fn sym_products(a: &PhysField, b: &PhysField) -> [Vec<f64>; 6] {
    let modes = a.grid.modes();
    // Index pairs (i,j) with i ≤ j: 00, 01, 02, 11, 12, 22.
    let mut w: [Vec<f64>; 6] = std::array::from_fn(|_| vec![0.0; modes]);
    let pairs = [(0usize, 0usize), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    for (slot, &(i, j)) in pairs.iter().enumerate() {
        let (ai, aj) = (a.comp(i), a.comp(j));
        let (bi, bj) = (b.comp(i), b.comp(j));
        let wm = &mut w[slot];
        for m in 0..modes {
            wm[m] = aj[m] * bi[m] + bj[m] * ai[m];
        }
    }
    w
}

/// Symmetrized advection `(a·∇)b + (b·∇)a` in divergence form
/// `∂_j(a_j b_i + b_j a_i)`; requires `div a = div b = 0`. Six forward
/// transforms cover both advective terms at once.
pub fn sym_advection_phys(a: &PhysField, b: &PhysField) -> SpectralField {
    let grid = a.grid;
    let modes = grid.modes();
    let w = sym_products(a, b);
    // Transform the six distinct products, then contract with i k_j.
    let w_hat: Vec<Vec<Complex64>> = w
        .into_iter()
        .map(|samples| {
            let mut buf: Vec<Complex64> =
                samples.into_iter().map(|s| Complex64::new(s, 0.0)).collect();
            fft::forward(&grid, &mut buf);
            buf
        })
        .collect();
    let slot = |i: usize, j: usize| -> usize {
        match (i.min(j), i.max(j)) {
            (0, 0) => 0,
            (0, 1) => 1,
            (0, 2) => 2,
            (1, 1) => 3,
            (1, 2) => 4,
            (2, 2) => 5,
            _ => unreachable!(),
        }
    };
    let mut out = SpectralField::zeros(grid);
    let dim = grid.dim();
    for m in 0..modes {
        let idx = grid.decode(m);
        let mut k = [0.0; 3];
        for a_ax in 0..dim {
            k[a_ax] = deriv_factor(&grid, idx[a_ax]);
        }
        for i in 0..3 {
            let mut acc = Complex64::default();
            for j in 0..dim {
                acc += Complex64::new(0.0, k[j]) * w_hat[slot(i, j)][m];
            }
            out.comp_mut(i)[m] = acc;
        }
    }
    dealias_in_place(&mut out);
    out
}
