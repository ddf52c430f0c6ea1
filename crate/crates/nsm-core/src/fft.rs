//! Multidimensional FFT kernels with the Parseval-friendly normalization.
//!
//! Coefficients are stored so that `Σ_k |c_k|² = ∫ |f|² dx` exactly:
//! `forward` multiplies the raw DFT by `L^{d/2}/N^d`, `inverse` undoes it.
//! A coefficient of the analytic expansion `f = Σ f̂_k e^{ik·x}` therefore
//! appears as `c_k = f̂_k · L^{d/2}`.
//!
//! Axis transforms run on contiguous lines: the last axis is processed in
//! place, other axes through a reordered scratch buffer so the underlying
//! 1-D kernels always see unit stride.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::grid::Grid;

/// Process-wide plan cache; plans are immutable and shared across threads.
fn plan(n: usize, direction: FftDirection) -> Arc<dyn Fft<f64>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, direction == FftDirection::Forward);
    let mut map = cache.lock().expect("fft plan cache poisoned");
    map.entry(key)
        .or_insert_with(|| FftPlanner::new().plan_fft(n, direction))
        .clone()
}

/// Transform every axis of a flat `[N]^d` slab, in place.
fn transform_all_axes(grid: &Grid, data: &mut [Complex64], direction: FftDirection) {
    let n = grid.resolution();
    let dim = grid.dim();
    let modes = grid.modes();
    debug_assert_eq!(data.len(), modes);

    let fft = plan(n, direction);
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];

    // Last axis: lines are already contiguous; one batched call does them all.
    fft.process_with_scratch(data, &mut scratch);

    // Remaining axes: reorder so the target axis becomes contiguous, batch, restore.
    let mut buf = vec![Complex64::default(); modes];
    for axis in 0..dim - 1 {
        let stride = n.pow((dim - 1 - axis) as u32);
        let lines = modes / n;
        // Lines are enumerated by (block, offset): block strides past the axis,
        // offset walks the faster axes under it.
        let blocks = modes / (n * stride);
        let mut line = 0;
        for b in 0..blocks {
            let base_b = b * n * stride;
            for o in 0..stride {
                let base = base_b + o;
                let dst = line * n;
                for t in 0..n {
                    buf[dst + t] = data[base + t * stride];
                }
                line += 1;
            }
        }
        debug_assert_eq!(line, lines);
        fft.process_with_scratch(&mut buf, &mut scratch);
        let mut line = 0;
        for b in 0..blocks {
            let base_b = b * n * stride;
            for o in 0..stride {
                let base = base_b + o;
                let src = line * n;
                for t in 0..n {
                    data[base + t * stride] = buf[src + t];
                }
                line += 1;
            }
        }
    }
}

/// Real-space samples → spectral coefficients (in place), unitary normalization.
pub fn forward(grid: &Grid, data: &mut [Complex64]) {
    transform_all_axes(grid, data, FftDirection::Forward);
    let scale = grid.length().powi(grid.dim() as i32).sqrt() / grid.modes() as f64;
    for c in data.iter_mut() {
        *c *= scale;
    }
}

/// Spectral coefficients → real-space samples (in place).
pub fn inverse(grid: &Grid, data: &mut [Complex64]) {
    transform_all_axes(grid, data, FftDirection::Inverse);
    let scale = 1.0 / grid.length().powi(grid.dim() as i32).sqrt();
    for c in data.iter_mut() {
        *c *= scale;
    }
}
