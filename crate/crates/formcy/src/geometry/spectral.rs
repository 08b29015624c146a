//! Fourier-spectral differentiation on periodic grids.
//!
//! Derivatives are exact for band-limited fields. First-derivative symbols
//! zero the Nyquist mode; the 2/3-rule dealiasing filter zeroes every mode
//! with |frequency| above floor(N/3) on each axis and is applied before
//! differentiating pointwise products of fields.

use num_complex::Complex64;

use super::grid::TorusGrid;

/// Runs `f` on every line of the array along `axis`, passing the base offset;
/// elements of a line are `stride` apart.
fn for_each_line(grid: &TorusGrid, axis: usize, mut f: impl FnMut(usize)) {
    let line_len = grid.shape()[axis];
    let stride = grid.stride(axis);
    let block = line_len * stride;
    let nblocks = grid.len() / block;
    for b in 0..nblocks {
        for i in 0..stride {
            f(b * block + i);
        }
    }
}

/// In-place FFT along one axis. `inverse` applies 1/N normalization.
fn fft_axis(grid: &TorusGrid, data: &mut [Complex64], axis: usize, inverse: bool) {
    let line_len = grid.shape()[axis];
    if line_len == 1 {
        return;
    }
    let stride = grid.stride(axis);
    let (fwd, inv) = grid.fft_pair(line_len);
    let fft = if inverse { inv } else { fwd };
    let mut line = vec![Complex64::default(); line_len];
    let scale = 1.0 / line_len as f64;
    for_each_line(grid, axis, |base| {
        for m in 0..line_len {
            line[m] = data[base + m * stride];
        }
        fft.process(&mut line);
        if inverse {
            for m in 0..line_len {
                data[base + m * stride] = line[m] * scale;
            }
        } else {
            for m in 0..line_len {
                data[base + m * stride] = line[m];
            }
        }
    });
}

/// Multiply mode m along `axis` by `symbol(m)`.
fn apply_axis_symbol(
    grid: &TorusGrid,
    data: &mut [Complex64],
    axis: usize,
    symbol: impl Fn(usize) -> Complex64,
) {
    let line_len = grid.shape()[axis];
    let stride = grid.stride(axis);
    let weights: Vec<Complex64> = (0..line_len).map(symbol).collect();
    for_each_line(grid, axis, |base| {
        for m in 0..line_len {
            data[base + m * stride] *= weights[m];
        }
    });
}

/// ∂/∂(real direction d), in place. A derivative along an inactive
/// direction zeroes the buffer (constant fields).
pub(crate) fn derivative_real_dir(grid: &TorusGrid, data: &mut [Complex64], dir: usize) {
    match grid.axis_of_dir(dir) {
        None => data.iter_mut().for_each(|v| *v = Complex64::default()),
        Some(axis) => {
            let nres = grid.shape()[axis];
            fft_axis(grid, data, axis, false);
            apply_axis_symbol(grid, data, axis, |m| {
                if m == nres / 2 {
                    Complex64::default()
                } else {
                    Complex64::new(0.0, grid.wavenumber(axis, m))
                }
            });
            fft_axis(grid, data, axis, true);
        }
    }
}

/// Holomorphic or antiholomorphic derivative along complex coordinate k:
/// ∂_k = ½(∂x − i∂y), ∂_k̄ = ½(∂x + i∂y).
pub(crate) fn derivative_complex(
    grid: &TorusGrid,
    data: &[Complex64],
    coord: usize,
    anti: bool,
) -> Vec<Complex64> {
    let mut dx = data.to_vec();
    derivative_real_dir(grid, &mut dx, 2 * coord);
    let mut dy = data.to_vec();
    derivative_real_dir(grid, &mut dy, 2 * coord + 1);
    let iy = if anti {
        Complex64::new(0.0, 0.5)
    } else {
        Complex64::new(0.0, -0.5)
    };
    dx.iter_mut().zip(dy).for_each(|(x, y)| {
        *x = 0.5 * *x + iy * y;
    });
    dx
}

/// 2/3-rule dealiasing: zero every mode with |freq| > floor(N/3) per axis.
pub(crate) fn dealias_23(grid: &TorusGrid, data: &mut [Complex64]) {
    for axis in 0..grid.shape().len() {
        let nres = grid.shape()[axis];
        let keep = nres / 3;
        fft_axis(grid, data, axis, false);
        apply_axis_symbol(grid, data, axis, |m| {
            let f = TorusGrid::signed_freq(m, nres).unsigned_abs() as usize;
            if f > keep || m == nres / 2 {
                Complex64::default()
            } else {
                Complex64::new(1.0, 0.0)
            }
        });
        fft_axis(grid, data, axis, true);
    }
}

/// Fraction of spectral energy at or above 2/3 of the Nyquist frequency on
/// any axis. A proxy for periodic smoothness of resolved fields.
pub(crate) fn tail_energy_fraction(grid: &TorusGrid, data: &[Complex64]) -> f64 {
    if grid.shape().is_empty() {
        return 0.0;
    }
    let mut hat = data.to_vec();
    for axis in 0..grid.shape().len() {
        fft_axis(grid, &mut hat, axis, false);
    }
    let mut total = 0.0;
    let mut tail = 0.0;
    for (idx, v) in hat.iter().enumerate() {
        let e = v.norm_sqr();
        total += e;
        // decompose idx into per-axis modes
        let mut rest = idx;
        let mut in_tail = false;
        for axis in 0..grid.shape().len() {
            let m = rest / grid.stride(axis);
            rest %= grid.stride(axis);
            let nres = grid.shape()[axis];
            let f = TorusGrid::signed_freq(m, nres).unsigned_abs() as usize;
            if 3 * f >= nres {
                in_tail = true;
            }
        }
        if in_tail {
            tail += e;
        }
    }
    if total == 0.0 {
        0.0
    } else {
        tail / total
    }
}
