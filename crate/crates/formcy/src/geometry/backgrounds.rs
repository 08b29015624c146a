//! Background metric construction: flat, conformal and Kähler test metrics,
//! and the rejection sampler for admissible backgrounds (positive definite
//! with margin, astheno-Ricci ≤ 0 pointwise).

use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::forms::{ExteriorAlgebra, HermitianMatrix};

use super::fields::{HermitianField, ScalarField};
use super::grid::TorusGrid;
use super::GeometryError;

/// Constant multiple of the identity.
pub fn flat(grid: &Arc<TorusGrid>, scale: f64) -> HermitianField {
    HermitianField::constant(grid, &HermitianMatrix::identity(grid.n()).scale(scale))
}

/// Conformal metric e^{u}·id with u a low-mode periodic function of the
/// first active coordinate.
pub fn conformal(grid: &Arc<TorusGrid>, amplitude: f64) -> HermitianField {
    let k = grid.active().first().copied().unwrap_or(0);
    let u = conformal_factor(grid, amplitude, k);
    HermitianField::from_fn(grid, |idx| {
        HermitianMatrix::identity(grid.n()).scale(u.data()[idx].re.exp())
    })
}

/// The conformal exponent u used by [`conformal`].
pub fn conformal_factor(grid: &Arc<TorusGrid>, amplitude: f64, coord: usize) -> ScalarField {
    ScalarField::from_real_fn(grid, |c| {
        amplitude * ((c[2 * coord]).cos() + 0.5 * (c[2 * coord + 1]).sin())
    })
}

/// Kähler test metric id + i∂∂̄ρ for a low-mode potential ρ, rescaled until
/// positive definite with margin 0.2. The result satisfies dα = 0 exactly.
pub fn kahler(grid: &Arc<TorusGrid>, amplitude: f64, seed: u64) -> HermitianField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rho = random_low_mode_scalar(grid, &mut rng, amplitude);
    let mut amp = 1.0;
    loop {
        let f = kahler_from_potential(grid, &rho.scale(Complex64::new(amp, 0.0)));
        if f.is_positive_definite(0.2) {
            return f;
        }
        amp *= 0.5;
    }
}

/// id + i∂∂̄ρ.
pub fn kahler_from_potential(grid: &Arc<TorusGrid>, rho: &ScalarField) -> HermitianField {
    let n = grid.n();
    let hess = hessian(rho, n);
    HermitianField::from_fn(grid, |idx| {
        let mut m = HermitianMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, m.get(i, j) + hess[i * n + j].data()[idx]);
            }
        }
        m.hermitize()
    })
}

fn hessian(f: &ScalarField, n: usize) -> Vec<ScalarField> {
    let mut out = Vec::with_capacity(n * n);
    let grads: Vec<ScalarField> = (0..n).map(|i| f.d_holo(i)).collect();
    for i in 0..n {
        for j in 0..n {
            out.push(grads[i].d_anti(j));
        }
    }
    out
}

fn random_low_mode_scalar(
    grid: &Arc<TorusGrid>,
    rng: &mut ChaCha8Rng,
    amplitude: f64,
) -> ScalarField {
    let active = grid.active().to_vec();
    let mut modes = Vec::new();
    for _ in 0..3 {
        let coeff = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let freqs: Vec<(usize, i64, i64)> = active
            .iter()
            .map(|&a| (a, rng.gen_range(-1..=1i64), rng.gen_range(-1..=1i64)))
            .collect();
        modes.push((coeff, freqs));
    }
    ScalarField::from_fn(grid, |idx| {
        let c = grid.coords(idx);
        let mut v = Complex64::default();
        for (coeff, freqs) in &modes {
            let mut phase = 0.0;
            for &(a, fx, fy) in freqs {
                phase += fx as f64 * c[2 * a] + fy as f64 * c[2 * a + 1];
            }
            v += coeff * Complex64::new(0.0, phase).exp();
        }
        Complex64::new(amplitude * v.re, 0.0)
    })
}

/// A (1,0)-potential built from random low modes; the derived Hermitian
/// perturbation h_{jk̄} = ∂_j γ̄_k + ∂_k̄ γ_j satisfies i∂∂̄h = 0 identically,
/// which kills the linear response of the astheno-Ricci curvature.
pub fn gauge_perturbation(
    grid: &Arc<TorusGrid>,
    rng: &mut ChaCha8Rng,
    amplitude: f64,
) -> HermitianField {
    let n = grid.n();
    let gamma: Vec<ScalarField> = (0..n)
        .map(|_| random_low_mode_scalar(grid, rng, amplitude))
        .collect();
    let mut comps: Vec<ScalarField> = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            // ∂_j conj(γ_k) + ∂_k̄ γ_j
            let conj_k = ScalarField::from_fn(grid, |idx| gamma[k].data()[idx].conj());
            comps.push(conj_k.d_holo(j).add(&gamma[j].d_anti(k)));
        }
    }
    HermitianField::from_fn(grid, |idx| {
        HermitianMatrix::from_fn(n, |i, j| comps[i * n + j].data()[idx]).hermitize()
    })
}

/// Outcome of the admissibility screen for a candidate background.
#[derive(Debug, Clone)]
pub struct ScreenReport {
    /// min over the grid of the smallest eigenvalue of α (absolute).
    pub pd_margin: f64,
    /// max over the grid of the largest eigenvalue of the astheno-Ricci
    /// curvature (oracle evaluation).
    pub astheno_max_eigenvalue: f64,
    /// Grid index where the maximum is attained.
    pub astheno_argmax: usize,
    pub pass: bool,
}

/// Screen a background against the solvability hypothesis: positive
/// definiteness with margin and astheno-Ricci ≤ tol pointwise.
pub fn admissibility_screen(
    algebra: &ExteriorAlgebra,
    alpha: &HermitianField,
    pd_margin: f64,
    astheno_tol: f64,
) -> Result<ScreenReport, GeometryError> {
    let pd = alpha.min_eigenvalue();
    if pd <= pd_margin {
        return Ok(ScreenReport {
            pd_margin: pd,
            astheno_max_eigenvalue: f64::INFINITY,
            astheno_argmax: 0,
            pass: false,
        });
    }
    let b = astheno_ricci_oracle(algebra, alpha)?;
    // eigenvalues measured against α itself (sign structure is what matters)
    let mut worst = f64::NEG_INFINITY;
    let mut argmax = 0;
    for idx in 0..alpha.grid().len() {
        let ge = crate::linalg::generalized_eigen(&b.at(idx).to_na(), &alpha.at(idx).to_na())?;
        if ge.values[0] > worst {
            worst = ge.values[0];
            argmax = idx;
        }
    }
    Ok(ScreenReport {
        pd_margin: pd,
        astheno_max_eigenvalue: worst,
        astheno_argmax: argmax,
        pass: worst <= astheno_tol,
    })
}

use super::astheno::astheno_ricci_oracle;

/// Options for the admissible-background rejection sampler.
#[derive(Debug, Clone)]
pub struct SamplerOptions {
    pub amplitude: f64,
    pub kahler_amplitude: f64,
    pub pd_margin: f64,
    pub astheno_tol: f64,
    pub max_draws: usize,
}

impl Default for SamplerOptions {
    fn default() -> Self {
        Self {
            amplitude: 0.1,
            kahler_amplitude: 0.05,
            pd_margin: 0.2,
            astheno_tol: 1e-10,
            max_draws: 200,
        }
    }
}

/// Rejection-sample an admissible background α = id + gauge + Kähler
/// perturbations. Returns the accepted field, its screen report and the
/// number of draws consumed.
pub fn sample_admissible(
    algebra: &ExteriorAlgebra,
    grid: &Arc<TorusGrid>,
    seed: u64,
    opts: &SamplerOptions,
) -> Result<Option<(HermitianField, ScreenReport, usize)>, GeometryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for draw in 1..=opts.max_draws {
        let gauge = gauge_perturbation(grid, &mut rng, opts.amplitude);
        let rho = random_low_mode_scalar(grid, &mut rng, opts.kahler_amplitude);
        let kf = kahler_from_potential(grid, &rho);
        let candidate = kf.add(&gauge);
        if !candidate.is_positive_definite(opts.pd_margin) {
            continue;
        }
        let report = admissibility_screen(algebra, &candidate, opts.pd_margin, opts.astheno_tol)?;
        if report.pass {
            return Ok(Some((candidate, report, draw)));
        }
    }
    Ok(None)
}
