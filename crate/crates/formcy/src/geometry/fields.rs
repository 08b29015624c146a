//! Periodic fields on a torus grid: scalars, Hermitian matrices and
//! multi-index forms, all immutable-by-convention once built.

use std::sync::Arc;

use num_complex::Complex64;

use crate::forms::{binomial, ExteriorAlgebra, FormsError, HermitianMatrix, MultiIndexForm};
use crate::linalg;

use super::grid::TorusGrid;
use super::spectral;

/// A complex scalar field on the grid.
#[derive(Clone)]
pub struct ScalarField {
    grid: Arc<TorusGrid>,
    data: Vec<Complex64>,
}

impl ScalarField {
    pub fn zeros(grid: &Arc<TorusGrid>) -> Self {
        Self {
            grid: grid.clone(),
            data: vec![Complex64::default(); grid.len()],
        }
    }

    pub fn constant(grid: &Arc<TorusGrid>, v: f64) -> Self {
        Self {
            grid: grid.clone(),
            data: vec![Complex64::new(v, 0.0); grid.len()],
        }
    }

    pub fn from_fn(grid: &Arc<TorusGrid>, f: impl Fn(usize) -> Complex64) -> Self {
        Self {
            grid: grid.clone(),
            data: (0..grid.len()).map(f).collect(),
        }
    }

    pub fn from_real_fn(grid: &Arc<TorusGrid>, f: impl Fn(&[f64]) -> f64) -> Self {
        Self::from_fn(grid, |idx| Complex64::new(f(&grid.coords(idx)), 0.0))
    }

    pub fn from_data(grid: &Arc<TorusGrid>, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), grid.len());
        Self {
            grid: grid.clone(),
            data,
        }
    }

    pub fn grid(&self) -> &Arc<TorusGrid> {
        &self.grid
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// ∂ along complex coordinate `k`.
    pub fn d_holo(&self, k: usize) -> Self {
        Self {
            grid: self.grid.clone(),
            data: spectral::derivative_complex(&self.grid, &self.data, k, false),
        }
    }

    /// ∂̄ along complex coordinate `k`.
    pub fn d_anti(&self, k: usize) -> Self {
        Self {
            grid: self.grid.clone(),
            data: spectral::derivative_complex(&self.grid, &self.data, k, true),
        }
    }

    /// ∂ along a real direction.
    pub fn d_real(&self, dir: usize) -> Self {
        let mut data = self.data.clone();
        spectral::derivative_real_dir(&self.grid, &mut data, dir);
        Self {
            grid: self.grid.clone(),
            data,
        }
    }

    pub fn dealias_23(&self) -> Self {
        let mut data = self.data.clone();
        spectral::dealias_23(&self.grid, &mut data);
        Self {
            grid: self.grid.clone(),
            data,
        }
    }

    pub fn tail_energy_fraction(&self) -> f64 {
        spectral::tail_energy_fraction(&self.grid, &self.data)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn shift(&self, s: f64) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a += s;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a *= b;
        }
        out
    }

    pub fn exp_re(&self) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = Complex64::new(a.re.exp(), 0.0);
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }

    pub fn sup_re(&self) -> f64 {
        self.data.iter().map(|v| v.re).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn inf_re(&self) -> f64 {
        self.data.iter().map(|v| v.re).fold(f64::INFINITY, f64::min)
    }

    /// Discard imaginary parts (used after assembling analytically-real
    /// quantities from complex spectral ops).
    pub fn into_real(mut self) -> Self {
        for a in self.data.iter_mut() {
            *a = Complex64::new(a.re, 0.0);
        }
        self
    }
}

/// One Hermitian n×n matrix per grid point.
#[derive(Clone)]
pub struct HermitianField {
    grid: Arc<TorusGrid>,
    n: usize,
    /// point-major: data[pt · n² + i·n + j]
    data: Vec<Complex64>,
}

impl HermitianField {
    pub fn zeros(grid: &Arc<TorusGrid>) -> Self {
        let n = grid.n();
        Self {
            grid: grid.clone(),
            n,
            data: vec![Complex64::default(); grid.len() * n * n],
        }
    }

    pub fn constant(grid: &Arc<TorusGrid>, m: &HermitianMatrix) -> Self {
        let n = grid.n();
        assert_eq!(m.n(), n);
        let mut data = Vec::with_capacity(grid.len() * n * n);
        for _ in 0..grid.len() {
            data.extend_from_slice(m.data());
        }
        Self {
            grid: grid.clone(),
            n,
            data,
        }
    }

    pub fn identity(grid: &Arc<TorusGrid>) -> Self {
        Self::constant(grid, &HermitianMatrix::identity(grid.n()))
    }

    pub fn from_fn(grid: &Arc<TorusGrid>, f: impl Fn(usize) -> HermitianMatrix) -> Self {
        let n = grid.n();
        let mut data = Vec::with_capacity(grid.len() * n * n);
        for idx in 0..grid.len() {
            let m = f(idx);
            assert_eq!(m.n(), n);
            data.extend_from_slice(m.data());
        }
        Self {
            grid: grid.clone(),
            n,
            data,
        }
    }

    pub fn grid(&self) -> &Arc<TorusGrid> {
        &self.grid
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, idx: usize) -> HermitianMatrix {
        let nn = self.n * self.n;
        HermitianMatrix::from_row_major(self.n, self.data[idx * nn..(idx + 1) * nn].to_vec())
    }

    pub fn set_at(&mut self, idx: usize, m: &HermitianMatrix) {
        let nn = self.n * self.n;
        self.data[idx * nn..(idx + 1) * nn].copy_from_slice(m.data());
    }

    #[inline]
    pub fn entry(&self, idx: usize, i: usize, j: usize) -> Complex64 {
        self.data[idx * self.n * self.n + i * self.n + j]
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Pointwise scale by a real scalar field.
    pub fn scale_field(&self, s: &ScalarField) -> Self {
        let mut out = self.clone();
        let nn = self.n * self.n;
        for idx in 0..self.grid.len() {
            let w = s.data()[idx];
            for v in out.data[idx * nn..(idx + 1) * nn].iter_mut() {
                *v *= w;
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn hermitian_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for idx in 0..self.grid.len() {
            worst = worst.max(self.at(idx).hermitian_defect());
        }
        worst
    }

    /// Extract one matrix component as a scalar field.
    pub fn component(&self, i: usize, j: usize) -> ScalarField {
        let nn = self.n * self.n;
        ScalarField::from_fn(&self.grid, |idx| self.data[idx * nn + i * self.n + j])
    }

    /// Componentwise holomorphic derivative.
    pub fn d_holo(&self, k: usize) -> Self {
        self.map_components(|f| f.d_holo(k))
    }

    pub fn d_anti(&self, k: usize) -> Self {
        self.map_components(|f| f.d_anti(k))
    }

    fn map_components(&self, op: impl Fn(&ScalarField) -> ScalarField) -> Self {
        let mut out = self.clone();
        let nn = self.n * self.n;
        for i in 0..self.n {
            for j in 0..self.n {
                let c = op(&self.component(i, j));
                for idx in 0..self.grid.len() {
                    out.data[idx * nn + i * self.n + j] = c.data()[idx];
                }
            }
        }
        out
    }

    /// Smallest eigenvalue over all grid points (plain, not metric-relative).
    pub fn min_eigenvalue(&self) -> f64 {
        (0..self.grid.len())
            .map(|idx| self.at(idx).min_eigenvalue())
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest eigenvalue over all grid points together with its location.
    pub fn max_eigenvalue_with_location(&self) -> (f64, usize) {
        let mut best = (f64::NEG_INFINITY, 0);
        for idx in 0..self.grid.len() {
            let vals = self.at(idx).eigenvalues();
            if vals[0] > best.0 {
                best = (vals[0], idx);
            }
        }
        best
    }

    /// Smallest generalized eigenvalue of (self, metric) over the grid.
    pub fn min_eigenvalue_vs(&self, metric: &HermitianField) -> Result<f64, linalg::LinalgError> {
        let mut worst = f64::INFINITY;
        for idx in 0..self.grid.len() {
            let v = linalg::min_generalized_eigenvalue(
                &self.at(idx).to_na(),
                &metric.at(idx).to_na(),
            )?;
            worst = worst.min(v);
        }
        Ok(worst)
    }

    pub fn is_positive_definite(&self, margin: f64) -> bool {
        (0..self.grid.len()).all(|idx| self.at(idx).is_positive_definite(margin))
    }

    /// log det α per point (requires pointwise positive definiteness).
    pub fn log_det(&self) -> Result<ScalarField, linalg::LinalgError> {
        let mut out = ScalarField::zeros(&self.grid);
        for idx in 0..self.grid.len() {
            let ld = linalg::log_det_pd(&self.at(idx).to_na())?;
            out.data_mut()[idx] = Complex64::new(ld, 0.0);
        }
        Ok(out)
    }

    /// The (1,1)-form field i α_{ij̄} dz_i ∧ dz̄_j.
    pub fn to_form_field(&self) -> FormField {
        let mut out = FormField::zeros(&self.grid, 1, 1);
        for idx in 0..self.grid.len() {
            out.set_point(idx, &MultiIndexForm::from_hermitian(&self.at(idx)));
        }
        out
    }

    /// Largest spectral tail fraction over matrix components.
    pub fn tail_energy_fraction(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                worst = worst.max(self.component(i, j).tail_energy_fraction());
            }
        }
        worst
    }
}

/// A field of (p,q)-forms stored point-major with flattened canonical
/// coefficients.
#[derive(Clone)]
pub struct FormField {
    grid: Arc<TorusGrid>,
    p: usize,
    q: usize,
    ncoeff: usize,
    data: Vec<Complex64>,
}

impl FormField {
    pub fn zeros(grid: &Arc<TorusGrid>, p: usize, q: usize) -> Self {
        let n = grid.n();
        let ncoeff = binomial(n, p) * binomial(n, q);
        Self {
            grid: grid.clone(),
            p,
            q,
            ncoeff,
            data: vec![Complex64::default(); grid.len() * ncoeff],
        }
    }

    pub fn grid(&self) -> &Arc<TorusGrid> {
        &self.grid
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn ncoeff(&self) -> usize {
        self.ncoeff
    }

    pub fn point(&self, idx: usize) -> MultiIndexForm {
        let mut f = MultiIndexForm::zero(self.grid.n(), self.p, self.q);
        f.coefficients_mut()
            .copy_from_slice(&self.data[idx * self.ncoeff..(idx + 1) * self.ncoeff]);
        f
    }

    pub fn set_point(&mut self, idx: usize, f: &MultiIndexForm) {
        assert_eq!(f.bidegree(), (self.p, self.q));
        self.data[idx * self.ncoeff..(idx + 1) * self.ncoeff].copy_from_slice(f.coefficients());
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.bidegree(), other.bidegree());
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.bidegree(), other.bidegree());
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Pointwise wedge with another form field.
    pub fn wedge(&self, algebra: &ExteriorAlgebra, other: &Self) -> Result<Self, FormsError> {
        let mut out = FormField::zeros(&self.grid, self.p + other.p, self.q + other.q);
        for idx in 0..self.grid.len() {
            let w = algebra.wedge(&self.point(idx), &other.point(idx))?;
            out.set_point(idx, &w);
        }
        Ok(out)
    }

    /// Pointwise wedge power.
    pub fn wedge_power(&self, algebra: &ExteriorAlgebra, k: usize) -> Result<Self, FormsError> {
        let mut out = FormField::zeros(&self.grid, self.p * k, self.q * k);
        for idx in 0..self.grid.len() {
            let w = algebra.wedge_power(&self.point(idx), k)?;
            out.set_point(idx, &w);
        }
        Ok(out)
    }

    fn coefficient_field(&self, c: usize) -> ScalarField {
        ScalarField::from_fn(&self.grid, |idx| self.data[idx * self.ncoeff + c])
    }

    /// Spectral ∂: (p,q) → (p+1,q).
    pub fn exterior_d_holo(&self, algebra: &ExteriorAlgebra) -> Result<Self, FormsError> {
        self.exterior_d(algebra, false)
    }

    /// Spectral ∂̄: (p,q) → (p,q+1).
    pub fn exterior_d_antiholo(&self, algebra: &ExteriorAlgebra) -> Result<Self, FormsError> {
        self.exterior_d(algebra, true)
    }

    fn exterior_d(&self, algebra: &ExteriorAlgebra, anti: bool) -> Result<Self, FormsError> {
        let n = self.grid.n();
        let (dp, dq) = if anti { (0, 1) } else { (1, 0) };
        if self.p + dp > n || self.q + dq > n {
            return Err(FormsError::DegreeOverflow {
                p1: self.p,
                q1: self.q,
                p2: dp,
                q2: dq,
                n,
            });
        }
        let t = algebra.tables();
        let mut out = FormField::zeros(&self.grid, self.p + dp, self.q + dq);
        let out_cq = binomial(n, out.q);
        let cq = binomial(n, self.q);
        for (i_i, &mask_i) in t.subsets(self.p).iter().enumerate() {
            for (i_j, &mask_j) in t.subsets(self.q).iter().enumerate() {
                let c = i_i * cq + i_j;
                let coeff = self.coefficient_field(c);
                for &k in self.grid.active() {
                    let kmask = 1u32 << k;
                    let (target_mask, other_mask) =
                        if anti { (mask_j, mask_i) } else { (mask_i, mask_j) };
                    if target_mask & kmask != 0 {
                        continue;
                    }
                    // ∂: dz_k goes in front of dz_I. ∂̄: dz̄_k in front of dz̄_J,
                    // after crossing the p holomorphic factors.
                    let mut sign = crate::forms::index_merge_sign(kmask, target_mask);
                    if anti && self.p % 2 == 1 {
                        sign = -sign;
                    }
                    let d = if anti {
                        coeff.d_anti(k)
                    } else {
                        coeff.d_holo(k)
                    };
                    let (ri, rj) = if anti {
                        (t.rank(out.p, mask_i), t.rank(out.q, mask_j | kmask))
                    } else {
                        (t.rank(out.p, mask_i | kmask), t.rank(out.q, mask_j))
                    };
                    let oc = ri * out_cq + rj;
                    for idx in 0..self.grid.len() {
                        out.data[idx * out.ncoeff + oc] += d.data()[idx] * sign;
                    }
                    let _ = other_mask;
                }
            }
        }
        Ok(out)
    }

    /// 2/3-dealias every coefficient.
    pub fn dealias_23(&self) -> Self {
        let mut out = self.clone();
        for c in 0..self.ncoeff {
            let f = self.coefficient_field(c).dealias_23();
            for idx in 0..self.grid.len() {
                out.data[idx * self.ncoeff + c] = f.data()[idx];
            }
        }
        out
    }
}
