//! Small dense complex linear algebra used pointwise on the grid.
//!
//! Everything here operates on n×n Hermitian matrices with n ≤ 8 or so,
//! stored row-major as `[Complex64]` slices (entry `(i, j)` at `i * n + j`
//! holding a_{ij̄}). nalgebra does the decompositions; this module wraps
//! them with deterministic ordering conventions.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Cholesky factorization m = L Lᴴ of a Hermitian positive definite matrix,
/// with explicit pivot checks (nalgebra's complex Cholesky does not reject
/// indefinite input).
pub fn cholesky(m: &CMatrix) -> Option<CMatrix> {
    let n = m.nrows();
    let mut l = CMatrix::zeros(n, n);
    for j in 0..n {
        if m[(j, j)].im.abs() > 1e-10 * (1.0 + m[(j, j)].re.abs()) {
            return None;
        }
        let d = m[(j, j)].re - (0..j).map(|k| l[(j, k)].norm_sqr()).sum::<f64>();
        if !(d > 0.0) {
            return None;
        }
        let djj = d.sqrt();
        l[(j, j)] = Complex64::new(djj, 0.0);
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / djj;
        }
    }
    Some(l)
}

/// Build an nalgebra matrix from a row-major slice.
pub fn to_matrix(n: usize, a: &[Complex64]) -> CMatrix {
    debug_assert_eq!(a.len(), n * n);
    CMatrix::from_fn(n, n, |i, j| a[i * n + j])
}

/// Flatten back to row-major storage.
pub fn from_matrix(m: &CMatrix) -> Vec<Complex64> {
    let n = m.nrows();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(m[(i, j)]);
        }
    }
    out
}

/// Eigenvalues and eigenvectors of a Hermitian matrix, eigenvalues sorted
/// descending. Ties keep the order produced by the decomposition, so runs
/// are reproducible bit-for-bit.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let se = m.clone().symmetric_eigen();
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        se.eigenvalues[b]
            .partial_cmp(&se.eigenvalues[a])
            .unwrap()
            .then(a.cmp(&b))
    });
    let vals: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &se.eigenvectors.column(i));
    }
    (vals, vecs)
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut vals: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

/// Generalized Hermitian eigenvalues of `m` with respect to a positive
/// definite `metric`: the λ with m v = λ metric v. Returns the eigenvalues
/// descending together with the transform data needed to rebuild commuting
/// matrices in the same α-frame.
pub struct GeneralizedEigen {
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    /// L from the Cholesky factorization metric = L L^H.
    pub chol_l: CMatrix,
    /// Unitary eigenvectors of L⁻¹ m L⁻ᴴ, columns ordered like `values`.
    pub vectors: CMatrix,
}

impl GeneralizedEigen {
    /// Rebuild the matrix that has the given spectrum in this same frame:
    /// L Q diag(vals) Qᴴ Lᴴ.
    pub fn rebuild(&self, vals: &[f64]) -> CMatrix {
        let n = self.values.len();
        let d = CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(vals[i], 0.0)
            } else {
                Complex64::default()
            }
        });
        let inner = &self.vectors * d * self.vectors.adjoint();
        &self.chol_l * inner * self.chol_l.adjoint()
    }
}

/// Errors from pointwise factorizations.
#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
}

pub fn generalized_eigen(m: &CMatrix, metric: &CMatrix) -> Result<GeneralizedEigen, LinalgError> {
    let l = cholesky(metric).ok_or(LinalgError::NotPositiveDefinite)?;
    let linv = l
        .clone()
        .try_inverse()
        .ok_or(LinalgError::NotPositiveDefinite)?;
    let b = &linv * m * linv.adjoint();
    // symmetrize against accumulated roundoff
    let b = (&b + b.adjoint()) * Complex64::new(0.5, 0.0);
    let (values, vectors) = hermitian_eigen(&b);
    Ok(GeneralizedEigen {
        values,
        chol_l: l,
        vectors,
    })
}

/// Smallest generalized eigenvalue of (m, metric).
pub fn min_generalized_eigenvalue(m: &CMatrix, metric: &CMatrix) -> Result<f64, LinalgError> {
    let ge = generalized_eigen(m, metric)?;
    Ok(*ge.values.last().unwrap())
}

/// log det of a positive definite Hermitian matrix via Cholesky.
pub fn log_det_pd(m: &CMatrix) -> Result<f64, LinalgError> {
    let l = cholesky(m).ok_or(LinalgError::NotPositiveDefinite)?;
    let mut s = 0.0;
    for i in 0..m.nrows() {
        s += l[(i, i)].re.ln();
    }
    Ok(2.0 * s)
}

/// Determinant of a small complex matrix (LU).
pub fn det(m: &CMatrix) -> Complex64 {
    m.clone().lu().determinant()
}

/// Inverse of a small complex matrix.
pub fn inverse(m: &CMatrix) -> Option<CMatrix> {
    m.clone().try_inverse()
}

/// True when Hermitian `m` is positive definite with margin: λ_min > margin.
pub fn is_pd_with_margin(m: &CMatrix, margin: f64) -> bool {
    let vals = hermitian_eigenvalues(m);
    *vals.last().unwrap() > margin
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hermitian_eigen_complex() {
        // [[2, i],[-i, 2]] has eigenvalues 3 and 1.
        let m = to_matrix(2, &[c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)]);
        let (vals, vecs) = hermitian_eigen(&m);
        assert!((vals[0] - 3.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        // reconstruct
        let d = CMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                c(vals[i], 0.0)
            } else {
                Complex64::default()
            }
        });
        let rec = &vecs * d * vecs.adjoint();
        assert!((rec - m).norm() < 1e-12);
    }

    #[test]
    fn generalized_eigen_roundtrip() {
        let metric = to_matrix(2, &[c(2.0, 0.0), c(0.5, 0.2), c(0.5, -0.2), c(1.0, 0.0)]);
        let m = to_matrix(2, &[c(1.0, 0.0), c(0.1, -0.3), c(0.1, 0.3), c(4.0, 0.0)]);
        let ge = generalized_eigen(&m, &metric).unwrap();
        let rebuilt = ge.rebuild(&ge.values);
        assert!((rebuilt - m).norm() < 1e-10);
    }

    #[test]
    fn log_det_matches_lu() {
        let m = to_matrix(2, &[c(3.0, 0.0), c(0.5, 0.1), c(0.5, -0.1), c(2.0, 0.0)]);
        let ld = log_det_pd(&m).unwrap();
        assert!((ld - det(&m).re.ln()).abs() < 1e-12);
    }
}
