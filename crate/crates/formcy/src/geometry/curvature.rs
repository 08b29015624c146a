//! Chern curvature, torsion and the four Ricci contractions of a Hermitian
//! metric field:
//!
//! R_{ij̄kl̄} = −∂_k∂_l̄ α_{ij̄} + α^{pq̄} ∂_l̄ α_{pj̄} ∂_k α_{iq̄}
//!
//! with Ric_{ij̄} = α^{kl̄} R_{kl̄ij̄}, Ric²_{ij̄} = α^{kl̄} R_{ij̄kl̄},
//! Ric³_{ij̄} = α^{kl̄} R_{kj̄il̄}, Ric⁴_{ij̄} = α^{kl̄} R_{il̄kj̄}, and the
//! torsion T_{sjk̄} = ∂_s α_{jk̄} − ∂_j α_{sk̄}, T_s = α^{jk̄} T_{sjk̄}.

use num_complex::Complex64;

use crate::linalg;

use super::fields::HermitianField;
use super::GeometryError;

/// Full curvature data of a metric field at every grid point.
pub struct CurvaturePack {
    pub n: usize,
    /// R_{ij̄kl̄}, point-major, index ((i·n + j)·n + k)·n + l.
    pub riemann: Vec<Complex64>,
    pub ric1: HermitianField,
    pub ric2: HermitianField,
    pub ric3: HermitianField,
    pub ric4: HermitianField,
    /// Scalar curvatures R, R², R³, R⁴ per point.
    pub scalar: [Vec<f64>; 4],
    /// T_{sjk̄}, point-major, index (s·n + j)·n + k.
    pub torsion: Vec<Complex64>,
    /// T_s = α^{jk̄} T_{sjk̄}, point-major, n entries per point.
    pub torsion_trace: Vec<Complex64>,
}

impl CurvaturePack {
    #[inline]
    pub fn r(&self, idx: usize, i: usize, j: usize, k: usize, l: usize) -> Complex64 {
        let n = self.n;
        self.riemann[idx * n * n * n * n + ((i * n + j) * n + k) * n + l]
    }

    #[inline]
    pub fn t(&self, idx: usize, s: usize, j: usize, k: usize) -> Complex64 {
        let n = self.n;
        self.torsion[idx * n * n * n + (s * n + j) * n + k]
    }
}

/// Compute the curvature pack of a positive metric field.
pub fn chern_curvature(alpha: &HermitianField) -> Result<CurvaturePack, GeometryError> {
    let grid = alpha.grid().clone();
    let n = alpha.n();
    if !alpha.is_positive_definite(0.0) {
        return Err(GeometryError::NotPositiveMetric);
    }

    // first and mixed second derivatives of the metric, componentwise spectral
    let d1: Vec<HermitianField> = (0..n).map(|k| alpha.d_holo(k)).collect();
    let d2: Vec<Vec<HermitianField>> = (0..n)
        .map(|k| (0..n).map(|l| d1[k].d_anti(l)).collect())
        .collect();

    let npts = grid.len();
    let n4 = n * n * n * n;
    let mut riemann = vec![Complex64::default(); npts * n4];
    let mut torsion = vec![Complex64::default(); npts * n * n * n];
    let mut torsion_trace = vec![Complex64::default(); npts * n];
    let mut ric = [
        HermitianField::zeros(&grid),
        HermitianField::zeros(&grid),
        HermitianField::zeros(&grid),
        HermitianField::zeros(&grid),
    ];
    let mut scalar = [
        vec![0.0; npts],
        vec![0.0; npts],
        vec![0.0; npts],
        vec![0.0; npts],
    ];

    for idx in 0..npts {
        let a = alpha.at(idx).to_na();
        let inv = linalg::inverse(&a).ok_or(GeometryError::NotPositiveMetric)?;
        // α^{pq̄} = inv[(q, p)]
        let upper = |p: usize, q: usize| inv[(q, p)];

        // R_{ij̄kl̄} = −∂_k∂_l̄α_{ij̄} + α^{pq̄} ∂_l̄α_{pj̄} ∂_kα_{iq̄};
        // ∂_l̄α_{pj̄} = conj(∂_l α_{jp̄}).
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut v = -d2[k][l].entry(idx, i, j);
                        for p in 0..n {
                            for q in 0..n {
                                v += upper(p, q)
                                    * d1[l].entry(idx, j, p).conj()
                                    * d1[k].entry(idx, i, q);
                            }
                        }
                        riemann[idx * n4 + ((i * n + j) * n + k) * n + l] = v;
                    }
                }
            }
        }

        // torsion
        for s in 0..n {
            let mut tr = Complex64::default();
            for j in 0..n {
                for k in 0..n {
                    let t = d1[s].entry(idx, j, k) - d1[j].entry(idx, s, k);
                    torsion[idx * n * n * n + (s * n + j) * n + k] = t;
                    tr += upper(j, k) * t;
                }
            }
            torsion_trace[idx * n + s] = tr;
        }

        // the four Ricci contractions and scalars
        let rm = |i: usize, j: usize, k: usize, l: usize| {
            riemann[idx * n4 + ((i * n + j) * n + k) * n + l]
        };
        let mut mats = [
            crate::forms::HermitianMatrix::zeros(n),
            crate::forms::HermitianMatrix::zeros(n),
            crate::forms::HermitianMatrix::zeros(n),
            crate::forms::HermitianMatrix::zeros(n),
        ];
        for i in 0..n {
            for j in 0..n {
                let mut v = [Complex64::default(); 4];
                for k in 0..n {
                    for l in 0..n {
                        let w = upper(k, l);
                        v[0] += w * rm(k, l, i, j);
                        v[1] += w * rm(i, j, k, l);
                        v[2] += w * rm(k, j, i, l);
                        v[3] += w * rm(i, l, k, j);
                    }
                }
                for (m, val) in mats.iter_mut().zip(v) {
                    m.set(i, j, val);
                }
            }
        }
        for (m, (field, sc)) in mats.iter().zip(ric.iter_mut().zip(scalar.iter_mut())) {
            field.set_at(idx, m);
            let mut s = Complex64::default();
            for i in 0..n {
                for j in 0..n {
                    s += upper(i, j) * m.get(i, j);
                }
            }
            sc[idx] = s.re;
        }
    }

    let [ric1, ric2, ric3, ric4] = ric;
    Ok(CurvaturePack {
        n,
        riemann,
        ric1,
        ric2,
        ric3,
        ric4,
        scalar,
        torsion,
        torsion_trace,
    })
}
