//! Pointwise multilinear exterior algebra over ℂⁿ with a Hermitian inner
//! product.
//!
//! A `(p, q)`-form is stored through its canonical coefficients: the
//! coefficient of dz_I ∧ dz̄_J with I a strictly increasing p-tuple of
//! holomorphic indices and J a strictly increasing q-tuple of
//! antiholomorphic indices, all holomorphic factors ordered before all
//! antiholomorphic ones.
//!
//! # Conventions
//!
//! * A Hermitian (1,1)-form with matrix h is `i h_{ij̄} dz_i ∧ dz̄_j`, so its
//!   canonical coefficients carry an explicit factor i.
//! * The volume form of a metric α is vol = αⁿ/n! =
//!   i^{n²} det(α) dz_{1..n} ∧ dz̄_{1..n}.
//! * The inner product on decomposables is the induced determinant pairing
//!   ⟨dz_I∧dz̄_J, dz_K∧dz̄_L⟩ = det(α^{ik̄})_{I×K} · det(α^{lj̄})_{L×J}
//!   with no extra combinatorial factor.
//! * The Hodge star is the complex-linear operator defined by
//!   u ∧ *w = ⟨u, w̄⟩ vol for all u of bidegree (q, p) when w has bidegree
//!   (p, q); it maps (p, q) to (n−q, n−p). With this normalization
//!   *1 = vol and *(α^{n−1}/(n−1)!) = α hold exactly, and
//!   *(γ ∧ α^{n−2}) = (n−2)! (tr_α γ · α − γ) for any (1,1)-form γ.
//!
//! See `docs/conventions.md` at the repository root for the full sign
//! tables and the closed-form star coefficients in these conventions.

mod index;

pub use index::merge_sign as index_merge_sign;
pub use index::IndexTables;

use num_complex::Complex64;

use crate::linalg::{self, CMatrix};

/// Errors from the exterior algebra layer.
#[derive(Debug, thiserror::Error)]
pub enum FormsError {
    #[error("wedge degree overflow: ({p1},{q1}) ∧ ({p2},{q2}) in dimension {n}")]
    DegreeOverflow {
        p1: usize,
        q1: usize,
        p2: usize,
        q2: usize,
        n: usize,
    },
    #[error("bidegree mismatch: expected ({expected_p},{expected_q}), got ({p},{q})")]
    BidegreeMismatch {
        expected_p: usize,
        expected_q: usize,
        p: usize,
        q: usize,
    },
    #[error("dimension mismatch: form has n = {a}, algebra has n = {b}")]
    DimensionMismatch { a: usize, b: usize },
    #[error("metric is not positive definite")]
    NonPositiveMetric,
    #[error("dimension {n} too small: operation requires n ≥ {min}")]
    DimensionTooSmall { n: usize, min: usize },
}

/// An n×n Hermitian coefficient matrix, entry (i, j) holding a_{ij̄},
/// stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::default(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(diag[i], 0.0);
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_row_major(n: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Project onto the Hermitian part (a + aᴴ)/2.
    pub fn hermitize(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| {
            0.5 * (self.data[i * n + j] + self.data[j * n + i].conj())
        })
    }

    /// Largest deviation from conjugate symmetry.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((self.data[i * n + j] - self.data[j * n + i].conj()).norm());
            }
        }
        worst
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        m
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a *= s;
        }
        m
    }

    pub fn trace_re(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i].re).sum()
    }

    pub fn to_na(&self) -> CMatrix {
        linalg::to_matrix(self.n, &self.data)
    }

    pub fn from_na(m: &CMatrix) -> Self {
        Self {
            n: m.nrows(),
            data: linalg::from_matrix(m),
        }
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::hermitian_eigenvalues(&self.to_na())
    }

    pub fn min_eigenvalue(&self) -> f64 {
        *self.eigenvalues().last().unwrap()
    }

    pub fn is_positive_definite(&self, margin: f64) -> bool {
        linalg::is_pd_with_margin(&self.to_na(), margin)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Inverse-metric access with α^{ij̄} α_{kj̄} = δ_{ik}.
struct InverseMetric {
    inv: CMatrix,
    det: f64,
}

impl InverseMetric {
    fn new(metric: &HermitianMatrix) -> Result<Self, FormsError> {
        let m = metric.to_na();
        let log_det = linalg::log_det_pd(&m).map_err(|_| FormsError::NonPositiveMetric)?;
        let inv = linalg::inverse(&m).ok_or(FormsError::NonPositiveMetric)?;
        Ok(Self {
            inv,
            det: log_det.exp(),
        })
    }

    /// α^{ij̄}.
    #[inline]
    fn upper(&self, i: usize, j: usize) -> Complex64 {
        self.inv[(j, i)]
    }
}

/// A (p, q)-form over ℂⁿ in canonical multi-index layout.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiIndexForm {
    n: usize,
    p: usize,
    q: usize,
    /// coeff[iI * C(n,q) + iJ] where iI ranks the holomorphic subset and iJ
    /// the antiholomorphic one, both in lexicographic order.
    coeff: Vec<Complex64>,
}

impl MultiIndexForm {
    pub fn zero(n: usize, p: usize, q: usize) -> Self {
        assert!(p <= n && q <= n);
        let len = binomial(n, p) * binomial(n, q);
        Self {
            n,
            p,
            q,
            coeff: vec![Complex64::default(); len],
        }
    }

    /// The constant function 1 as a (0,0)-form.
    pub fn one(n: usize) -> Self {
        let mut f = Self::zero(n, 0, 0);
        f.coeff[0] = Complex64::new(1.0, 0.0);
        f
    }

    /// The (1,1)-form i h_{ij̄} dz_i ∧ dz̄_j.
    pub fn from_hermitian(h: &HermitianMatrix) -> Self {
        let n = h.n;
        let mut f = Self::zero(n, 1, 1);
        for i in 0..n {
            for j in 0..n {
                f.coeff[i * n + j] = Complex64::new(0.0, 1.0) * h.get(i, j);
            }
        }
        f
    }

    /// Inverse of [`Self::from_hermitian`]; requires bidegree (1,1).
    pub fn to_matrix(&self) -> Result<HermitianMatrix, FormsError> {
        self.check_bidegree(1, 1)?;
        let n = self.n;
        Ok(HermitianMatrix::from_fn(n, |i, j| {
            Complex64::new(0.0, -1.0) * self.coeff[i * n + j]
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeff
    }

    pub fn coefficients_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeff
    }

    pub fn check_bidegree(&self, p: usize, q: usize) -> Result<(), FormsError> {
        if self.p != p || self.q != q {
            return Err(FormsError::BidegreeMismatch {
                expected_p: p,
                expected_q: q,
                p: self.p,
                q: self.q,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.p, self.q), (other.n, other.p, other.q));
        let mut f = self.clone();
        for (a, b) in f.coeff.iter_mut().zip(&other.coeff) {
            *a += b;
        }
        f
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.p, self.q), (other.n, other.p, other.q));
        let mut f = self.clone();
        for (a, b) in f.coeff.iter_mut().zip(&other.coeff) {
            *a -= b;
        }
        f
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut f = self.clone();
        for a in f.coeff.iter_mut() {
            *a *= s;
        }
        f
    }

    /// Complex conjugate form; swaps bidegree (p,q) → (q,p) and carries the
    /// reordering sign (−1)^{pq}.
    pub fn conj(&self) -> Self {
        let n = self.n;
        let (p, q) = (self.p, self.q);
        let sign = if (p * q) % 2 == 0 { 1.0 } else { -1.0 };
        let cp = binomial(n, p);
        let cq = binomial(n, q);
        let mut out = Self::zero(n, q, p);
        for i_i in 0..cp {
            for i_j in 0..cq {
                // conj(dz_I ∧ dz̄_J) = (−1)^{pq} dz_J ∧ dz̄_I
                out.coeff[i_j * cp + i_i] = self.coeff[i_i * cq + i_j].conj() * sign;
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.coeff.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// i^k for signed k.
pub(crate) fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

pub(crate) fn factorial(k: usize) -> f64 {
    (1..=k).map(|v| v as f64).product()
}

/// Precomputed multi-index tables and the exterior-algebra operations for a
/// fixed complex dimension n.
pub struct ExteriorAlgebra {
    n: usize,
    tables: IndexTables,
}

impl ExteriorAlgebra {
    pub fn new(n: usize) -> Self {
        assert!((1..=16).contains(&n), "complex dimension out of range");
        Self {
            n,
            tables: IndexTables::new(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tables(&self) -> &IndexTables {
        &self.tables
    }

    fn check_dim(&self, f: &MultiIndexForm) -> Result<(), FormsError> {
        if f.n != self.n {
            return Err(FormsError::DimensionMismatch { a: f.n, b: self.n });
        }
        Ok(())
    }

    /// Exterior product. Bilinear and graded-anticommutative:
    /// a∧b = (−1)^{deg a · deg b} b∧a with deg = p + q.
    pub fn wedge(
        &self,
        a: &MultiIndexForm,
        b: &MultiIndexForm,
    ) -> Result<MultiIndexForm, FormsError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        let n = self.n;
        if a.p + b.p > n || a.q + b.q > n {
            return Err(FormsError::DegreeOverflow {
                p1: a.p,
                q1: a.q,
                p2: b.p,
                q2: b.q,
                n,
            });
        }
        let t = &self.tables;
        let mut out = MultiIndexForm::zero(n, a.p + b.p, a.q + b.q);
        let out_cq = binomial(n, out.q);
        let a_cq = binomial(n, a.q);
        let b_cq = binomial(n, b.q);
        // sign from moving the b-holomorphic block past the a-antiholomorphic one
        let cross = if (a.q * b.p) % 2 == 0 { 1.0 } else { -1.0 };
        for (i_i, &mask_i) in t.subsets(a.p).iter().enumerate() {
            for (i_j, &mask_j) in t.subsets(a.q).iter().enumerate() {
                let ca = a.coeff[i_i * a_cq + i_j];
                if ca.norm_sqr() == 0.0 {
                    continue;
                }
                for (k_i, &mask_k) in t.subsets(b.p).iter().enumerate() {
                    if mask_i & mask_k != 0 {
                        continue;
                    }
                    for (k_j, &mask_l) in t.subsets(b.q).iter().enumerate() {
                        if mask_j & mask_l != 0 {
                            continue;
                        }
                        let cb = b.coeff[k_i * b_cq + k_j];
                        if cb.norm_sqr() == 0.0 {
                            continue;
                        }
                        let s = cross
                            * index::merge_sign(mask_i, mask_k)
                            * index::merge_sign(mask_j, mask_l);
                        let ri = t.rank(out.p, mask_i | mask_k);
                        let rj = t.rank(out.q, mask_j | mask_l);
                        out.coeff[ri * out_cq + rj] += ca * cb * s;
                    }
                }
            }
        }
        Ok(out)
    }

    /// k-th wedge power.
    pub fn wedge_power(&self, f: &MultiIndexForm, k: usize) -> Result<MultiIndexForm, FormsError> {
        if k == 0 {
            return Ok(MultiIndexForm::one(self.n));
        }
        let mut acc = f.clone();
        for _ in 1..k {
            acc = self.wedge(&acc, f)?;
        }
        Ok(acc)
    }

    /// The metric's volume form αⁿ/n!.
    pub fn volume_form(&self, metric: &HermitianMatrix) -> Result<MultiIndexForm, FormsError> {
        let alpha = MultiIndexForm::from_hermitian(metric);
        let v = self.wedge_power(&alpha, self.n)?;
        Ok(v.scale(Complex64::new(1.0 / factorial(self.n), 0.0)))
    }

    /// First-principles Hodge star defined through u ∧ *w = ⟨u, w̄⟩ vol.
    /// Maps bidegree (p, q) to (n−q, n−p).
    pub fn star_oracle(
        &self,
        w: &MultiIndexForm,
        metric: &HermitianMatrix,
    ) -> Result<MultiIndexForm, FormsError> {
        self.check_dim(w)?;
        let n = self.n;
        let inv = InverseMetric::new(metric)?;
        let (p, q) = (w.p, w.q);
        let t = &self.tables;
        let full: u32 = (1u32 << n) - 1;

        let holo_a = t.subsets(p); // A: holomorphic sets of w
        let anti_b = t.subsets(q); // B: antiholomorphic sets of w
        let u_i = t.subsets(q); // I: holomorphic sets of the test form u
        let u_j = t.subsets(p); // J: antiholomorphic sets of u

        let mut out = MultiIndexForm::zero(n, n - q, n - p);
        let out_cq = binomial(n, n - p);

        // prefactor i^{n²} det(α) (−1)^{pn}
        let mut pref = i_pow((n * n) as i64) * inv.det;
        if (p * n) % 2 == 1 {
            pref = -pref;
        }

        let cq_w = binomial(n, q);
        for (idx_i, &mask_i) in u_i.iter().enumerate() {
            let comp_i = full & !mask_i;
            let eps_i = index::merge_sign(mask_i, comp_i);
            for (idx_j, &mask_j) in u_j.iter().enumerate() {
                let comp_j = full & !mask_j;
                let eps_j = index::merge_sign(mask_j, comp_j);
                // Σ_{A,B} w_{A,B} det(α^{ib̄})_{I×B} det(α^{aj̄})_{A×J}
                let mut acc = Complex64::default();
                for (idx_a, &mask_a) in holo_a.iter().enumerate() {
                    let d2 = gram_minor(&inv, mask_a, mask_j, n);
                    if d2.norm_sqr() == 0.0 {
                        continue;
                    }
                    for (idx_b, &mask_b) in anti_b.iter().enumerate() {
                        let wc = w.coeff[idx_a * cq_w + idx_b];
                        if wc.norm_sqr() == 0.0 {
                            continue;
                        }
                        let d1 = gram_minor(&inv, mask_i, mask_b, n);
                        acc += wc * d1 * d2;
                    }
                }
                let ri = t.rank(n - q, comp_i);
                let rj = t.rank(n - p, comp_j);
                out.coeff[ri * out_cq + rj] = pref * eps_i * eps_j * acc;
                let _ = idx_i;
                let _ = idx_j;
            }
        }
        Ok(out)
    }

    /// tr_α f = α^{ij̄} f_{ij̄} for a (1,1)-form with coefficient matrix f.
    pub fn metric_trace(
        &self,
        f: &MultiIndexForm,
        metric: &HermitianMatrix,
    ) -> Result<Complex64, FormsError> {
        self.check_dim(f)?;
        f.check_bidegree(1, 1)?;
        let inv = InverseMetric::new(metric)?;
        let n = self.n;
        let mut tr = Complex64::default();
        for i in 0..n {
            for j in 0..n {
                // f-matrix entry = −i · canonical coefficient
                tr += inv.upper(i, j) * Complex64::new(0.0, -1.0) * f.coeff[i * n + j];
            }
        }
        Ok(tr)
    }

    /// tr_α of a Hermitian coefficient matrix.
    pub fn trace_with(
        &self,
        h: &HermitianMatrix,
        metric: &HermitianMatrix,
    ) -> Result<f64, FormsError> {
        let inv = InverseMetric::new(metric)?;
        let n = self.n;
        let mut tr = Complex64::default();
        for i in 0..n {
            for j in 0..n {
                tr += inv.upper(i, j) * h.get(i, j);
            }
        }
        Ok(tr.re)
    }

    /// Closed form of *(γ ∧ α^{n−2}) for a (1,1)-form γ: equals
    /// (n−2)! (tr_α γ · α − γ), returned as the coefficient matrix of the
    /// resulting (1,1)-form.
    pub fn star_11_closed_form(
        &self,
        gamma: &MultiIndexForm,
        metric: &HermitianMatrix,
    ) -> Result<HermitianMatrix, FormsError> {
        self.check_dim(gamma)?;
        gamma.check_bidegree(1, 1)?;
        let n = self.n;
        if n < 2 {
            return Err(FormsError::DimensionTooSmall { n, min: 2 });
        }
        let tr = self.metric_trace(gamma, metric)?;
        let g = gamma.to_matrix()?;
        let fac = factorial(n - 2);
        Ok(HermitianMatrix::from_fn(n, |i, j| {
            fac * (tr * metric.get(i, j) - g.get(i, j))
        }))
    }

    /// Closed form of *(Φ ∧ α^{n−3}) for a (2,2)-form Φ, n ≥ 3, returned as
    /// the (1,1) coefficient matrix H (the starred form is i H_{kl̄} dz_k∧dz̄_l):
    ///
    /// H_{kl̄} = (n−3)! ( −α^{sr̄} Φ_{kl̄sr̄} + ½ (α^{uv̄}α^{sr̄} Φ_{uv̄sr̄}) α_{kl̄} ),
    ///
    /// with Φ_{kl̄sr̄} the fully antisymmetric extension of the canonical
    /// coefficients (holomorphic slots k,s; antiholomorphic slots l,r).
    pub fn star_22_closed_form(
        &self,
        phi: &MultiIndexForm,
        metric: &HermitianMatrix,
    ) -> Result<HermitianMatrix, FormsError> {
        self.check_dim(phi)?;
        phi.check_bidegree(2, 2)?;
        let n = self.n;
        if n < 3 {
            return Err(FormsError::DimensionTooSmall { n, min: 3 });
        }
        let inv = InverseMetric::new(metric)?;
        let comp = Component22::new(self, phi);
        let mut q = vec![Complex64::default(); n * n];
        for k in 0..n {
            for l in 0..n {
                let mut acc = Complex64::default();
                for s in 0..n {
                    for r in 0..n {
                        acc += inv.upper(s, r) * comp.get(k, l, s, r);
                    }
                }
                q[k * n + l] = acc;
            }
        }
        let mut p_tr = Complex64::default();
        for k in 0..n {
            for l in 0..n {
                p_tr += inv.upper(k, l) * q[k * n + l];
            }
        }
        let fac = factorial(n - 3);
        Ok(HermitianMatrix::from_fn(n, |k, l| {
            fac * (-q[k * n + l] + 0.5 * p_tr * metric.get(k, l))
        }))
    }

    /// Closed form of *(Ψ ∧ α^{n−4}) for a (3,3)-form Ψ, n ≥ 4:
    ///
    /// H_{kl̄} = i (n−4)! ( ½ α^{sr̄}α^{pq̄} Ψ_{kl̄sr̄pq̄}
    ///                      − ⅙ (α^{uv̄}α^{sr̄}α^{pq̄} Ψ_{uv̄sr̄pq̄}) α_{kl̄} ).
    pub fn star_33_closed_form(
        &self,
        psi: &MultiIndexForm,
        metric: &HermitianMatrix,
    ) -> Result<HermitianMatrix, FormsError> {
        self.check_dim(psi)?;
        psi.check_bidegree(3, 3)?;
        let n = self.n;
        if n < 4 {
            return Err(FormsError::DimensionTooSmall { n, min: 4 });
        }
        let inv = InverseMetric::new(metric)?;
        let comp = Component33::new(self, psi);
        let mut q2 = vec![Complex64::default(); n * n];
        for k in 0..n {
            for l in 0..n {
                let mut acc = Complex64::default();
                for s in 0..n {
                    for r in 0..n {
                        let w1 = inv.upper(s, r);
                        if w1.norm_sqr() == 0.0 {
                            continue;
                        }
                        for p in 0..n {
                            for qi in 0..n {
                                acc += w1 * inv.upper(p, qi) * comp.get(k, l, s, r, p, qi);
                            }
                        }
                    }
                }
                q2[k * n + l] = acc;
            }
        }
        let mut p3 = Complex64::default();
        for k in 0..n {
            for l in 0..n {
                p3 += inv.upper(k, l) * q2[k * n + l];
            }
        }
        let pref = Complex64::new(0.0, 1.0) * factorial(n - 4);
        Ok(HermitianMatrix::from_fn(n, |k, l| {
            pref * (0.5 * q2[k * n + l] - p3 / 6.0 * metric.get(k, l))
        }))
    }
}

/// Gram minor det(α^{ab̄})_{rows ∈ mask_r, cols ∈ mask_c}.
fn gram_minor(inv: &InverseMetric, mask_r: u32, mask_c: u32, n: usize) -> Complex64 {
    let rows: Vec<usize> = (0..n).filter(|i| mask_r >> i & 1 == 1).collect();
    let cols: Vec<usize> = (0..n).filter(|i| mask_c >> i & 1 == 1).collect();
    debug_assert_eq!(rows.len(), cols.len());
    let k = rows.len();
    match k {
        0 => Complex64::new(1.0, 0.0),
        1 => inv.upper(rows[0], cols[0]),
        2 => {
            inv.upper(rows[0], cols[0]) * inv.upper(rows[1], cols[1])
                - inv.upper(rows[0], cols[1]) * inv.upper(rows[1], cols[0])
        }
        _ => {
            let m = CMatrix::from_fn(k, k, |i, j| inv.upper(rows[i], cols[j]));
            linalg::det(&m)
        }
    }
}

/// Fully antisymmetric component access for a (2,2)-form:
/// Φ_{kl̄sr̄} with holomorphic slots (k, s) and antiholomorphic slots (l, r).
struct Component22<'a> {
    n: usize,
    form: &'a MultiIndexForm,
    tables: &'a IndexTables,
}

impl<'a> Component22<'a> {
    fn new(algebra: &'a ExteriorAlgebra, form: &'a MultiIndexForm) -> Self {
        Self {
            n: algebra.n,
            form,
            tables: &algebra.tables,
        }
    }

    fn get(&self, k: usize, l: usize, s: usize, r: usize) -> Complex64 {
        if k == s || l == r {
            return Complex64::default();
        }
        let sgn = pair_sign(k, s) * pair_sign(l, r);
        let mi = 1u32 << k | 1u32 << s;
        let mj = 1u32 << l | 1u32 << r;
        let ri = self.tables.rank(2, mi);
        let rj = self.tables.rank(2, mj);
        self.form.coeff[ri * binomial(self.n, 2) + rj] * sgn
    }
}

/// Same for a (3,3)-form: Ψ_{kl̄sr̄pq̄}.
struct Component33<'a> {
    n: usize,
    form: &'a MultiIndexForm,
    tables: &'a IndexTables,
}

impl<'a> Component33<'a> {
    fn new(algebra: &'a ExteriorAlgebra, form: &'a MultiIndexForm) -> Self {
        Self {
            n: algebra.n,
            form,
            tables: &algebra.tables,
        }
    }

    fn get(&self, k: usize, l: usize, s: usize, r: usize, p: usize, q: usize) -> Complex64 {
        if k == s || k == p || s == p || l == r || l == q || r == q {
            return Complex64::default();
        }
        let sgn = triple_sign(k, s, p) * triple_sign(l, r, q);
        let mi = 1u32 << k | 1u32 << s | 1u32 << p;
        let mj = 1u32 << l | 1u32 << r | 1u32 << q;
        let ri = self.tables.rank(3, mi);
        let rj = self.tables.rank(3, mj);
        self.form.coeff[ri * binomial(self.n, 3) + rj] * sgn
    }
}

fn pair_sign(a: usize, b: usize) -> f64 {
    if a < b {
        1.0
    } else {
        -1.0
    }
}

fn triple_sign(a: usize, b: usize, c: usize) -> f64 {
    let mut inv = 0;
    if a > b {
        inv += 1;
    }
    if a > c {
        inv += 1;
    }
    if b > c {
        inv += 1;
    }
    if inv % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests;
