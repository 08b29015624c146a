//! Astheno-Ricci curvature, Chern-Ricci and Bismut-Ricci forms, and
//! balancedness checks.
//!
//! The astheno-Ricci curvature of a metric α is *(i∂∂̄(α^{n−2})), a
//! Hermitian (1,1)-form field. Two independent evaluations are provided:
//!
//! * [`astheno_ricci`] — the closed form: i∂∂̄(α^{n−2}) is expanded by the
//!   Leibniz rule into (n−2)·(i∂∂̄α)∧α^{n−3} + (n−2)(n−3)·(i∂α∧∂̄α)∧α^{n−4},
//!   and each piece is starred through the pointwise closed-form star
//!   specializations for (2,2)- and (3,3)-forms. Only first and second
//!   derivatives of α itself are differentiated spectrally.
//! * [`astheno_ricci_oracle`] — first principles: the wedge power α^{n−2}
//!   is formed pointwise, i∂∂̄ is applied coefficientwise (after 2/3
//!   dealiasing of the product field), and the first-principles Hodge star
//!   is applied at every point.

use num_complex::Complex64;

use crate::forms::ExteriorAlgebra;

use super::fields::{FormField, HermitianField, ScalarField};
use super::GeometryError;

/// Closed-form astheno-Ricci curvature *(i∂∂̄(α^{n−2})). Requires n ≥ 3.
pub fn astheno_ricci(
    algebra: &ExteriorAlgebra,
    alpha: &HermitianField,
) -> Result<HermitianField, GeometryError> {
    let n = alpha.n();
    if n < 3 {
        return Err(GeometryError::DimensionTooSmall { n, min: 3 });
    }
    let grid = alpha.grid().clone();
    let alpha_form = alpha.to_form_field();

    // i∂∂̄α as a (2,2)-form field
    let dbar = alpha_form.exterior_d_antiholo(algebra)?;
    let ddbar = dbar
        .exterior_d_holo(algebra)?
        .scale(Complex64::new(0.0, 1.0));

    // i ∂α ∧ ∂̄α as a (3,3)-form field (only needed for n ≥ 4)
    let tt = if n >= 4 {
        let dh = alpha_form.exterior_d_holo(algebra)?;
        Some(dh.wedge(algebra, &dbar)?.scale(Complex64::new(0.0, 1.0)))
    } else {
        None
    };

    let mut out = HermitianField::zeros(&grid);
    let c2 = (n - 2) as f64;
    let c3 = ((n - 2) * (n - 3)) as f64;
    for idx in 0..grid.len() {
        let metric = alpha.at(idx);
        let mut h = algebra
            .star_22_closed_form(&ddbar.point(idx), &metric)?
            .scale(c2);
        if let Some(tt) = &tt {
            let h3 = algebra.star_33_closed_form(&tt.point(idx), &metric)?;
            h = h.add(&h3.scale(c3));
        }
        out.set_at(idx, &h.hermitize());
    }
    Ok(out)
}

/// First-principles astheno-Ricci curvature; the independent ground truth
/// for [`astheno_ricci`].
pub fn astheno_ricci_oracle(
    algebra: &ExteriorAlgebra,
    alpha: &HermitianField,
) -> Result<HermitianField, GeometryError> {
    let n = alpha.n();
    if n < 3 {
        return Err(GeometryError::DimensionTooSmall { n, min: 3 });
    }
    let grid = alpha.grid().clone();
    let alpha_form = alpha.to_form_field();
    let power = alpha_form.wedge_power(algebra, n - 2)?.dealias_23();
    let ddbar = power
        .exterior_d_antiholo(algebra)?
        .exterior_d_holo(algebra)?
        .scale(Complex64::new(0.0, 1.0));
    let mut out = HermitianField::zeros(&grid);
    for idx in 0..grid.len() {
        let starred = algebra.star_oracle(&ddbar.point(idx), &alpha.at(idx))?;
        out.set_at(idx, &starred.to_matrix()?.hermitize());
    }
    Ok(out)
}

/// Chern-Ricci form Ric(ω) = −∂∂̄ log det ω as a Hermitian field.
pub fn chern_ricci_form(omega: &HermitianField) -> Result<HermitianField, GeometryError> {
    let grid = omega.grid().clone();
    let n = omega.n();
    let log_det = omega.log_det()?.dealias_23();
    let grads: Vec<ScalarField> = (0..n).map(|i| log_det.d_holo(i)).collect();
    let mut out = HermitianField::zeros(&grid);
    for i in 0..n {
        for j in 0..n {
            let hij = grads[i].d_anti(j).scale(Complex64::new(-1.0, 0.0));
            for idx in 0..grid.len() {
                let mut m = out.at(idx);
                m.set(i, j, hij.data()[idx]);
                out.set_at(idx, &m);
            }
        }
    }
    // analytically Hermitian; trim roundoff asymmetry
    let mut sym = HermitianField::zeros(&grid);
    for idx in 0..grid.len() {
        sym.set_at(idx, &out.at(idx).hermitize());
    }
    Ok(sym)
}

/// Sup norm of all coefficients of d(ω^{n−1}), computed spectrally. Zero
/// exactly when ω is balanced.
pub fn balanced_defect(
    algebra: &ExteriorAlgebra,
    omega: &HermitianField,
) -> Result<f64, GeometryError> {
    let n = omega.n();
    let power = omega
        .to_form_field()
        .wedge_power(algebra, n - 1)?
        .dealias_23();
    let dh = power.exterior_d_holo(algebra)?;
    let da = power.exterior_d_antiholo(algebra)?;
    Ok(dh.max_abs().max(da.max_abs()))
}

/// The codifferential d*ω = −*d*ω of the metric form with respect to its own
/// star, returned as the pair of a (1,0)- and a (0,1)-form field.
pub fn metric_codifferential(
    algebra: &ExteriorAlgebra,
    omega: &HermitianField,
) -> Result<(FormField, FormField), GeometryError> {
    let n = omega.n();
    let grid = omega.grid().clone();
    // *ω = ω^{n−1}/(n−1)!
    let fac: f64 = (1..n).map(|v| v as f64).product();
    let star_omega = omega
        .to_form_field()
        .wedge_power(algebra, n - 1)?
        .scale(Complex64::new(1.0 / fac, 0.0))
        .dealias_23();
    let d_h = star_omega.exterior_d_holo(algebra)?; // (n, n−1)
    let d_a = star_omega.exterior_d_antiholo(algebra)?; // (n−1, n)
    let mut out_h = FormField::zeros(&grid, 1, 0);
    let mut out_a = FormField::zeros(&grid, 0, 1);
    for idx in 0..grid.len() {
        let metric = omega.at(idx);
        // *(n,n−1) is (1,0); *(n−1,n) is (0,1); codifferential carries −1
        let s1 = algebra.star_oracle(&d_h.point(idx), &metric)?;
        let s2 = algebra.star_oracle(&d_a.point(idx), &metric)?;
        out_h.set_point(idx, &s1.scale(Complex64::new(-1.0, 0.0)));
        out_a.set_point(idx, &s2.scale(Complex64::new(-1.0, 0.0)));
    }
    Ok((out_h, out_a))
}

/// Bismut-Ricci form Ric^B(ω) = Ric(ω) + (dd*ω)^{(1,1)}. For balanced ω the
/// codifferential term vanishes and Ric^B = Ric.
pub fn bismut_ricci(
    algebra: &ExteriorAlgebra,
    omega: &HermitianField,
) -> Result<HermitianField, GeometryError> {
    let grid = omega.grid().clone();
    let ric = chern_ricci_form(omega)?;
    let (c_h, c_a) = metric_codifferential(algebra, omega)?;
    // (1,1)-part of d(c_h + c_a) = ∂̄ c_h + ∂ c_a
    let part1 = c_h.exterior_d_antiholo(algebra)?;
    let part2 = c_a.exterior_d_holo(algebra)?;
    let dd11 = part1.add(&part2);
    let mut out = HermitianField::zeros(&grid);
    for idx in 0..grid.len() {
        let m = dd11.point(idx).to_matrix()?;
        out.set_at(idx, &ric.at(idx).add(&m.hermitize()));
    }
    Ok(out)
}
