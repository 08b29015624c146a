use std::collections::HashMap;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Independent brute-force exterior algebra on 2n anticommuting generators
/// (dz_1..dz_n are generators 0..n, dz̄_1..dz̄_n are n..2n). A form is a map
/// mask → coefficient; the canonical layout of `MultiIndexForm` (holomorphic
/// factors first, ascending) coincides with ascending generator order, so
/// conversion needs no sign.
#[derive(Clone, Default)]
struct Brute {
    terms: HashMap<u64, Complex64>,
}

impl Brute {
    fn from_form(f: &MultiIndexForm) -> Self {
        let n = f.n();
        let t = IndexTables::new(n);
        let (p, q) = f.bidegree();
        let mut terms = HashMap::new();
        let cq = binomial(n, q);
        for (i_i, &mi) in t.subsets(p).iter().enumerate() {
            for (i_j, &mj) in t.subsets(q).iter().enumerate() {
                let v = f.coefficients()[i_i * cq + i_j];
                if v.norm() > 0.0 {
                    terms.insert(mi as u64 | (mj as u64) << n, v);
                }
            }
        }
        Self { terms }
    }

    fn wedge(&self, other: &Self) -> Self {
        let mut out: HashMap<u64, Complex64> = HashMap::new();
        for (&ma, &va) in &self.terms {
            for (&mb, &vb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                // count inversions between blocks over all 64 generators
                let mut sign = 1.0;
                let mut bits = ma;
                while bits != 0 {
                    let i = bits.trailing_zeros() as u64;
                    if (mb & ((1u64 << i) - 1)).count_ones() % 2 == 1 {
                        sign = -sign;
                    }
                    bits &= bits - 1;
                }
                *out.entry(ma | mb).or_default() += va * vb * sign;
            }
        }
        Self { terms: out }
    }

    fn sub_norm(&self, other: &Self) -> f64 {
        let mut keys: Vec<u64> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.iter()
            .map(|k| {
                (self.terms.get(k).copied().unwrap_or_default()
                    - other.terms.get(k).copied().unwrap_or_default())
                .norm()
            })
            .fold(0.0, f64::max)
    }
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, p: usize, q: usize) -> MultiIndexForm {
    let mut f = MultiIndexForm::zero(n, p, q);
    for v in f.coefficients_mut() {
        *v = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    f
}

fn random_metric(rng: &mut ChaCha8Rng, n: usize) -> HermitianMatrix {
    // identity plus a small random Hermitian bump keeps it positive definite
    let mut h = HermitianMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i < j {
                let v = c(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3));
                h.set(i, j, v);
                h.set(j, i, v.conj());
            } else if i == j {
                h.set(i, i, c(1.0 + rng.gen_range(-0.3..0.8), 0.0));
            }
        }
    }
    assert!(h.is_positive_definite(1e-6));
    h
}

/// A "real" (p,p)-form in the sense conj(f) = f.
fn random_real_form(rng: &mut ChaCha8Rng, n: usize, p: usize) -> MultiIndexForm {
    let f = random_form(rng, n, p, p);
    f.add(&f.conj()).scale(c(0.5, 0.0))
}

#[test]
fn wedge_sign_convention_calibration() {
    // (i dz₁∧dz̄₁) ∧ (i dz₂∧dz̄₂) has a real positive coefficient on
    // ({1,2},{1,2}) in canonical layout.
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let mut a = MultiIndexForm::zero(n, 1, 1);
    a.coefficients_mut()[0] = c(0.0, 1.0); // i dz_1∧dz̄_1
    let mut b = MultiIndexForm::zero(n, 1, 1);
    b.coefficients_mut()[1 * n + 1] = c(0.0, 1.0); // i dz_2∧dz̄_2
    let w = alg.wedge(&a, &b).unwrap();
    let t = alg.tables();
    let r12 = t.rank(2, 0b011);
    let cq = binomial(n, 2);
    let coeff = w.coefficients()[r12 * cq + r12];
    assert!((coeff - c(1.0, 0.0)).norm() < 1e-15, "got {coeff}");
}

#[test]
fn wedge_of_one_form_with_itself_vanishes() {
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = random_form(&mut rng, n, 1, 0);
    let w = alg.wedge(&a, &a).unwrap();
    assert!(w.max_abs() < 1e-15);
}

#[test]
fn wedge_degree_overflow_rejected() {
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let a = MultiIndexForm::zero(n, 2, 2);
    let b = MultiIndexForm::zero(n, 2, 0);
    assert!(matches!(
        alg.wedge(&a, &b),
        Err(FormsError::DegreeOverflow { .. })
    ));
}

#[test]
fn wedge_matches_brute_force_and_is_associative() {
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let degrees = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1)];
    for trial in 0..50 {
        let (pa, qa) = degrees[trial % degrees.len()];
        let (pb, qb) = degrees[(trial * 7 + 1) % degrees.len()];
        let (pc, qc) = degrees[(trial * 3 + 2) % degrees.len()];
        let a = random_form(&mut rng, n, pa, qa);
        let b = random_form(&mut rng, n, pb, qb);
        let cf = random_form(&mut rng, n, pc, qc);
        if pa + pb + pc > n || qa + qb + qc > n {
            continue;
        }
        let ab_c = alg.wedge(&alg.wedge(&a, &b).unwrap(), &cf).unwrap();
        let a_bc = alg.wedge(&a, &alg.wedge(&b, &cf).unwrap()).unwrap();
        assert!(ab_c.sub(&a_bc).max_abs() < 1e-13);
        // against the independent expansion
        let brute = Brute::from_form(&a)
            .wedge(&Brute::from_form(&b))
            .wedge(&Brute::from_form(&cf));
        assert!(Brute::from_form(&ab_c).sub_norm(&brute) < 1e-13);
    }
}

#[test]
fn wedge_graded_anticommutativity() {
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for &((pa, qa), (pb, qb)) in &[
        ((1, 0), (1, 0)),
        ((1, 0), (0, 1)),
        ((1, 1), (1, 0)),
        ((1, 1), (1, 1)),
        ((2, 1), (0, 1)),
        ((2, 0), (1, 2)),
    ] {
        let a = random_form(&mut rng, n, pa, qa);
        let b = random_form(&mut rng, n, pb, qb);
        let ab = alg.wedge(&a, &b).unwrap();
        let ba = alg.wedge(&b, &a).unwrap();
        let sign = if ((pa + qa) * (pb + qb)) % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        assert!(ab.sub(&ba.scale(c(sign, 0.0))).max_abs() < 1e-13);
    }
}

#[test]
fn star_normalization_anchors() {
    // *1 = αⁿ/n! and *(α^{n−1}/(n−1)!) = α, identity and random metrics.
    for n in [3usize, 4] {
        let alg = ExteriorAlgebra::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..6 {
            let metric = if trial == 0 {
                HermitianMatrix::identity(n)
            } else {
                random_metric(&mut rng, n)
            };
            let one = MultiIndexForm::one(n);
            let vol = alg.volume_form(&metric).unwrap();
            let star_one = alg.star_oracle(&one, &metric).unwrap();
            assert!(star_one.sub(&vol).max_abs() < 1e-12 * (1.0 + vol.max_abs()));

            let alpha_form = MultiIndexForm::from_hermitian(&metric);
            let pow = alg
                .wedge_power(&alpha_form, n - 1)
                .unwrap()
                .scale(c(1.0 / factorial(n - 1), 0.0));
            let star_pow = alg.star_oracle(&pow, &metric).unwrap();
            assert!(star_pow.sub(&alpha_form).max_abs() < 1e-11);
        }
    }
}

#[test]
fn star_involution_sign_table() {
    // ** = (−1)^{p+q} on (p,q)-forms for n = 3 and 4, random metrics.
    for n in [3usize, 4] {
        let alg = ExteriorAlgebra::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for p in 0..=n {
            for q in 0..=n {
                let metric = random_metric(&mut rng, n);
                let f = random_form(&mut rng, n, p, q);
                let ss = alg
                    .star_oracle(&alg.star_oracle(&f, &metric).unwrap(), &metric)
                    .unwrap();
                let sign = if (p + q) % 2 == 0 { 1.0 } else { -1.0 };
                let diff = ss.sub(&f.scale(c(sign, 0.0))).max_abs();
                assert!(
                    diff < 1e-10 * (1.0 + f.max_abs()),
                    "n={n} p={p} q={q} diff={diff}"
                );
            }
        }
    }
}

#[test]
fn star_of_real_form_is_real() {
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for p in 1..n {
        let metric = random_metric(&mut rng, n);
        let f = random_real_form(&mut rng, n, p);
        let sf = alg.star_oracle(&f, &metric).unwrap();
        assert!(sf.sub(&sf.conj()).max_abs() < 1e-12);
    }
}

#[test]
fn star_chi_tilde_identity_background() {
    // χ̃ = (1/(n−1)!) * (ω₀^{n−1}) equals the identity when ω₀ = α = id.
    for n in [3usize, 4] {
        let alg = ExteriorAlgebra::new(n);
        let id = HermitianMatrix::identity(n);
        let omega0 = MultiIndexForm::from_hermitian(&id);
        let pow = alg.wedge_power(&omega0, n - 1).unwrap();
        let starred = alg.star_oracle(&pow, &id).unwrap();
        // *(ω₀^{n−1}) = (n−1)!·α, so χ̃ = identity
        let chi = starred.scale(c(1.0 / factorial(n - 1), 0.0));
        let chi_mat = chi.to_matrix().unwrap();
        assert!(chi_mat.sub(&id).max_abs() < 1e-12);
    }
}

#[test]
fn metric_trace_examples() {
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let id = HermitianMatrix::identity(n);
    // tr_α α = n
    let alpha_form = MultiIndexForm::from_hermitian(&id);
    let tr = alg.metric_trace(&alpha_form, &id).unwrap();
    assert!((tr - c(3.0, 0.0)).norm() < 1e-15);
    // diag(1,2,3) against identity → 6
    let f = MultiIndexForm::from_hermitian(&HermitianMatrix::from_diag(&[1.0, 2.0, 3.0]));
    let tr = alg.metric_trace(&f, &id).unwrap();
    assert!((tr - c(6.0, 0.0)).norm() < 1e-15);
}

#[test]
fn metric_trace_matches_eigenvalue_sum() {
    let n = 4;
    let alg = ExteriorAlgebra::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for _ in 0..20 {
        let metric = random_metric(&mut rng, n);
        let h = {
            let f = random_form(&mut rng, n, 1, 1);
            let sym = f.add(&f.conj()).scale(c(0.5, 0.0));
            sym.to_matrix().unwrap()
        };
        let tr = alg
            .metric_trace(&MultiIndexForm::from_hermitian(&h), &metric)
            .unwrap();
        assert!(tr.im.abs() < 1e-12);
        let ge = crate::linalg::generalized_eigen(&h.to_na(), &metric.to_na()).unwrap();
        let sum: f64 = ge.values.iter().sum();
        assert!((tr.re - sum).abs() < 1e-12 * (1.0 + sum.abs()));
    }
}

#[test]
fn star_11_closed_form_matches_oracle() {
    for n in [3usize, 4, 5] {
        let alg = ExteriorAlgebra::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
        for _ in 0..10 {
            let metric = random_metric(&mut rng, n);
            let gamma = random_real_form(&mut rng, n, 1);
            let closed = alg.star_11_closed_form(&gamma, &metric).unwrap();
            let alpha_form = MultiIndexForm::from_hermitian(&metric);
            let pow = alg.wedge_power(&alpha_form, n - 2).unwrap();
            let wedge = alg.wedge(&gamma, &pow).unwrap();
            let oracle = alg.star_oracle(&wedge, &metric).unwrap().to_matrix().unwrap();
            let scale = 1.0 + oracle.max_abs();
            assert!(closed.sub(&oracle).max_abs() / scale < 1e-11);
        }
    }
}

#[test]
fn star_22_zero_input() {
    let alg = ExteriorAlgebra::new(3);
    let z = MultiIndexForm::zero(3, 2, 2);
    let out = alg
        .star_22_closed_form(&z, &HermitianMatrix::identity(3))
        .unwrap();
    assert_eq!(out.max_abs(), 0.0);
}

#[test]
fn star_22_alpha_wedge_alpha_flat() {
    // Φ = α∧α at the flat identity metric, n = 3: *Φ = 2α, and the closed
    // form must agree with the oracle to 1e−12.
    let n = 3;
    let alg = ExteriorAlgebra::new(n);
    let id = HermitianMatrix::identity(n);
    let alpha_form = MultiIndexForm::from_hermitian(&id);
    let phi = alg.wedge(&alpha_form, &alpha_form).unwrap();
    let closed = alg.star_22_closed_form(&phi, &id).unwrap();
    let oracle = alg.star_oracle(&phi, &id).unwrap().to_matrix().unwrap();
    assert!(closed.sub(&oracle).max_abs() < 1e-12);
    assert!(closed.sub(&HermitianMatrix::identity(n).scale(2.0)).max_abs() < 1e-12);
}

#[test]
fn star_22_rejects_small_n() {
    let alg = ExteriorAlgebra::new(2);
    let z = MultiIndexForm::zero(2, 2, 2);
    assert!(matches!(
        alg.star_22_closed_form(&z, &HermitianMatrix::identity(2)),
        Err(FormsError::DimensionTooSmall { .. })
    ));
}

#[test]
fn star_22_closed_form_matches_oracle_random() {
    for n in [3usize, 4, 5] {
        let alg = ExteriorAlgebra::new(n);
        let alpha_form_of = |m: &HermitianMatrix| MultiIndexForm::from_hermitian(m);
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + n as u64);
        for _ in 0..20 {
            let metric = random_metric(&mut rng, n);
            let phi = random_real_form(&mut rng, n, 2);
            let closed = alg.star_22_closed_form(&phi, &metric).unwrap();
            let pow = alg.wedge_power(&alpha_form_of(&metric), n - 3).unwrap();
            let wedge = alg.wedge(&phi, &pow).unwrap();
            let oracle = alg.star_oracle(&wedge, &metric).unwrap().to_matrix().unwrap();
            let scale = 1.0 + oracle.max_abs();
            let err = closed.sub(&oracle).max_abs() / scale;
            assert!(err < 1e-10, "n={n} err={err}");
        }
    }
}

#[test]
fn star_33_zero_and_rejection() {
    let alg = ExteriorAlgebra::new(4);
    let z = MultiIndexForm::zero(4, 3, 3);
    let out = alg
        .star_33_closed_form(&z, &HermitianMatrix::identity(4))
        .unwrap();
    assert_eq!(out.max_abs(), 0.0);
    let alg3 = ExteriorAlgebra::new(3);
    let z3 = MultiIndexForm::zero(3, 3, 3);
    assert!(matches!(
        alg3.star_33_closed_form(&z3, &HermitianMatrix::identity(3)),
        Err(FormsError::DimensionTooSmall { .. })
    ));
}

#[test]
fn star_33_alpha_cubed_identity() {
    // Ψ = α∧α∧α, identity metric, n = 4 → proportional to the identity and
    // equal to the oracle.
    let n = 4;
    let alg = ExteriorAlgebra::new(n);
    let id = HermitianMatrix::identity(n);
    let alpha_form = MultiIndexForm::from_hermitian(&id);
    let psi = alg.wedge_power(&alpha_form, 3).unwrap();
    let closed = alg.star_33_closed_form(&psi, &id).unwrap();
    let oracle = alg.star_oracle(&psi, &id).unwrap().to_matrix().unwrap();
    assert!(closed.sub(&oracle).max_abs() < 1e-12);
    let diag = oracle.get(0, 0);
    assert!(diag.im.abs() < 1e-13 && diag.re > 0.0);
    assert!(oracle.sub(&HermitianMatrix::identity(n).scale(diag.re)).max_abs() < 1e-12);
}

#[test]
fn star_33_closed_form_matches_oracle_random() {
    for n in [4usize, 5] {
        let alg = ExteriorAlgebra::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(3000 + n as u64);
        for _ in 0..20 {
            let metric = random_metric(&mut rng, n);
            let psi = random_real_form(&mut rng, n, 3);
            let closed = alg.star_33_closed_form(&psi, &metric).unwrap();
            let alpha_form = MultiIndexForm::from_hermitian(&metric);
            let pow = alg.wedge_power(&alpha_form, n - 4).unwrap();
            let wedge = alg.wedge(&psi, &pow).unwrap();
            let oracle = alg.star_oracle(&wedge, &metric).unwrap().to_matrix().unwrap();
            let scale = 1.0 + oracle.max_abs();
            let err = closed.sub(&oracle).max_abs() / scale;
            assert!(err < 1e-10, "n={n} err={err}");
        }
    }
}

#[test]
fn star_rejects_non_positive_metric() {
    let alg = ExteriorAlgebra::new(3);
    let bad = HermitianMatrix::from_diag(&[1.0, -1.0, 1.0]);
    let f = MultiIndexForm::one(3);
    assert!(matches!(
        alg.star_oracle(&f, &bad),
        Err(FormsError::NonPositiveMetric)
    ));
}
