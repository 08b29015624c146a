//! Scratch exploration of the admissibility screen (development aid).

use formcy::forms::ExteriorAlgebra;
use formcy::geometry::{astheno_ricci_oracle, backgrounds, HermitianField, ScalarField, TorusGrid};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn stats(tag: &str, alg: &ExteriorAlgebra, alpha: &HermitianField) {
    let b = astheno_ricci_oracle(alg, alpha).unwrap();
    let grid = alpha.grid();
    let mut max_eig = f64::NEG_INFINITY;
    let mut min_eig = f64::INFINITY;
    for idx in 0..grid.len() {
        let ge =
            formcy::linalg::generalized_eigen(&b.at(idx).to_na(), &alpha.at(idx).to_na()).unwrap();
        max_eig = max_eig.max(ge.values[0]);
        min_eig = min_eig.min(*ge.values.last().unwrap());
    }
    println!(
        "{tag}: pd_margin={:+.4e} astheno range [{:+.4e}, {:+.4e}] norm={:.3e}",
        alpha.min_eigenvalue(),
        min_eig,
        max_eig,
        b.max_abs()
    );
}

fn main() {
    // n=3, two active coordinates
    let n = 3;
    let grid = TorusGrid::new(n, &[0, 1], &[8, 8, 8, 8]).unwrap();
    let alg = ExteriorAlgebra::new(n);

    // 1) gauge + kahler: expect astheno ≡ 0
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = backgrounds::gauge_perturbation(&grid, &mut rng, 0.15);
    let alpha = HermitianField::identity(&grid).add(&g);
    stats("n3 gauge", &alg, &alpha);

    // 2) generic Hermitian perturbation: expect indefinite astheno
    for seed in 0..4u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let mut comps: Vec<ScalarField> = Vec::new();
        for _ in 0..n * n {
            let coeff = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let fx = rng.gen_range(-1..=1i64);
            let fy = rng.gen_range(-1..=1i64);
            let fx2 = rng.gen_range(-1..=1i64);
            let fy2 = rng.gen_range(-1..=1i64);
            comps.push(ScalarField::from_fn(&grid, |idx| {
                let c = grid.coords(idx);
                let phase = fx as f64 * c[0]
                    + fy as f64 * c[1]
                    + fx2 as f64 * c[2]
                    + fy2 as f64 * c[3];
                coeff * Complex64::new(0.0, phase).exp() * 0.05
            }));
        }
        let alpha = HermitianField::from_fn(&grid, |idx| {
            let mut m = formcy::forms::HermitianMatrix::identity(n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, m.get(i, j) + comps[i * n + j].data()[idx]);
                }
            }
            m.hermitize()
        });
        stats(&format!("n3 generic seed={seed}"), &alg, &alpha);
    }

    // 3) n=4, one active coordinate, gauge construction: second-order
    //    torsion term is the only astheno contribution
    let n4 = 4;
    let grid4 = TorusGrid::new(n4, &[0], &[12, 12]).unwrap();
    let alg4 = ExteriorAlgebra::new(n4);
    for seed in 0..6u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(200 + seed);
        let g = backgrounds::gauge_perturbation(&grid4, &mut rng, 0.2);
        let alpha = HermitianField::identity(&grid4).add(&g);
        if !alpha.is_positive_definite(0.2) {
            println!("n4 gauge seed={seed}: not PD");
            continue;
        }
        stats(&format!("n4 gauge seed={seed}"), &alg4, &alpha);
    }

    // 4) n=4 explicit off-diagonal profile b(z1) in the (1,2) slot
    let b01 = ScalarField::from_fn(&grid4, |idx| {
        let c = grid4.coords(idx);
        Complex64::new(0.3 * c[0].cos(), 0.3 * c[1].sin())
    });
    let alpha = HermitianField::from_fn(&grid4, |idx| {
        let mut m = formcy::forms::HermitianMatrix::identity(n4);
        m.set(0, 1, b01.data()[idx]);
        m.set(1, 0, b01.data()[idx].conj());
        m
    });
    stats("n4 offdiag b(z1)", &alg4, &alpha);
}
