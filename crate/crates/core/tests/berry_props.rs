use std::f64::consts::{PI, SQRT_2, TAU};

use bwm_core::berry::{
    berry_closed, berry_wilson_loop, branch_phases, eigenframes, figure_data, phase_distance,
    setwise_discrepancy, wilson_phase, ClosedForm, DEFAULT_STEPS,
};
use bwm_core::matrix::cis;
use bwm_core::spin::DriveParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn wilson_loop_matches_closed_form() {
    for theta in [0.3, 0.7, 1.2, 2.0] {
        for d in [1.7, 2.0, 3.0, 5.0] {
            let num = berry_wilson_loop(theta, d, 1.0, DEFAULT_STEPS).unwrap();
            let closed = berry_closed(theta, d, ClosedForm::SinForm).unwrap();
            assert!(phase_distance(num.gamma_plus, closed.gamma_plus) < 1e-4);
            assert!(phase_distance(num.gamma_minus, closed.gamma_minus) < 1e-4);
            assert!(num.gamma_zero.abs() < 1e-6);
            assert!(setwise_discrepancy(num.gamma_plus, num.gamma_minus, closed.cos_alpha) < 1e-4);
            // antisymmetry
            assert!(phase_distance(num.gamma_plus, -num.gamma_minus) < 1e-4);
        }
    }
}

#[test]
fn negative_cos_alpha_keeps_pairing() {
    // sin θ < 0 puts E₊ = −ħω cos α above zero
    let theta = 4.0;
    let num = berry_wilson_loop(theta, 2.0, 1.0, DEFAULT_STEPS).unwrap();
    let closed = berry_closed(theta, 2.0, ClosedForm::SinForm).unwrap();
    assert!(closed.cos_alpha < 0.0);
    assert!(phase_distance(num.gamma_plus, closed.gamma_plus) < 1e-4);
    assert!(phase_distance(num.gamma_minus, closed.gamma_minus) < 1e-4);
}

#[test]
fn wilson_loop_converges() {
    let coarse = berry_wilson_loop(0.4, 1.7, 1.0, 4096).unwrap();
    let fine = berry_wilson_loop(0.4, 1.7, 1.0, 8192).unwrap();
    assert!(phase_distance(coarse.gamma_plus, fine.gamma_plus) < 1e-6);
    assert!(phase_distance(coarse.gamma_minus, fine.gamma_minus) < 1e-6);
}

#[test]
fn wilson_loop_is_gauge_invariant() {
    let dp = DriveParams::new(0.7, 1.0, 3.0).unwrap();
    let frames = eigenframes(&dp, 512).unwrap();
    let before = branch_phases(&frames);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut rephased = frames.clone();
    for f in &mut rephased {
        for v in &mut f.eigenvectors {
            let g = cis(rng.gen_range(-PI..PI));
            *v = v.map(|z| z * g);
        }
    }
    let after = branch_phases(&rephased);
    for b in 0..3 {
        assert!(phase_distance(before[b], after[b]) < 1e-12);
    }
}

#[test]
fn wilson_phase_of_uniform_circle() {
    // v(φ) = (cos a, e^{iφ} sin a, 0); every overlap equals cos² a + sin² a e^{2πi/n}
    let a: f64 = 0.6;
    let n = 2048;
    let path: Vec<_> = (0..n)
        .map(|k| {
            let phi = TAU * k as f64 / n as f64;
            [cis(0.0) * a.cos(), cis(phi) * a.sin(), cis(0.0) * 0.0]
        })
        .collect();
    let step = cis(0.0) * a.cos().powi(2) + cis(TAU / n as f64) * a.sin().powi(2);
    let exact = -(n as f64) * step.arg();
    assert!(phase_distance(wilson_phase(&path), exact) < 1e-11);
    // continuum limit −2π sin² a
    assert!(phase_distance(exact, -TAU * a.sin().powi(2)) < 1e-4);
}

#[test]
fn cos_form_extrema() {
    let n = 2001;
    for d in [1.5, 2.0, 3.0, 5.0] {
        let grid: Vec<f64> = (0..n).map(|k| TAU * k as f64 / (n - 1) as f64).collect();
        let rows = figure_data(&grid, &[d]).unwrap();
        let (imax, max) = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.gamma_plus))
            .fold((0, f64::MIN), |a, b| if b.1 > a.1 { b } else { a });
        let min = rows.iter().map(|r| r.gamma_plus).fold(f64::MAX, f64::min);
        let k = 2.0 * (d * d - 1.0f64).sqrt() / (d * d);
        assert!((max - PI * (1.0 + k)).abs() < 1e-12);
        assert!((min - PI * (1.0 - k)).abs() < 1e-12);
        assert!((grid[imax] - PI).abs() < 1e-12);
        assert!((rows[0].gamma_plus - min).abs() < 1e-12);
        assert!((rows[n - 1].gamma_plus - min).abs() < 1e-12);
    }
}

#[test]
fn envelope_decreases_beyond_sqrt2() {
    let env = |d: f64| 2.0 * (d * d - 1.0).sqrt() / (d * d);
    let ds = [SQRT_2, 1.5, 2.0, 3.0, 5.0, 10.0];
    for w in ds.windows(2) {
        assert!(env(w[1]) < env(w[0]));
    }
    assert!((env(SQRT_2) - 1.0).abs() < 1e-15);
}

#[test]
fn reduction_at_sqrt2() {
    let worst = (0..1000)
        .map(|k| {
            let theta = TAU * k as f64 / 999.0;
            let g = berry_closed(theta, SQRT_2, ClosedForm::CosForm).unwrap().gamma_plus;
            (g - PI * (1.0 - theta.cos())).abs()
        })
        .fold(0.0, f64::max);
    assert!(worst < 1e-12, "{worst}");
}

#[test]
fn forms_are_related_by_complementary_angle() {
    for theta in [0.1, 0.9, 2.5] {
        for d in [1.0, 2.0, 4.0] {
            let s = berry_closed(theta, d, ClosedForm::SinForm).unwrap();
            let c = berry_closed(std::f64::consts::FRAC_PI_2 - theta, d, ClosedForm::CosForm).unwrap();
            assert!((s.gamma_plus - c.gamma_plus).abs() < 1e-14);
        }
    }
}

#[test]
fn large_d_tends_to_pi() {
    let d = 1e6;
    for theta in [0.0, 1.0, PI] {
        let g = berry_closed(theta, d, ClosedForm::CosForm).unwrap().gamma_plus;
        assert!((g - PI).abs() <= TAU / d);
    }
}
