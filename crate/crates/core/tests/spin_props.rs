use std::f64::consts::FRAC_PI_6;

use bwm_core::matrix::{c, hermitian_eigs, rel_residual};
use bwm_core::spin::{
    cos_alpha, decomposition_residual, gell_mann_basis, hamiltonian, ladder_ops,
    predicted_spectrum, rotate_about_middle, unitary_b, unitary_b_dt, DriveParams,
};
use bwm_core::Error;

const THETAS: [f64; 5] = [0.0, 0.4, FRAC_PI_6, 1.0, 2.2];
const DS: [f64; 4] = [1.7, 2.0, 3.0, 5.0];

fn drive_grid() -> Vec<(DriveParams, f64)> {
    let mut out = Vec::new();
    for theta in THETAS {
        for d in DS {
            for omega in [0.5, 1.0, -0.8] {
                for phi in [0.0, 1.3, 4.0] {
                    out.push((DriveParams::new(theta, omega, d).unwrap(), phi));
                }
            }
        }
    }
    out
}

#[test]
fn gell_mann_algebra() {
    let gm = gell_mann_basis();
    for l in 1..=8 {
        for m in 1..=8 {
            let tr = (*gm.get(l) * *gm.get(m)).trace();
            let want = if l == m { 0.5 } else { 0.0 };
            assert!((tr - c(want, 0.0)).norm() < 1e-12);
            let comm = gm.get(l).commutator(gm.get(m));
            let mut rhs = bwm_core::Matrix3::zero();
            for n in 1..=8 {
                rhs += *gm.get(n) * c(0.0, gm.f(l, m, n));
            }
            assert!((comm - rhs).frobenius_norm() < 1e-12);
            // total antisymmetry
            for n in 1..=8 {
                assert!((gm.f(l, m, n) + gm.f(m, l, n)).abs() < 1e-12);
            }
        }
    }
    assert!((gm.f(1, 4, 7) - 0.5).abs() < 1e-12);
    assert!((gm.f(4, 5, 8) - 3f64.sqrt() / 2.0).abs() < 1e-12);
}

#[test]
fn hamiltonian_hermitian_traceless_with_predicted_spectrum() {
    for (dp, phi) in drive_grid() {
        let h = hamiltonian(phi, &dp).unwrap();
        let scale = h.frobenius_norm().max(1.0);
        assert!(h.hermiticity_defect() < 1e-12 * scale);
        assert!(h.trace().norm() < 1e-12);
        let got = hermitian_eigs(&h).unwrap().eigenvalues;
        let want = predicted_spectrum(&dp).unwrap();
        for k in 0..3 {
            assert!((got[k] - want[k]).abs() < 1e-10, "{dp:?} {got:?} {want:?}");
        }
    }
}

#[test]
fn phi_covariance() {
    for (dp, phi) in drive_grid() {
        let h0 = hamiltonian(0.0, &dp).unwrap();
        let h = hamiltonian(phi, &dp).unwrap();
        assert!(rel_residual(&h, &rotate_about_middle(&h0, phi)) < 1e-12);
    }
}

#[test]
fn su2_closure_on_grid() {
    for theta in [0.0, 0.4, 1.0, 2.2] {
        for d in [1.7, 2.0, 3.0, 5.0] {
            let spins = ladder_ops(theta, d).unwrap();
            let cl = spins.closure();
            assert!(cl.comm_plus_minus < 1e-10);
            assert!(cl.comm_3_plus < 1e-10);
            assert!(cl.comm_3_minus < 1e-10);
            assert!(cl.nilpotency < 1e-12);
            assert!(cl.adjointness < 1e-12);
            assert!(cl.trace_s3 < 1e-12);
            let kappa = spins.casimir();
            for s in [spins.s1(), spins.s2(), spins.s3] {
                assert!(kappa.commutator(&s).frobenius_norm() < 1e-10);
            }
            let es = hermitian_eigs(&kappa).unwrap().eigenvalues;
            for (got, want) in es.iter().zip([0.0, 0.75, 0.75]) {
                assert!((got - want).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn decomposition_on_grid() {
    for (dp, phi) in drive_grid() {
        let r = decomposition_residual(phi, &dp).unwrap();
        assert!(r < 1e-10, "{dp:?} phi={phi}: {r}");
    }
}

#[test]
fn time_derivative_matches_central_difference() {
    let h = 1e-6;
    for (dp, phi0) in drive_grid() {
        // B as a function of t with φ = ω t
        let t0 = phi0 / dp.omega_drive;
        let bp = unitary_b(dp.omega_drive * (t0 + h), &dp).unwrap();
        let bm = unitary_b(dp.omega_drive * (t0 - h), &dp).unwrap();
        let fd = (bp - bm) * (0.5 / h);
        let exact = unitary_b_dt(phi0, &dp).unwrap();
        assert!((fd - exact).frobenius_norm() < 1e-8);
        // -i H B / ħ reproduces ∂B/∂t
        let b = unitary_b(phi0, &dp).unwrap();
        let gen = hamiltonian(phi0, &dp).unwrap() * b * c(0.0, -1.0 / dp.hbar);
        assert!((gen - exact).frobenius_norm() < 1e-12);
    }
}

#[test]
fn cos_alpha_is_bounded() {
    for k in 0..200 {
        let d = 1.0 + 0.05 * k as f64;
        for j in 0..50 {
            let theta = 0.13 * j as f64;
            let ca = cos_alpha(theta, d).unwrap();
            assert!(ca.abs() <= 1.0 + 1e-15);
        }
    }
}

#[test]
fn hbar_scales_the_spectrum() {
    let dp = DriveParams::with_hbar(0.7, 1.0, 0.5, 2.5).unwrap();
    let got = hermitian_eigs(&hamiltonian(0.3, &dp).unwrap()).unwrap().eigenvalues;
    let e = 0.5 * cos_alpha(0.7, 2.5).unwrap();
    assert!((got[2] - e).abs() < 1e-12);
    assert!(decomposition_residual(0.3, &dp).unwrap() < 1e-10);
}

#[test]
fn zeta_singularity_is_reported() {
    let err = ladder_ops(std::f64::consts::FRAC_PI_2, std::f64::consts::SQRT_2).unwrap_err();
    assert!(matches!(err, Error::DegenerateZeta { .. }));
    assert_eq!(err.reason(), "degenerate_zeta");
}
