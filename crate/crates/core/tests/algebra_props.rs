use bwm_core::algebra::{
    check_bwm_suite, check_tla, make_a, make_b, make_ea, make_eb, make_u, AlgebraParams,
    DEFAULT_TOLERANCE,
};
use bwm_core::matrix::{hermitian_eigs, rel_residual, Matrix3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q_grid() -> Vec<f64> {
    (0..20)
        .map(|k| 0.3 + 2.7 * k as f64 / 19.0)
        .filter(|q| (q - 1.0).abs() > 1e-9)
        .collect()
}

fn phase_pairs(seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..5)
        .map(|_| (rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI), rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)))
        .collect()
}

fn coupled_points() -> Vec<AlgebraParams> {
    let mut out = Vec::new();
    for q in q_grid() {
        for (p1, p2) in phase_pairs(7) {
            out.push(AlgebraParams::coupled(q, p1, p2).unwrap());
        }
    }
    out
}

#[test]
fn bwm_suite_over_grid() {
    for p in coupled_points() {
        let r = check_bwm_suite(&p, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.entries.len(), 23);
        assert!(r.all_pass(), "q = {:?}: {r:#?}", p.q());
    }
}

#[test]
fn bwm_suite_reference_points() {
    for (q, p1, p2) in [(0.9, 0.4, -1.1), (2.0, 0.0, 0.0)] {
        let r = check_bwm_suite(&AlgebraParams::coupled(q, p1, p2).unwrap(), 1e-10).unwrap();
        assert!(r.all_pass(), "{r:#?}");
    }
}

#[test]
fn representation_matrices_are_hermitian() {
    for p in coupled_points() {
        for m in [make_ea(&p), make_eb(&p), make_a(&p).unwrap(), make_b(&p).unwrap()] {
            assert!(rel_residual(&m, &m.adjoint()) < 1e-14);
        }
    }
}

#[test]
fn u_is_unitary_and_transports() {
    for p in coupled_points() {
        let u = make_u(&p);
        assert!(rel_residual(&(u.adjoint() * u), &Matrix3::identity()) < 1e-12);
        let a = make_a(&p).unwrap();
        let b = make_b(&p).unwrap();
        assert!(rel_residual(&u.conjugate(&a).unwrap(), &b) < 1e-12);
        assert!(rel_residual(&u.conjugate(&make_ea(&p)).unwrap(), &make_eb(&p)) < 1e-12);

        let ea = hermitian_eigs(&make_ea(&p)).unwrap().eigenvalues;
        let eb = hermitian_eigs(&make_eb(&p)).unwrap().eigenvalues;
        let sa = hermitian_eigs(&a).unwrap().eigenvalues;
        let sb = hermitian_eigs(&b).unwrap().eigenvalues;
        for k in 0..3 {
            assert!((ea[k] - eb[k]).abs() < 1e-10);
            assert!((sa[k] - sb[k]).abs() < 1e-10);
        }
    }
}

#[test]
fn braid_generator_spectrum_is_q_minus_q_inverse_q_minus_two() {
    let q: f64 = 1.7;
    let p = AlgebraParams::coupled(q, 0.3, 0.9).unwrap();
    let mut want = [q, -1.0 / q, q.powi(-2)];
    want.sort_by(f64::total_cmp);
    let got = hermitian_eigs(&make_b(&p).unwrap()).unwrap().eigenvalues;
    for k in 0..3 {
        assert!((got[k] - want[k]).abs() < 1e-12);
    }
}

#[test]
fn traces_equal_loop_value() {
    for d in [1.62, 1.8, 2.0, 3.0, 5.0, 11.0] {
        for (p1, p2) in phase_pairs(3) {
            let p = AlgebraParams::tla(d, p1, p2).unwrap();
            assert!((make_ea(&p).trace().re - d).abs() < 1e-12);
            assert!((make_eb(&p).trace().re - d).abs() < 1e-12);
            assert!(make_eb(&p).trace().im.abs() < 1e-12);
        }
    }
}

#[test]
fn sigma_slot_of_ea_a() {
    for q in q_grid() {
        let p = AlgebraParams::coupled(q, 0.1, 0.2).unwrap();
        let prod = make_ea(&p) * make_a(&p).unwrap();
        let sigma = p.sigma().unwrap();
        assert!((prod[(1, 1)].re - sigma * p.d()).abs() < 1e-12 * p.d());
        assert_eq!(sigma, q.powi(-2));
    }
}

#[test]
fn tla_suite_with_free_loop_value() {
    let d_values = [(1.0 + 5f64.sqrt()) / 2.0, 1.8, 2.0, 3.0, 5.0];
    for d in d_values {
        for (p1, p2) in phase_pairs(11) {
            let p = AlgebraParams::tla(d, p1, p2).unwrap();
            let r = check_tla(&make_ea(&p), &make_eb(&p), d, 1e-12);
            assert!(r.all_pass(), "d = {d}: {r:#?}");
        }
    }
    let p = AlgebraParams::tla(1.8, 0.4, -1.1).unwrap();
    assert!(check_tla(&make_ea(&p), &make_eb(&p), 1.8, 1e-12).all_pass());
}
