//! Berry phases of the driven system.
//!
//! Closed forms: `γ₀ = 0`, `γ± = ±π(1 − cos α) = ±Ω/2`. The numerical route
//! is the discrete Wilson loop `γ = −arg ∏ₖ ⟨vₖ|vₖ₊₁⟩` over instantaneous
//! eigenvectors of `H(φ)` sampled on `φ ∈ [0, 2π)`, which is independent of
//! the phase chosen for each eigenvector.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Guard, Result};
use crate::matrix::{hermitian_eigs, inner, CVec3, EigenSystem, ONE};
use crate::spin::{cos_alpha, hamiltonian, DriveParams};

pub const DEFAULT_STEPS: usize = 4096;
pub const MIN_STEPS: usize = 16;
/// Wilson loops are refused when `|cos α|` is at or below this.
pub const DEGENERACY_GUARD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    /// `cos α = 2 sin θ √(d² − 1)/d²`, as produced by the Hamiltonian.
    SinForm,
    /// `θ → π/2 − θ` reparameterisation used for plotting.
    CosForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BerryMethod {
    ClosedSinForm,
    ClosedCosForm,
    WilsonLoop,
}

/// Wilson-loop phase of one energy branch.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchPhase {
    pub energy: f64,
    /// Principal value in `(−π, π]`.
    pub phase: f64,
    /// Representative in `[0, 2π)`.
    pub lifted: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BerryResult {
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub gamma_zero: f64,
    pub cos_alpha: f64,
    pub solid_angle: f64,
    pub method: BerryMethod,
    /// Ascending in energy; empty for closed forms.
    pub branches: Vec<BranchPhase>,
}

/// Wraps into `(−π, π]`.
pub fn wrap_phase(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Representative in `[0, 2π)`.
pub fn lift_phase(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Distance between two phases on the circle, in `[0, π]`.
pub fn phase_distance(a: f64, b: f64) -> f64 {
    wrap_phase(a - b).abs()
}

/// `Ω = 2π(1 − cos α)`
pub fn solid_angle(cos_alpha: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&cos_alpha) {
        return Err(Error::invalid(
            Guard::CosAlphaRange,
            format!("cos(alpha) = {cos_alpha}"),
        ));
    }
    Ok(TAU * (1.0 - cos_alpha))
}

/// The form's trigonometric factor `2 trig(θ) √(d² − 1)/d²`.
pub fn closed_cos_alpha(theta: f64, d: f64, form: ClosedForm) -> Result<f64> {
    match form {
        ClosedForm::SinForm => cos_alpha(theta, d),
        ClosedForm::CosForm => {
            if !(d >= 1.0) {
                return Err(Error::invalid(Guard::DBelowOne, format!("d = {d}")));
            }
            Ok(2.0 * theta.cos() * (d * d - 1.0).sqrt() / (d * d))
        }
    }
}

pub fn berry_closed(theta: f64, d: f64, form: ClosedForm) -> Result<BerryResult> {
    let ca = closed_cos_alpha(theta, d, form)?;
    let omega = TAU * (1.0 - ca);
    Ok(BerryResult {
        gamma_plus: omega / 2.0,
        gamma_minus: -omega / 2.0,
        gamma_zero: 0.0,
        cos_alpha: ca,
        solid_angle: omega,
        method: match form {
            ClosedForm::SinForm => BerryMethod::ClosedSinForm,
            ClosedForm::CosForm => BerryMethod::ClosedCosForm,
        },
        branches: Vec::new(),
    })
}

/// Instantaneous eigensystems of `H(φₖ)`, `φₖ = 2πk/steps`, `k < steps`.
pub fn eigenframes(dp: &DriveParams, steps: usize) -> Result<Vec<EigenSystem>> {
    (0..steps)
        .map(|k| {
            let phi = TAU * k as f64 / steps as f64;
            hermitian_eigs(&hamiltonian(phi, dp)?)
        })
        .collect()
}

/// `−arg ∏ₖ ⟨vₖ|vₖ₊₁⟩` around the closed loop (the last vector links back to
/// the first).
pub fn wilson_phase(loop_vectors: &[CVec3]) -> f64 {
    let n = loop_vectors.len();
    let product = (0..n).fold(ONE, |acc: Complex64, k| {
        let overlap = inner(&loop_vectors[k], &loop_vectors[(k + 1) % n]);
        // renormalise to keep the running product near the unit circle
        let z = acc * overlap;
        z / z.norm()
    });
    -product.arg()
}

/// Per-branch Wilson-loop phases for a sequence of eigensystems.
pub fn branch_phases(frames: &[EigenSystem]) -> [f64; 3] {
    std::array::from_fn(|b| {
        let path: Vec<CVec3> = frames.iter().map(|f| f.eigenvectors[b]).collect();
        wilson_phase(&path)
    })
}

/// Assembles a [`BerryResult`] from per-branch phases.
///
/// `γ₊` is taken from the branch at energy `−ħω cos α` and `γ₋` from the
/// branch at `+ħω cos α`; the zero-energy branch gives `γ₀`.
pub fn result_from_branches(energies: [f64; 3], phases: [f64; 3], ca: f64, dp: &DriveParams) -> BerryResult {
    let scale = dp.hbar * dp.omega_drive * ca;
    let nearest = |target: f64| {
        (0..3)
            .min_by(|&i, &j| (energies[i] - target).abs().total_cmp(&(energies[j] - target).abs()))
            .unwrap()
    };
    let plus = nearest(-scale);
    let minus = nearest(scale);
    let zero = nearest(0.0);
    let branches = (0..3)
        .map(|k| BranchPhase {
            energy: energies[k],
            phase: wrap_phase(phases[k]),
            lifted: lift_phase(phases[k]),
        })
        .collect();
    let gamma_plus = lift_phase(phases[plus]);
    let gamma_minus = -lift_phase(-phases[minus]);
    BerryResult {
        gamma_plus,
        gamma_minus,
        gamma_zero: wrap_phase(phases[zero]),
        cos_alpha: ca,
        solid_angle: TAU * (1.0 - ca),
        method: BerryMethod::WilsonLoop,
        branches,
    }
}

/// Gauge-invariant numerical Berry phases over one drive period.
pub fn berry_wilson_loop(theta: f64, d: f64, omega_drive: f64, steps: usize) -> Result<BerryResult> {
    let dp = DriveParams::new(theta, omega_drive, d)?;
    wilson_loop_for(&dp, steps)
}

pub fn wilson_loop_for(dp: &DriveParams, steps: usize) -> Result<BerryResult> {
    if steps < MIN_STEPS {
        return Err(Error::invalid(
            Guard::StepsTooFew,
            format!("steps = {steps} < {MIN_STEPS}"),
        ));
    }
    let ca = cos_alpha(dp.theta, dp.d)?;
    if ca.abs() <= DEGENERACY_GUARD || dp.omega_drive == 0.0 || dp.hbar == 0.0 {
        return Err(Error::DegenerateSpectrum { cos_alpha: ca });
    }
    let frames = eigenframes(dp, steps)?;
    let phases = branch_phases(&frames);
    Ok(result_from_branches(frames[0].eigenvalues, phases, ca, dp))
}

/// Does `{γ₊, γ₋}` match `{+π(1 − cos α), −π(1 − cos α)}` as sets, modulo 2π?
/// Returns the worst distance of the better of the two pairings.
pub fn setwise_discrepancy(gamma_plus: f64, gamma_minus: f64, ca: f64) -> f64 {
    let g = PI * (1.0 - ca);
    let direct = phase_distance(gamma_plus, g).max(phase_distance(gamma_minus, -g));
    let swapped = phase_distance(gamma_plus, -g).max(phase_distance(gamma_minus, g));
    direct.min(swapped)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureRow {
    pub theta: f64,
    pub d: f64,
    pub gamma_plus: f64,
}

/// `γ₊` in the cosine form over every `(d, θ)` combination, d-major.
pub fn figure_data(theta_grid: &[f64], d_values: &[f64]) -> Result<Vec<FigureRow>> {
    let mut rows = Vec::with_capacity(theta_grid.len() * d_values.len());
    for &d in d_values {
        for &theta in theta_grid {
            rows.push(FigureRow {
                theta,
                d,
                gamma_plus: berry_closed(theta, d, ClosedForm::CosForm)?.gamma_plus,
            });
        }
    }
    Ok(rows)
}

/// The section values `d ∈ {1, √2, 2, 3, 5}`.
pub fn section_d_values() -> [f64; 5] {
    [1.0, std::f64::consts::SQRT_2, 2.0, 3.0, 5.0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, SQRT_2};

    #[test]
    fn closed_cos_form_values() {
        assert_eq!(berry_closed(0.0, SQRT_2, ClosedForm::CosForm).unwrap().gamma_plus, 0.0);
        assert_eq!(berry_closed(0.9, 1.0, ClosedForm::CosForm).unwrap().gamma_plus, PI);
        let r = berry_closed(PI, 2.0, ClosedForm::CosForm).unwrap();
        assert!((r.gamma_plus - PI * (1.0 + 3f64.sqrt() / 2.0)).abs() < 1e-14);
        assert!((r.gamma_plus - 5.862_291_7).abs() < 1e-6);
        assert_eq!(r.gamma_minus, -r.gamma_plus);
        assert_eq!(r.gamma_plus, r.solid_angle / 2.0);
        assert!(berry_closed(0.3, 0.5, ClosedForm::SinForm).is_err());
    }

    #[test]
    fn solid_angle_values() {
        assert_eq!(solid_angle(1.0).unwrap(), 0.0);
        assert_eq!(solid_angle(0.0).unwrap(), TAU);
        assert!((solid_angle(0.75).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!(solid_angle(1.0 + 1e-9).is_err());
        assert!(solid_angle(-2.0).is_err());
    }

    #[test]
    fn phase_helpers() {
        assert_eq!(wrap_phase(PI), PI);
        assert!((wrap_phase(-PI) - PI).abs() < 1e-15);
        assert!((wrap_phase(3.0 * PI / 2.0) + FRAC_PI_2).abs() < 1e-15);
        assert!((lift_phase(-FRAC_PI_2) - 3.0 * FRAC_PI_2).abs() < 1e-15);
        assert!(phase_distance(0.1, TAU + 0.1) < 1e-15);
    }

    #[test]
    fn wilson_loop_reference_point() {
        let r = berry_wilson_loop(FRAC_PI_3, 2.0, 1.0, DEFAULT_STEPS).unwrap();
        assert!((r.cos_alpha - 0.75).abs() < 1e-15);
        assert!((r.gamma_plus - FRAC_PI_4).abs() < 1e-4, "{r:?}");
        assert!((r.gamma_minus + FRAC_PI_4).abs() < 1e-4);
        assert!(r.gamma_zero.abs() < 1e-4);
    }

    #[test]
    fn wilson_loop_guards() {
        assert!(matches!(
            berry_wilson_loop(0.0, 2.0, 1.0, 64),
            Err(Error::DegenerateSpectrum { .. })
        ));
        assert!(matches!(
            berry_wilson_loop(0.5, 2.0, 1.0, 8),
            Err(Error::InvalidParam { guard: Guard::StepsTooFew, .. })
        ));
        // d = √2 lies below the golden-ratio bound of the Hamiltonian
        assert!(matches!(
            berry_wilson_loop(FRAC_PI_2, SQRT_2, 1.0, 64),
            Err(Error::InvalidParam { guard: Guard::DBelowGoldenRatio, .. })
        ));
    }

    #[test]
    fn setwise_matching() {
        let g = PI * 0.25;
        assert!(setwise_discrepancy(g, -g, 0.75) < 1e-15);
        assert!(setwise_discrepancy(-g, g, 0.75) < 1e-15);
        assert!(setwise_discrepancy(g + 0.1, -g, 0.75) > 0.09);
    }

    #[test]
    fn figure_rows_are_d_major() {
        let rows = figure_data(&[0.0, PI], &[1.0, 2.0]).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!((rows[1].d, rows[1].theta), (1.0, PI));
        assert_eq!(rows[1].gamma_plus, PI);
        assert!(figure_data(&[0.0], &[0.5]).is_err());
    }
}
