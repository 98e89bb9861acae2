//! Driven Hamiltonian `H = iħ (∂B/∂t) B^H` along `φ₁ = −φ₂ = ωt`, and the
//! su(2) ⊂ su(3) spin operators that diagonalise it.

use serde::{Deserialize, Serialize};

use crate::algebra::{d_eb_d_phi, make_eb, root_of, AlgebraParams};
use crate::error::{Error, Guard, Result};
use crate::matrix::{c, cis, re, rel_residual, Matrix3, I, ONE};

/// `ζ` is rejected when `d⁴ − 4(d² − 1) sin²θ` drops below this.
pub const ZETA_TOL: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DriveParams {
    pub theta: f64,
    pub omega_drive: f64,
    pub hbar: f64,
    pub d: f64,
}

impl DriveParams {
    /// Natural units, `ħ = 1`.
    pub fn new(theta: f64, omega_drive: f64, d: f64) -> Result<Self> {
        Self::with_hbar(theta, omega_drive, 1.0, d)
    }

    pub fn with_hbar(theta: f64, omega_drive: f64, hbar: f64, d: f64) -> Result<Self> {
        for (name, x) in [("theta", theta), ("omega_drive", omega_drive), ("hbar", hbar)] {
            if !x.is_finite() {
                return Err(Error::invalid(Guard::NonFinite, format!("{name} = {x}")));
            }
        }
        // validates d
        AlgebraParams::tla(d, 0.0, 0.0)?;
        Ok(Self {
            theta,
            omega_drive,
            hbar,
            d,
        })
    }

    /// Period `T = 2π/ω` after which the Hamiltonian returns to itself.
    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.omega_drive
    }

    /// Parameters of `E_B` at drive phase `φ` (`φ₁ = φ`, `φ₂ = −φ`).
    pub fn algebra_at(&self, phi: f64) -> Result<AlgebraParams> {
        AlgebraParams::tla(self.d, phi, -phi)
    }
}

/// The eight su(3) generators `I_λ = λ_λ / 2` and their structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct GellMannBasis {
    pub generators: [Matrix3; 8],
    /// `f[λ][μ][ν]`, zero-based indices.
    pub structure_constants: [[[f64; 8]; 8]; 8],
}

impl GellMannBasis {
    /// `I_k` for `k` in `1..=8`.
    pub fn get(&self, k: usize) -> &Matrix3 {
        &self.generators[k - 1]
    }

    /// `f_{λμν}` with one-based indices.
    pub fn f(&self, l: usize, m: usize, n: usize) -> f64 {
        self.structure_constants[l - 1][m - 1][n - 1]
    }

    /// `I₊ = I₁ + i I₂`
    pub fn i_plus(&self) -> Matrix3 {
        *self.get(1) + *self.get(2) * I
    }

    /// `I₋ = I₁ − i I₂`
    pub fn i_minus(&self) -> Matrix3 {
        *self.get(1) - *self.get(2) * I
    }

    /// `V₊ = I₄ − i I₅`
    pub fn v_plus(&self) -> Matrix3 {
        *self.get(4) - *self.get(5) * I
    }

    /// `V₋ = I₄ + i I₅`
    pub fn v_minus(&self) -> Matrix3 {
        *self.get(4) + *self.get(5) * I
    }

    /// `U₊ = I₆ + i I₇`
    pub fn u_plus(&self) -> Matrix3 {
        *self.get(6) + *self.get(7) * I
    }

    /// `U₋ = I₆ − i I₇`
    pub fn u_minus(&self) -> Matrix3 {
        *self.get(6) - *self.get(7) * I
    }

    /// Hypercharge `Y = (2/√3) I₈`
    pub fn y(&self) -> Matrix3 {
        *self.get(8) * (2.0 / 3f64.sqrt())
    }
}

pub fn gell_mann_basis() -> GellMannBasis {
    let h = 0.5;
    let mut g = [Matrix3::zero(); 8];
    g[0][(0, 1)] = re(h);
    g[0][(1, 0)] = re(h);
    g[1][(0, 1)] = c(0.0, -h);
    g[1][(1, 0)] = c(0.0, h);
    g[2] = Matrix3::diag_real([h, -h, 0.0]);
    g[3][(0, 2)] = re(h);
    g[3][(2, 0)] = re(h);
    g[4][(0, 2)] = c(0.0, -h);
    g[4][(2, 0)] = c(0.0, h);
    g[5][(1, 2)] = re(h);
    g[5][(2, 1)] = re(h);
    g[6][(1, 2)] = c(0.0, -h);
    g[6][(2, 1)] = c(0.0, h);
    let s = h / 3f64.sqrt();
    g[7] = Matrix3::diag_real([s, s, -2.0 * s]);

    // tr(I_λ I_μ) = δ/2, so [I_λ, I_μ] = i f I_ν gives f = −2i tr([I_λ, I_μ] I_ν)
    let mut f = [[[0.0; 8]; 8]; 8];
    for l in 0..8 {
        for m in 0..8 {
            let comm = g[l].commutator(&g[m]);
            for n in 0..8 {
                f[l][m][n] = ((comm * g[n]).trace() * c(0.0, -2.0)).re;
            }
        }
    }
    GellMannBasis {
        generators: g,
        structure_constants: f,
    }
}

/// Spin-½ ladder operators embedded in su(3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinTriple {
    pub s_plus: Matrix3,
    pub s_minus: Matrix3,
    pub s3: Matrix3,
}

/// Residuals of the su(2) relations, see [`SpinTriple::closure`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinClosure {
    pub comm_plus_minus: f64,
    pub comm_3_plus: f64,
    pub comm_3_minus: f64,
    /// Absolute `max(||S₊²||_F, ||S₋²||_F)`.
    pub nilpotency: f64,
    pub adjointness: f64,
    pub trace_s3: f64,
}

impl SpinTriple {
    /// `S₁ = (S₊ + S₋)/2`
    pub fn s1(&self) -> Matrix3 {
        (self.s_plus + self.s_minus) * 0.5
    }

    /// `S₂ = (S₊ − S₋)/(2i)`
    pub fn s2(&self) -> Matrix3 {
        (self.s_plus - self.s_minus) * c(0.0, -0.5)
    }

    /// `κ = ½(S₊S₋ + S₋S₊) + S₃²`
    pub fn casimir(&self) -> Matrix3 {
        (self.s_plus * self.s_minus + self.s_minus * self.s_plus) * 0.5 + self.s3 * self.s3
    }

    pub fn closure(&self) -> SpinClosure {
        let (sp, sm, s3) = (self.s_plus, self.s_minus, self.s3);
        SpinClosure {
            comm_plus_minus: rel_residual(&sp.commutator(&sm), &(s3 * 2.0)),
            comm_3_plus: rel_residual(&s3.commutator(&sp), &sp),
            comm_3_minus: rel_residual(&s3.commutator(&sm), &(-sm)),
            nilpotency: (sp * sp).frobenius_norm().max((sm * sm).frobenius_norm()),
            adjointness: rel_residual(&sm, &sp.adjoint()),
            trace_s3: s3.trace().norm(),
        }
    }
}

/// `ζ = d² / √((d² − 1)(d⁴ − 4(d² − 1) sin²θ))`
pub fn zeta(theta: f64, d: f64) -> Result<f64> {
    if !(d > 1.0) {
        return Err(Error::invalid(Guard::DBelowOne, format!("zeta needs d > 1, got {d}")));
    }
    let d2 = d * d;
    let inner = d2 * d2 - 4.0 * (d2 - 1.0) * theta.sin().powi(2);
    if inner < ZETA_TOL {
        return Err(Error::DegenerateZeta { value: inner });
    }
    Ok(d2 / ((d2 - 1.0) * inner).sqrt())
}

/// Spin operators at `(θ, d)` assembled from Gell-Mann combinations.
///
/// Guards run in the order `d > 1`, `ζ` finite, then `d ≥ (1+√5)/2` (the
/// operator coefficients carry `√(d² − d − 1)`).
pub fn ladder_ops(theta: f64, d: f64) -> Result<SpinTriple> {
    if !theta.is_finite() {
        return Err(Error::invalid(Guard::NonFinite, format!("theta = {theta}")));
    }
    let z = zeta(theta, d)?;
    AlgebraParams::tla(d, 0.0, 0.0)?;

    let gm = gell_mann_basis();
    let s = root_of(d);
    let sd = d.sqrt();
    let d2 = d * d;
    let sin_t = theta.sin();
    let up = cis(-theta) + c(0.0, 2.0 * sin_t / d2);
    let down = cis(theta) - c(0.0, 2.0 * sin_t / d2);

    let s_plus = (gm.i_plus() * (-I * s * up) + gm.u_minus() * (I * sd * up)) * z;
    let s_minus = (gm.i_minus() * (I * s * down) - gm.u_plus() * (I * sd * down)) * z;

    let id3 = Matrix3::identity() * (1.0 / 3.0);
    let y = gm.y();
    let i3 = *gm.get(3);
    let proj1 = id3 + y * 0.5 + i3;
    let proj2 = id3 + y * 0.5 - i3;
    let proj3 = id3 - y;
    let inv = 1.0 / (1.0 - d2);
    let s3 = (proj1 * ((1.0 + d - d2) * inv) - proj2 - proj3 * (d * inv)
        + (gm.v_minus() + gm.v_plus()) * (sd * s * inv))
        * 0.5;

    Ok(SpinTriple {
        s_plus,
        s_minus,
        s3,
    })
}

/// `cos α = 2 sin θ √(d² − 1)/d²`
pub fn cos_alpha(theta: f64, d: f64) -> Result<f64> {
    if !(d >= 1.0) {
        return Err(Error::invalid(Guard::DBelowOne, format!("d = {d}")));
    }
    Ok(2.0 * theta.sin() * (d * d - 1.0).sqrt() / (d * d))
}

/// `B(θ, φ) = e^{iθ} I − (2i sin θ / d) E_B(φ, −φ)`
pub fn unitary_b(phi: f64, dp: &DriveParams) -> Result<Matrix3> {
    let p = dp.algebra_at(phi)?;
    let f = c(0.0, 2.0 * dp.theta.sin() / dp.d);
    Ok(Matrix3::identity() * cis(dp.theta) - make_eb(&p) * f)
}

/// `∂B/∂t = ω ∂B/∂φ`, exact.
pub fn unitary_b_dt(phi: f64, dp: &DriveParams) -> Result<Matrix3> {
    let p = dp.algebra_at(phi)?;
    let f = c(0.0, 2.0 * dp.theta.sin() / dp.d);
    Ok(d_eb_d_phi(&p) * (-f * dp.omega_drive))
}

/// `H(φ) = iħ (∂B/∂t) B^H`
pub fn hamiltonian(phi: f64, dp: &DriveParams) -> Result<Matrix3> {
    let b = unitary_b(phi, dp)?;
    let db = unitary_b_dt(phi, dp)?;
    Ok(db * b.adjoint() * c(0.0, dp.hbar))
}

/// Azimuth of the spin-field direction at drive phase `φ`.
///
/// With `S± = S₁ ± iS₂` built from the standard Gell-Mann matrices the
/// field winds clockwise in the `S₁S₂` plane as `φ` grows.
pub fn beta_azimuth(phi: f64) -> f64 {
    -phi
}

/// `−4ωħ sin θ √(d² − 1) d⁻² (sin α cos β S₁ + sin α sin β S₂ + cos α S₃)`
/// with `sin α ≥ 0`.
pub fn spin_decomposition(dp: &DriveParams, beta_azimuth: f64) -> Result<Matrix3> {
    let spins = ladder_ops(dp.theta, dp.d)?;
    let ca = cos_alpha(dp.theta, dp.d)?;
    let sa = (1.0 - ca * ca).max(0.0).sqrt();
    let prefactor =
        -4.0 * dp.omega_drive * dp.hbar * dp.theta.sin() * (dp.d * dp.d - 1.0).sqrt() / (dp.d * dp.d);
    let field = spins.s1() * (sa * beta_azimuth.cos())
        + spins.s2() * (sa * beta_azimuth.sin())
        + spins.s3 * ca;
    Ok(field * prefactor)
}

/// `rel_residual` between [`hamiltonian`] and its spin decomposition.
pub fn decomposition_residual(phi: f64, dp: &DriveParams) -> Result<f64> {
    let h = hamiltonian(phi, dp)?;
    let rhs = spin_decomposition(dp, beta_azimuth(phi))?;
    Ok(rel_residual(&h, &rhs))
}

/// Predicted spectrum `{−ħω cos α, 0, ħω cos α}`, ascending.
pub fn predicted_spectrum(dp: &DriveParams) -> Result<[f64; 3]> {
    let e = (dp.hbar * dp.omega_drive * cos_alpha(dp.theta, dp.d)?).abs();
    Ok([-e, 0.0, e])
}

/// `e^{−iφN} M e^{iφN}`, `N = diag(0, 1, 0)`.
pub fn rotate_about_middle(m: &Matrix3, phi: f64) -> Matrix3 {
    let r = Matrix3::diag([ONE, cis(-phi), ONE]);
    r * *m * r.adjoint()
}
