//! Yang–Baxterization of the Temperley–Lieb generators.
//!
//! The spectral-parameter solutions are `A(u) = ρ(u)(I + F(u) E_A)` and
//! `B(u) = ρ(u)(I + F(u) E_B)` with `F(u) = (e^{−2iθ} − 1)/d`, `ρ = e^{iθ}`,
//! and `θ(u)` defined through the unimodular ratio returned by
//! [`rapidity_ratio`]. Rewritten in `θ` they become
//! `e^{iθ} I − f(θ) E` with `f(θ) = 2i sin θ / d`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{make_ea, make_eb, make_u, AlgebraParams};
use crate::error::{Error, Result};
use crate::matrix::{cis, rel_residual, Matrix3, ONE};

/// `|1 + β²uv|` below this is a pole of the velocity addition.
pub const POLE_TOL: f64 = 1e-12;
/// Allowed deviation of `|e^{−2iθ}|` from one.
pub const UNIMODULAR_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl TryFrom<i32> for Sign {
    type Error = String;
    fn try_from(v: i32) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("epsilon must be +1 or -1, got {other}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralParams {
    pub u: f64,
    pub v: f64,
    pub beta_rapidity: f64,
    pub epsilon: Sign,
    pub d: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl SpectralParams {
    pub fn algebra(&self) -> Result<AlgebraParams> {
        AlgebraParams::tla(self.d, self.phi1, self.phi2)
    }
}

/// Pair of unitary solutions at one spectral point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitaryRPair {
    pub a_theta: Matrix3,
    pub b_theta: Matrix3,
    pub theta: f64,
}

/// Relativistic addition `(u + v)/(1 + β²uv)`.
pub fn velocity_add(u: f64, v: f64, beta: f64) -> Result<f64> {
    let denominator = 1.0 + beta * beta * u * v;
    if denominator.abs() < POLE_TOL {
        return Err(Error::PoleEncountered { denominator });
    }
    Ok((u + v) / denominator)
}

/// `e^{−2iθ(u)} = (β²u² + 2iεβu g + 1)/(β²u² − 2iεβu g + 1)`, `g = √(d²/(4 − d²))`.
pub fn rapidity_ratio(u: f64, s: &SpectralParams) -> Result<Complex64> {
    let d = s.d;
    if !(d > 0.0 && d < 2.0) {
        return Err(Error::DomainError { d });
    }
    let g = (d * d / (4.0 - d * d)).sqrt();
    let b2u2 = s.beta_rapidity * s.beta_rapidity * u * u;
    let im = 2.0 * s.epsilon.value() * s.beta_rapidity * u * g;
    let z = Complex64::new(b2u2 + 1.0, im) / Complex64::new(b2u2 + 1.0, -im);
    let modulus = z.norm();
    if !((modulus - 1.0).abs() <= UNIMODULAR_TOL) {
        return Err(Error::NonUnimodular { modulus });
    }
    Ok(z)
}

/// Principal-branch angle `θ = −arg(z)/2 ∈ [−π/2, π/2)`.
pub fn theta_of_u(u: f64, s: &SpectralParams) -> Result<f64> {
    Ok(-rapidity_ratio(u, s)?.arg() / 2.0)
}

/// `e^{iθ} I − (2i sin θ / d) E` for both generators.
pub fn make_r_theta(theta: f64, p: &AlgebraParams) -> UnitaryRPair {
    let f = Complex64::new(0.0, 2.0 * theta.sin() / p.d());
    let rho = Matrix3::identity() * cis(theta);
    UnitaryRPair {
        a_theta: rho - make_ea(p) * f,
        b_theta: rho - make_eb(p) * f,
        theta,
    }
}

/// `ρ(u)(I + F(u) E)` built from the rapidity ratio directly.
pub fn make_r_u(u: f64, s: &SpectralParams) -> Result<UnitaryRPair> {
    let p = s.algebra()?;
    let z = rapidity_ratio(u, s)?;
    let theta = -z.arg() / 2.0;
    let big_f = (z - ONE) / p.d();
    let rho = cis(theta);
    let id = Matrix3::identity();
    Ok(UnitaryRPair {
        a_theta: (id + make_ea(&p) * big_f) * rho,
        b_theta: (id + make_eb(&p) * big_f) * rho,
        theta,
    })
}

/// Relative residual of `A(u) B(w) A(v) = B(v) A(w) B(u)` with
/// `w = (u + v)/(1 + β²uv)`.
pub fn ybe_residual(s: &SpectralParams) -> Result<f64> {
    let w = velocity_add(s.u, s.v, s.beta_rapidity)?;
    let ru = make_r_u(s.u, s)?;
    let rv = make_r_u(s.v, s)?;
    let rw = make_r_u(w, s)?;
    let lhs = ru.a_theta * rw.b_theta * rv.a_theta;
    let rhs = rv.b_theta * rw.a_theta * ru.b_theta;
    Ok(rel_residual(&lhs, &rhs))
}

/// `rel_residual(B(θ), U A(θ) U⁻¹)`
pub fn conjugation_residual(pair: &UnitaryRPair, p: &AlgebraParams) -> Result<f64> {
    let u = make_u(p);
    Ok(rel_residual(&pair.b_theta, &u.conjugate(&pair.a_theta)?))
}

/// Worst unitarity defect `rel_residual(M^H M, I)` of the pair.
pub fn unitarity_residual(pair: &UnitaryRPair) -> f64 {
    let id = Matrix3::identity();
    rel_residual(&(pair.a_theta.adjoint() * pair.a_theta), &id)
        .max(rel_residual(&(pair.b_theta.adjoint() * pair.b_theta), &id))
}
