//! Explicit 3×3 representation of the reduced BWM algebra and its relation
//! checkers.
//!
//! `E_A` is diagonal, `E_B = U E_A U⁻¹`, `A = diag(q, q⁻², −q⁻¹)` and
//! `B = U A U⁻¹`. The phases `φ₁`, `φ₂` enter `E_B`, `U` and `B` only.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Guard, Result};
use crate::matrix::{cis, re, rel_residual, Matrix3, ZERO};
use crate::GOLDEN_RATIO;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Slack on the golden-ratio lower bound so that `d = (1+√5)/2` computed in
/// floating point is admitted.
const GOLDEN_SLACK: f64 = 1e-12;

/// Below this `|q − q⁻¹|` the skein parameter is treated as zero.
const OMEGA_SKEIN_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamMode {
    /// `d = q + 1 + q⁻¹`; needed for `A`, `B` and the full BWM suite.
    Coupled,
    /// `d` free; only `E_A`, `E_B`, `U` are available.
    TlaOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraParams {
    q: Option<f64>,
    d: f64,
    phi1: f64,
    phi2: f64,
    mode: ParamMode,
}

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(Guard::NonFinite, format!("{name} = {x}")))
    }
}

fn check_tla_domain(d: f64) -> Result<()> {
    check_finite("d", d)?;
    if d <= 0.0 {
        return Err(Error::invalid(Guard::DNotPositive, format!("d = {d}")));
    }
    if d == 1.0 {
        return Err(Error::invalid(Guard::DEqualsOne, "d - 1 appears as a denominator"));
    }
    if d < GOLDEN_RATIO - GOLDEN_SLACK {
        return Err(Error::invalid(
            Guard::DBelowGoldenRatio,
            format!("d = {d} < (1+sqrt 5)/2 makes sqrt(d^2 - d - 1) imaginary"),
        ));
    }
    Ok(())
}

impl AlgebraParams {
    /// Coupled mode: `d` is derived from `q`.
    pub fn coupled(q: f64, phi1: f64, phi2: f64) -> Result<Self> {
        check_finite("phi1", phi1)?;
        check_finite("phi2", phi2)?;
        let d = d_of_q(q)?;
        check_tla_domain(d)?;
        Ok(Self {
            q: Some(q),
            d,
            phi1,
            phi2,
            mode: ParamMode::Coupled,
        })
    }

    /// Coupled mode with an explicit `d`, which must equal `q + 1 + q⁻¹`
    /// to within 1e-12 relative.
    pub fn with_q_and_d(q: f64, d: f64, phi1: f64, phi2: f64) -> Result<Self> {
        let p = Self::coupled(q, phi1, phi2)?;
        check_finite("d", d)?;
        if (p.d - d).abs() > 1e-12 * p.d.abs().max(1.0) {
            return Err(Error::invalid(
                Guard::DNotCoupled,
                format!("d = {d} but q + 1 + 1/q = {}", p.d),
            ));
        }
        Ok(p)
    }

    /// Temperley–Lieb-only mode with free `d ≥ (1+√5)/2`.
    pub fn tla(d: f64, phi1: f64, phi2: f64) -> Result<Self> {
        check_finite("phi1", phi1)?;
        check_finite("phi2", phi2)?;
        check_tla_domain(d)?;
        Ok(Self {
            q: None,
            d,
            phi1,
            phi2,
            mode: ParamMode::TlaOnly,
        })
    }

    pub fn q(&self) -> Option<f64> {
        self.q
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }

    pub fn phi2(&self) -> f64 {
        self.phi2
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    fn require_q(&self) -> Result<f64> {
        self.q
            .ok_or_else(|| Error::invalid(Guard::QMissing, "operation needs coupled parameters"))
    }

    /// `ω = q − q⁻¹`
    pub fn omega_skein(&self) -> Result<f64> {
        let q = self.require_q()?;
        Ok(q - 1.0 / q)
    }

    /// `σ = q⁻²`
    pub fn sigma(&self) -> Result<f64> {
        let q = self.require_q()?;
        Ok(q.powi(-2))
    }

    /// `√(d² − d − 1)`, clamped at zero on the golden-ratio boundary.
    pub(crate) fn root(&self) -> f64 {
        root_of(self.d)
    }
}

pub(crate) fn root_of(d: f64) -> f64 {
    (d * d - d - 1.0).max(0.0).sqrt()
}

/// `d = q + 1 + q⁻¹`
pub fn d_of_q(q: f64) -> Result<f64> {
    check_finite("q", q)?;
    if q == 0.0 {
        return Err(Error::invalid(Guard::QZero, "q^-1 is undefined"));
    }
    Ok(q + 1.0 + 1.0 / q)
}

/// Loop value from the skein parameters: `1 − (σ − σ⁻¹)/ω`.
pub fn d_topological(omega_skein: f64, sigma: f64) -> Result<f64> {
    check_finite("omega_skein", omega_skein)?;
    check_finite("sigma", sigma)?;
    if omega_skein == 0.0 {
        return Err(Error::invalid(
            Guard::OmegaSkeinZero,
            "omega_skein = 0 (q = ±1); use d_of_q instead",
        ));
    }
    if sigma == 0.0 {
        return Err(Error::invalid(Guard::NonFinite, "sigma = 0 has no inverse"));
    }
    Ok(1.0 - (sigma - 1.0 / sigma) / omega_skein)
}

pub fn make_ea(p: &AlgebraParams) -> Matrix3 {
    Matrix3::diag_real([0.0, p.d, 0.0])
}

pub fn make_eb(p: &AlgebraParams) -> Matrix3 {
    let d = p.d;
    let s = p.root();
    let sd = d.sqrt();
    let (e1, e2, e12) = (cis(p.phi1), cis(p.phi2), cis(p.phi1 + p.phi2));
    Matrix3::from_rows([
        [re(s * s / d), e1 * (s / d), e12 * (-s / sd)],
        [e1.conj() * (s / d), re(1.0 / d), e2 * (-1.0 / sd)],
        [e12.conj() * (-s / sd), e2.conj() * (-1.0 / sd), re(1.0)],
    ])
}

pub fn make_u(p: &AlgebraParams) -> Matrix3 {
    let d = p.d;
    let s = p.root();
    let sd = d.sqrt();
    let (e1, e2, e12) = (cis(p.phi1), cis(p.phi2), cis(p.phi1 + p.phi2));
    Matrix3::from_rows([
        [re(1.0 / ((d - 1.0) * d)), e1 * (-s / d), e12 * (-s / (sd * (d - 1.0)))],
        [e1.conj() * (s / d), re(-1.0 / d), e2 * (1.0 / sd)],
        [e12.conj() * (s / (sd * (d - 1.0))), e2.conj() * (1.0 / sd), re(-(d - 2.0) / (d - 1.0))],
    ])
}

/// `diag(q, q⁻², −q⁻¹)`; requires coupled parameters.
pub fn make_a(p: &AlgebraParams) -> Result<Matrix3> {
    let q = p.require_q()?;
    Ok(Matrix3::diag_real([q, q.powi(-2), -1.0 / q]))
}

/// Explicit `B = U A U⁻¹`; requires coupled parameters.
pub fn make_b(p: &AlgebraParams) -> Result<Matrix3> {
    let q = p.require_q()?;
    let d = p.d;
    let s = p.root();
    let sd = d.sqrt();
    let (e1, e2, e12) = (cis(p.phi1), cis(p.phi2), cis(p.phi1 + p.phi2));
    let corner = -s / (q * q * (d - 1.0) * sd);
    Ok(Matrix3::from_rows([
        [re(1.0 / (q.powi(4) * (d - 1.0) * d)), e1 * (s / (d * q)), e12 * corner],
        [e1.conj() * (s / (d * q)), re(q * q / d), e2 * (q / sd)],
        [e12.conj() * corner, e2.conj() * (q / sd), re((d - 2.0) / (d - 1.0))],
    ]))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub name: String,
    pub residual: f64,
    pub pass: bool,
}

/// Named residuals of a relation suite. `pass ⇔ residual < tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub entries: Vec<RelationEntry>,
    pub tolerance: f64,
}

impl RelationReport {
    pub fn new(tolerance: f64) -> Self {
        Self {
            entries: Vec::new(),
            tolerance,
        }
    }

    pub fn record(&mut self, name: impl Into<String>, lhs: &Matrix3, rhs: &Matrix3) {
        self.record_residual(name, rel_residual(lhs, rhs));
    }

    pub fn record_residual(&mut self, name: impl Into<String>, residual: f64) {
        // NaN never passes
        let pass = residual < self.tolerance;
        self.entries.push(RelationEntry {
            name: name.into(),
            residual,
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn worst(&self) -> f64 {
        self.entries.iter().map(|e| e.residual).fold(0.0, f64::max)
    }

    pub fn get(&self, name: &str) -> Option<&RelationEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn extend(&mut self, other: RelationReport) {
        for e in other.entries {
            self.record_residual(e.name, e.residual);
        }
    }
}

/// Temperley–Lieb relations `E_A E_B E_A = E_A`, `E_B E_A E_B = E_B`,
/// `E_A² = d E_A`, `E_B² = d E_B`.
pub fn check_tla(ea: &Matrix3, eb: &Matrix3, d: f64, tolerance: f64) -> RelationReport {
    let mut r = RelationReport::new(tolerance);
    r.record("E_A E_B E_A = E_A", &(*ea * *eb * *ea), ea);
    r.record("E_B E_A E_B = E_B", &(*eb * *ea * *eb), eb);
    r.record("E_A^2 = d E_A", &(*ea * *ea), &(*ea * d));
    r.record("E_B^2 = d E_B", &(*eb * *eb), &(*eb * d));
    r
}

/// `ABA = BAB`
pub fn check_braid(a: &Matrix3, b: &Matrix3, tolerance: f64) -> RelationReport {
    let mut r = RelationReport::new(tolerance);
    r.record("ABA = BAB", &(*a * *b * *a), &(*b * *a * *b));
    r
}

/// Every line of the reduced BWM relations for the representation at `p`,
/// with `ω = q − q⁻¹` and `σ = q⁻²`.
///
/// At `q = ±1` the skein parameter vanishes: the skein lines are replaced by
/// `A = A⁻¹`, `B = B⁻¹` and the loop value falls back to `q + 1 + q⁻¹`.
pub fn check_bwm_suite(p: &AlgebraParams, tolerance: f64) -> Result<RelationReport> {
    let q = p.require_q()?;
    let omega = p.omega_skein()?;
    let sigma = p.sigma()?;
    let ea = make_ea(p);
    let eb = make_eb(p);
    let a = make_a(p)?;
    let b = make_b(p)?;
    let ai = a.inverse()?;
    let bi = b.inverse()?;
    let id = Matrix3::identity();

    let degenerate = omega.abs() <= OMEGA_SKEIN_EPS;
    let loop_value = if degenerate {
        d_of_q(q)?
    } else {
        d_topological(omega, sigma)?
    };

    let mut r = RelationReport::new(tolerance);
    if degenerate {
        r.record("A = A^-1 (omega_skein = 0)", &a, &ai);
        r.record("B = B^-1 (omega_skein = 0)", &b, &bi);
    } else {
        r.record("A - A^-1 = w(I - E_A)", &(a - ai), &((id - ea) * omega));
        r.record("B - B^-1 = w(I - E_B)", &(b - bi), &((id - eb) * omega));
    }
    r.record("ABA = BAB", &(a * b * a), &(b * a * b));
    r.record("E_A E_B E_A = E_A", &(ea * eb * ea), &ea);
    r.record("E_B E_A E_B = E_B", &(eb * ea * eb), &eb);
    r.record("E_A A = s E_A", &(ea * a), &(ea * sigma));
    r.record("A E_A = s E_A", &(a * ea), &(ea * sigma));
    r.record("E_B B = s E_B", &(eb * b), &(eb * sigma));
    r.record("B E_B = s E_B", &(b * eb), &(eb * sigma));
    r.record("A B E_A = E_B E_A", &(a * b * ea), &(eb * ea));
    r.record("E_B A B = E_B E_A", &(eb * a * b), &(eb * ea));
    r.record("B A E_B = E_A E_B", &(b * a * eb), &(ea * eb));
    r.record("E_A B A = E_A E_B", &(ea * b * a), &(ea * eb));
    r.record("A E_B A = B^-1 E_A B^-1", &(a * eb * a), &(bi * ea * bi));
    r.record("B E_A B = A^-1 E_B A^-1", &(b * ea * b), &(ai * eb * ai));
    r.record("E_A E_B A = E_A B^-1", &(ea * eb * a), &(ea * bi));
    r.record("E_B E_A B = E_B A^-1", &(eb * ea * b), &(eb * ai));
    r.record("A E_B E_A = B^-1 E_A", &(a * eb * ea), &(bi * ea));
    r.record("B E_A E_B = A^-1 E_B", &(b * ea * eb), &(ai * eb));
    r.record("E_A B E_A = s^-1 E_A", &(ea * b * ea), &(ea * (1.0 / sigma)));
    r.record("E_B A E_B = s^-1 E_B", &(eb * a * eb), &(eb * (1.0 / sigma)));
    r.record("E_A^2 = d E_A", &(ea * ea), &(ea * loop_value));
    r.record("E_B^2 = d E_B", &(eb * eb), &(eb * loop_value));
    Ok(r)
}

/// Derivative of `E_B` with respect to `φ` along `φ₁ = −φ₂ = φ`.
///
/// Only the `e^{±iφ}` entries depend on `φ`; the corner entries carry
/// `e^{±i(φ₁+φ₂)} = 1`. Equals `i [E_B, N]` with `N = diag(0, 1, 0)`.
pub fn d_eb_d_phi(p: &AlgebraParams) -> Matrix3 {
    let i = crate::matrix::I;
    let weights = Matrix3::from_rows([[ZERO, i, ZERO], [-i, ZERO, -i], [ZERO, i, ZERO]]);
    make_eb(p).hadamard(&weights)
}
