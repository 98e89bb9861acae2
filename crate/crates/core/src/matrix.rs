//! Dense 3×3 complex matrices.
//!
//! Every operator in the crate lives in this type: representation matrices,
//! spectral-parameter solutions, Hamiltonians and spin operators. Storage is
//! row-major, `m[row][col]`.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Column vector in C³.
pub type CVec3 = [Complex64; 3];

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Hermiticity tolerance for [`hermitian_eigs`], relative to `max(1, ||M||_F)`.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Off-diagonal Frobenius mass at which Jacobi stops, relative to `max(1, ||M||_F)`.
pub const JACOBI_TOL: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 50;
/// `inverse` rejects `|det| <= SINGULAR_TOL * max(1, ||M||_F^3)`.
pub const SINGULAR_TOL: f64 = 1e-12;

/// `e^{i x}`
#[inline]
pub fn cis(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix3 {
    m: [[Complex64; 3]; 3],
}

impl Default for Matrix3 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Matrix3 {
    pub const fn from_rows(m: [[Complex64; 3]; 3]) -> Self {
        Self { m }
    }

    /// Checked constructor: rejects NaN/Inf entries.
    pub fn try_from_rows(m: [[Complex64; 3]; 3]) -> Result<Self> {
        let out = Self { m };
        if out.is_finite() {
            Ok(out)
        } else {
            Err(Error::invalid(
                crate::error::Guard::NonFinite,
                "matrix entry is NaN or infinite",
            ))
        }
    }

    pub fn from_real(m: [[f64; 3]; 3]) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] = re(m[i][j]);
            }
        }
        out
    }

    pub const fn zero() -> Self {
        Self { m: [[ZERO; 3]; 3] }
    }

    pub const fn identity() -> Self {
        Self {
            m: [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]],
        }
    }

    pub fn diag(d: [Complex64; 3]) -> Self {
        let mut out = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            out.m[i][i] = v;
        }
        out
    }

    pub fn diag_real(d: [f64; 3]) -> Self {
        Self::diag(d.map(re))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[CVec3; 3]) -> Self {
        let mut out = Self::zero();
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                out.m[i][j] = col[i];
            }
        }
        out
    }

    pub fn rows(&self) -> &[[Complex64; 3]; 3] {
        &self.m
    }

    pub fn column(&self, j: usize) -> CVec3 {
        [self.m[0][j], self.m[1][j], self.m[2][j]]
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] = self.m[j][i].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `||M - M^H||_F`
    pub fn hermiticity_defect(&self) -> f64 {
        (*self - self.adjoint()).frobenius_norm()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        out.m.iter_mut().flatten().for_each(|z| *z *= s);
        out
    }

    /// Entry-wise product.
    pub fn hadamard(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] *= other.m[i][j];
            }
        }
        out
    }

    /// `[self, other]`
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn mul_vec(&self, v: &CVec3) -> CVec3 {
        let mut out = [ZERO; 3];
        for (i, row) in self.m.iter().enumerate() {
            out[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
        }
        out
    }

    /// Inverse through the adjugate. Fails when `|det|` falls below the
    /// scale-aware threshold `1e-12 * max(1, ||M||_F^3)`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let threshold = SINGULAR_TOL * self.frobenius_norm().powi(3).max(1.0);
        if !(det.norm() > threshold) {
            return Err(Error::SingularMatrix {
                det: det.norm(),
                threshold,
            });
        }
        let m = &self.m;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
        };
        // adj[i][j] = cofactor(j, i)
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Ok(Self::from_rows(adj).scale(det.inv()))
    }

    /// Conjugation `self · m · self^{-1}`.
    pub fn conjugate(&self, m: &Self) -> Result<Self> {
        Ok(*self * *m * self.inverse()?)
    }
}

impl Index<(usize, usize)> for Matrix3 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.m[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.m[i][j]
    }
}

impl Add for Matrix3 {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for Matrix3 {
    fn add_assign(&mut self, rhs: Self) {
        for i in 0..3 {
            for j in 0..3 {
                self.m[i][j] += rhs.m[i][j];
            }
        }
    }
}

impl Sub for Matrix3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Matrix3 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl Mul for Matrix3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] = (0..3).map(|k| self.m[i][k] * rhs.m[k][j]).sum();
            }
        }
        out
    }
}

impl Mul<Complex64> for Matrix3 {
    type Output = Self;
    fn mul(self, s: Complex64) -> Self {
        self.scale(s)
    }
}

impl Mul<Matrix3> for Complex64 {
    type Output = Matrix3;
    fn mul(self, m: Matrix3) -> Matrix3 {
        m.scale(self)
    }
}

impl Mul<f64> for Matrix3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(re(s))
    }
}

impl Mul<Matrix3> for f64 {
    type Output = Matrix3;
    fn mul(self, m: Matrix3) -> Matrix3 {
        m.scale(re(self))
    }
}

/// `||lhs - rhs||_F / max(1, ||lhs||_F, ||rhs||_F)`
pub fn rel_residual(lhs: &Matrix3, rhs: &Matrix3) -> f64 {
    let scale = 1f64.max(lhs.frobenius_norm()).max(rhs.frobenius_norm());
    (*lhs - *rhs).frobenius_norm() / scale
}

pub fn inner(a: &CVec3, b: &CVec3) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(a: &CVec3) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Spectral decomposition of a Hermitian matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSystem {
    /// Ascending.
    pub eigenvalues: [f64; 3],
    /// Unit-norm, `eigenvectors[k]` belongs to `eigenvalues[k]`.
    pub eigenvectors: [CVec3; 3],
}

impl EigenSystem {
    pub fn vectors_as_columns(&self) -> Matrix3 {
        Matrix3::from_columns(&self.eigenvectors)
    }

    /// `V Λ V^H`
    pub fn reconstruct(&self) -> Matrix3 {
        let v = self.vectors_as_columns();
        v * Matrix3::diag_real(self.eigenvalues) * v.adjoint()
    }
}

fn off_diagonal_norm(a: &Matrix3) -> f64 {
    let mut s = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic complex Jacobi eigensolver for Hermitian 3×3 matrices.
///
/// Pivots are visited in the fixed order (0,1), (0,2), (1,2). Each rotation
/// first removes the phase of the pivot, then applies the real Jacobi
/// rotation. Output is ascending with each eigenvector's first non-negligible
/// component made real and positive, so identical input gives identical
/// output.
pub fn hermitian_eigs(m: &Matrix3) -> Result<EigenSystem> {
    if !m.is_finite() {
        return Err(Error::invalid(
            crate::error::Guard::NonFinite,
            "matrix entry is NaN or infinite",
        ));
    }
    let scale = m.frobenius_norm().max(1.0);
    let defect = m.hermiticity_defect();
    if defect >= HERMITICITY_TOL * scale {
        return Err(Error::NotHermitian { defect });
    }

    let mut a = (*m + m.adjoint()) * 0.5;
    let mut v = Matrix3::identity();
    let threshold = JACOBI_TOL * scale;

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            converged = true;
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            let apq = a[(p, q)];
            let mag = apq.norm();
            if mag == 0.0 {
                continue;
            }
            let phase = (apq / mag).conj();
            let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * mag);
            let t = if tau.abs() > 1e150 {
                0.5 / tau
            } else {
                tau.signum() / (tau.abs() + (tau * tau + 1.0).sqrt())
            };
            let cs = 1.0 / (t * t + 1.0).sqrt();
            let sn = t * cs;

            let mut w = Matrix3::identity();
            w[(p, p)] = re(cs);
            w[(p, q)] = re(sn);
            w[(q, p)] = phase * (-sn);
            w[(q, q)] = phase * cs;

            a = w.adjoint() * a * w;
            a[(p, q)] = ZERO;
            a[(q, p)] = ZERO;
            for i in 0..3 {
                a[(i, i)].im = 0.0;
            }
            v = v * w;
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a);
        if off >= threshold {
            return Err(Error::NoConvergence {
                sweeps: JACOBI_MAX_SWEEPS,
                off_diagonal: off,
            });
        }
    }

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));

    let eigenvalues = order.map(|k| a[(k, k)].re);
    let eigenvectors = order.map(|k| fix_phase(v.column(k)));
    Ok(EigenSystem {
        eigenvalues,
        eigenvectors,
    })
}

/// Normalises `x` and rotates it so the first component above 1e-12 in
/// modulus is real positive.
pub fn fix_phase(x: CVec3) -> CVec3 {
    let n = vec_norm(&x);
    let mut out = x.map(|z| z / n);
    if let Some(lead) = out.iter().find(|z| z.norm() > 1e-12).copied() {
        let rot = lead.conj() / lead.norm();
        out = out.map(|z| z * rot);
    }
    out
}
