//! Numerical toolkit for a three-dimensional representation of the
//! Birman–Wenzl–Murakami algebra.
//!
//! * [`matrix`]: 3×3 complex linear algebra and a Jacobi Hermitian eigensolver.
//! * [`algebra`]: the representation matrices `E_A`, `E_B`, `U`, `A`, `B` and
//!   relation checkers for the braid, Temperley–Lieb and reduced BWM suites.
//! * [`yang_baxter`]: rapidity-to-angle map, spectral-parameter solutions and
//!   the reduced relativistic Yang–Baxter residual.
//! * [`spin`]: the driven Hamiltonian, Gell-Mann basis and embedded su(2).
//! * [`berry`]: closed-form and Wilson-loop Berry phases.

pub mod algebra;
pub mod berry;
pub mod error;
pub mod matrix;
pub mod spin;
pub mod yang_baxter;

pub use algebra::{AlgebraParams, ParamMode, RelationEntry, RelationReport};
pub use berry::{BerryMethod, BerryResult, ClosedForm};
pub use error::{Error, Guard, Result};
pub use matrix::{hermitian_eigs, rel_residual, CVec3, EigenSystem, Matrix3};
pub use spin::{DriveParams, GellMannBasis, SpinTriple};
pub use yang_baxter::{Sign, SpectralParams, UnitaryRPair};

/// `(1 + √5) / 2`, the smallest `d` for which `√(d² − d − 1)` is real.
pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;
