use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain guards that reject a parameter point. The string form is stable and
/// used as the machine-readable skip reason in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Guard {
    NonFinite,
    QZero,
    DNotPositive,
    DBelowGoldenRatio,
    DEqualsOne,
    DBelowOne,
    DNotCoupled,
    QMissing,
    OmegaSkeinZero,
    CosAlphaRange,
    StepsTooFew,
}

impl Guard {
    pub fn name(self) -> &'static str {
        match self {
            Guard::NonFinite => "non_finite",
            Guard::QZero => "q_zero",
            Guard::DNotPositive => "d_not_positive",
            Guard::DBelowGoldenRatio => "d_below_golden_ratio",
            Guard::DEqualsOne => "d_equals_one",
            Guard::DBelowOne => "d_below_one",
            Guard::DNotCoupled => "d_not_coupled_to_q",
            Guard::QMissing => "q_missing",
            Guard::OmegaSkeinZero => "omega_skein_zero",
            Guard::CosAlphaRange => "cos_alpha_out_of_range",
            Guard::StepsTooFew => "steps_too_few",
        }
    }
}

impl std::fmt::Display for Guard {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("singular matrix: |det| = {det:e} is below threshold {threshold:e}")]
    SingularMatrix { det: f64, threshold: f64 },

    #[error("matrix is not Hermitian: ||M - M^H||_F = {defect:e}")]
    NotHermitian { defect: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("invalid parameter ({guard}): {detail}")]
    InvalidParam { guard: Guard, detail: String },

    #[error("velocity addition pole: 1 + beta^2 u v = {denominator:e}")]
    PoleEncountered { denominator: f64 },

    #[error("rapidity map needs 0 < d < 2, got d = {d}")]
    DomainError { d: f64 },

    #[error("rapidity map produced |z| = {modulus} instead of 1")]
    NonUnimodular { modulus: f64 },

    #[error("zeta diverges: d^4 - 4 (d^2 - 1) sin^2(theta) = {value:e}")]
    DegenerateZeta { value: f64 },

    #[error("spectrum is degenerate: |cos(alpha)| = {cos_alpha:e}")]
    DegenerateSpectrum { cos_alpha: f64 },
}

impl Error {
    pub(crate) fn invalid(guard: Guard, detail: impl Into<String>) -> Self {
        Error::InvalidParam {
            guard,
            detail: detail.into(),
        }
    }

    /// Short stable identifier of the failure, suitable as a skip reason.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::SingularMatrix { .. } => "singular_matrix",
            Error::NotHermitian { .. } => "not_hermitian",
            Error::NoConvergence { .. } => "no_convergence",
            Error::InvalidParam { guard, .. } => guard.name(),
            Error::PoleEncountered { .. } => "pole_encountered",
            Error::DomainError { .. } => "rapidity_domain",
            Error::NonUnimodular { .. } => "non_unimodular",
            Error::DegenerateZeta { .. } => "degenerate_zeta",
            Error::DegenerateSpectrum { .. } => "degenerate_spectrum",
        }
    }
}
