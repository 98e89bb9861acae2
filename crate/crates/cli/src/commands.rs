//! The four subcommands. Each builds a list of grid points, evaluates them on a
//! rayon pool, and flattens the results in grid order, so the output does not
//! depend on the number of workers.

use std::f64::consts::{PI, SQRT_2};
use std::path::{Path, PathBuf};
use std::time::Instant;

use bwm_core::algebra::{check_bwm_suite, check_tla, make_a, make_b, make_ea, make_eb, make_u};
use bwm_core::berry::{
    berry_closed, figure_data, phase_distance, setwise_discrepancy, wilson_loop_for, ClosedForm, FigureRow,
};
use bwm_core::matrix::{hermitian_eigs, rel_residual};
use bwm_core::spin::{decomposition_residual, hamiltonian, ladder_ops, predicted_spectrum};
use bwm_core::yang_baxter::{make_r_theta, rapidity_ratio, unitarity_residual, velocity_add, ybe_residual};
use bwm_core::{AlgebraParams, DriveParams, Matrix3};
use rayon::prelude::*;

use crate::config::{Command, ResolvedConfig, RunConfig};
use crate::error::CliError;
use crate::report::{CheckRecord, Status, SuiteReport};

/// Bound on `|γ₀|` for the zero-energy branch.
pub const ZERO_BRANCH_TOL: f64 = 1e-6;
/// Bound on `|γ₊ − π|` at `d = 10⁶`.
pub const LARGE_D_TOL: f64 = 7e-6;
pub const LARGE_D: f64 = 1e6;
/// Angles at which `B(θ) = U A(θ) U⁻¹` is checked.
const TRANSPORT_THETAS: [f64; 3] = [0.3, 1.1, -2.0];

pub struct Run {
    pub report: SuiteReport,
    pub sections: Vec<FigureRow>,
    pub surface: Vec<FigureRow>,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

fn par_flat_map<T: Sync, F>(items: &[T], f: F) -> Vec<CheckRecord>
where
    F: Fn(&T) -> Vec<CheckRecord> + Sync + Send,
{
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

pub fn execute(command: Command, cfg: &RunConfig) -> Result<Run, CliError> {
    cfg.validate()?;
    let start = Instant::now();
    let r = cfg.resolve(command);
    let pool = pool(cfg.jobs)?;
    let (checks, sections, surface) = pool.install(|| match command {
        Command::Verify => Ok((cmd_verify(&r), vec![], vec![])),
        Command::Spectrum => Ok((cmd_spectrum(&r), vec![], vec![])),
        Command::Berry => Ok((cmd_berry(&r), vec![], vec![])),
        Command::Figure => cmd_figure(&r),
    })?;
    let warnings = empty_grid_warnings(&r);
    let report = SuiteReport::new(r, checks, warnings, start.elapsed().as_secs_f64());
    Ok(Run { report, sections, surface })
}

fn empty_grid_warnings(r: &ResolvedConfig) -> Vec<String> {
    let grids: Vec<(&str, usize)> = match r.command {
        Command::Verify => vec![("q", r.q.len()), ("d", r.d.len()), ("phase_pairs", r.phase_pairs.len()), ("spectral", r.spectral.len())],
        Command::Spectrum => vec![("theta", r.theta.len()), ("d", r.d.len()), ("omega", r.omega.len()), ("phi", r.phi.len())],
        Command::Berry => vec![("theta", r.theta.len()), ("d", r.d.len()), ("omega", r.omega.len())],
        Command::Figure => vec![("theta", r.theta.len()), ("d", r.d.len())],
    };
    grids
        .into_iter()
        .filter(|(_, n)| *n == 0)
        .map(|(name, _)| format!("grid `{name}` is empty"))
        .collect()
}

impl Run {
    /// Writes `<command>_report.json`, plus the two CSVs for `figure`.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let mut written = Vec::new();
        if self.report.command == Command::Figure.name() {
            let sections = dir.join("sections.csv");
            crate::csv::write(&sections, &self.sections)?;
            let surface = dir.join("surface.csv");
            crate::csv::write(&surface, &self.surface)?;
            written.extend([sections, surface]);
        }
        let json = dir.join(format!("{}_report.json", self.report.command));
        self.report.write(&json)?;
        written.push(json);
        Ok(written)
    }
}

fn transport_checks(suite: &str, p: &AlgebraParams, params: &[(&str, f64)], tol: f64) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let u = make_u(p);
    out.push(CheckRecord::measured(
        suite,
        "U^H U = I",
        params,
        rel_residual(&(u.adjoint() * u), &Matrix3::identity()),
        tol,
    ));
    let conj = |m: &Matrix3| u.conjugate(m);
    match conj(&make_ea(p)) {
        Ok(m) => out.push(CheckRecord::measured(suite, "E_B = U E_A U^-1", params, rel_residual(&make_eb(p), &m), tol)),
        Err(e) => out.push(CheckRecord::skipped(suite, "E_B = U E_A U^-1", params, e.reason())),
    }
    if p.q().is_some() {
        match make_a(p).and_then(|a| Ok((make_b(p)?, conj(&a)?))) {
            Ok((b, uau)) => out.push(CheckRecord::measured(suite, "B = U A U^-1", params, rel_residual(&b, &uau), tol)),
            Err(e) => out.push(CheckRecord::skipped(suite, "B = U A U^-1", params, e.reason())),
        }
    }
    for theta in TRANSPORT_THETAS {
        let pair = make_r_theta(theta, p);
        let mut ps = params.to_vec();
        ps.push(("theta", theta));
        let name = "B(theta) = U A(theta) U^-1";
        match bwm_core::yang_baxter::conjugation_residual(&pair, p) {
            Ok(r) => out.push(CheckRecord::measured(suite, name, &ps, r, tol)),
            Err(e) => out.push(CheckRecord::skipped(suite, name, &ps, e.reason())),
        }
    }
    out
}

pub fn cmd_verify(r: &ResolvedConfig) -> Vec<CheckRecord> {
    let mut checks = Vec::new();

    let coupled: Vec<(f64, [f64; 2])> = r.q.iter().flat_map(|&q| r.phase_pairs.iter().map(move |&pp| (q, pp))).collect();
    checks.extend(par_flat_map(&coupled, |&(q, [phi1, phi2])| {
        let mut params = vec![("q", q), ("phi1", phi1), ("phi2", phi2)];
        let p = match AlgebraParams::coupled(q, phi1, phi2) {
            Ok(p) => p,
            Err(e) => return vec![CheckRecord::skipped("bwm", "parameters", &params, e.reason())],
        };
        params.push(("d", p.d()));
        let mut out = match check_bwm_suite(&p, r.tolerance) {
            Ok(rep) => rep
                .entries
                .into_iter()
                .map(|e| CheckRecord::measured("bwm", e.name, &params, e.residual, r.tolerance))
                .collect(),
            Err(e) => vec![CheckRecord::skipped("bwm", "suite", &params, e.reason())],
        };
        out.extend(transport_checks("transport", &p, &params, r.strict_tolerance));
        out
    }));

    let tla: Vec<(f64, [f64; 2])> = r.d.iter().flat_map(|&d| r.phase_pairs.iter().map(move |&pp| (d, pp))).collect();
    checks.extend(par_flat_map(&tla, |&(d, [phi1, phi2])| {
        let params = [("d", d), ("phi1", phi1), ("phi2", phi2)];
        let p = match AlgebraParams::tla(d, phi1, phi2) {
            Ok(p) => p,
            Err(e) => return vec![CheckRecord::skipped("tla", "parameters", &params, e.reason())],
        };
        let mut out: Vec<CheckRecord> = check_tla(&make_ea(&p), &make_eb(&p), d, r.strict_tolerance)
            .entries
            .into_iter()
            .map(|e| CheckRecord::measured("tla", e.name, &params, e.residual, r.strict_tolerance))
            .collect();
        out.extend(transport_checks("transport", &p, &params, r.strict_tolerance));
        out
    }));

    checks.extend(par_flat_map(&r.spectral, |sample| {
        let params = [
            ("u", sample.u),
            ("v", sample.v),
            ("beta_rapidity", sample.beta_rapidity),
            ("epsilon", sample.epsilon as f64),
            ("d", sample.d),
            ("phi1", sample.phi1),
            ("phi2", sample.phi2),
        ];
        // validated when the config was loaded
        let s = sample.to_params().expect("epsilon is ±1");
        let mut out = Vec::new();
        match ybe_residual(&s) {
            Ok(res) => out.push(CheckRecord::measured("ybe", "R1(u) R2(u+v) R1(v) = R2(v) R1(u+v) R2(u)", &params, res, r.tolerance)),
            Err(e) => out.push(CheckRecord::skipped("ybe", "R1(u) R2(u+v) R1(v) = R2(v) R1(u+v) R2(u)", &params, e.reason())),
        }
        let unimodular = velocity_add(s.u, s.v, s.beta_rapidity).and_then(|w| {
            let mut worst: f64 = 0.0;
            for x in [s.u, s.v, w] {
                worst = worst.max((rapidity_ratio(x, &s)?.norm() - 1.0).abs());
                worst = worst.max(unitarity_residual(&bwm_core::yang_baxter::make_r_u(x, &s)?));
            }
            Ok(worst)
        });
        match unimodular {
            Ok(res) => out.push(CheckRecord::measured("ybe", "|exp(-2i theta)| = 1", &params, res, r.unimodular_tolerance)),
            Err(e) => out.push(CheckRecord::skipped("ybe", "|exp(-2i theta)| = 1", &params, e.reason())),
        }
        out
    }));
    checks
}

pub fn cmd_spectrum(r: &ResolvedConfig) -> Vec<CheckRecord> {
    let points: Vec<(f64, f64)> = r.theta.iter().flat_map(|&t| r.d.iter().map(move |&d| (t, d))).collect();
    par_flat_map(&points, |&(theta, d)| {
        let mut out = Vec::new();
        let params = [("theta", theta), ("d", d)];
        match ladder_ops(theta, d) {
            Ok(spins) => {
                let cl = spins.closure();
                let comm = cl.comm_plus_minus.max(cl.comm_3_plus).max(cl.comm_3_minus);
                out.push(CheckRecord::measured("su2", "su(2) commutators", &params, comm, r.tolerance));
                let exact = cl.nilpotency.max(cl.adjointness).max(cl.trace_s3);
                out.push(CheckRecord::measured("su2", "(S+)^2 = 0, S- = (S+)^H, tr S3 = 0", &params, exact, r.strict_tolerance));
                match hermitian_eigs(&spins.casimir()) {
                    Ok(es) => {
                        let dev = es
                            .eigenvalues
                            .iter()
                            .zip([0.0, 0.75, 0.75])
                            .map(|(a, b)| (a - b).abs())
                            .fold(0.0, f64::max);
                        out.push(
                            CheckRecord::measured("su2", "casimir spectrum {0, 3/4, 3/4}", &params, dev, r.tolerance)
                                .with_value("eigenvalues", es.eigenvalues),
                        );
                    }
                    Err(e) => out.push(CheckRecord::skipped("su2", "casimir spectrum {0, 3/4, 3/4}", &params, e.reason())),
                }
            }
            Err(e) => out.push(CheckRecord::skipped("su2", "ladder operators", &params, e.reason())),
        }
        for &omega in &r.omega {
            let dp = match DriveParams::new(theta, omega, d) {
                Ok(dp) => dp,
                Err(e) => {
                    out.push(CheckRecord::skipped("spectrum", "hamiltonian", &[("theta", theta), ("d", d), ("omega", omega)], e.reason()));
                    continue;
                }
            };
            let reference = hamiltonian(0.0, &dp).and_then(|h| hermitian_eigs(&h));
            for &phi in &r.phi {
                let params = [("theta", theta), ("d", d), ("omega", omega), ("phi", phi)];
                out.extend(spectrum_point(r, &dp, phi, &params, reference.as_ref().ok().map(|e| e.eigenvalues)));
            }
        }
        out
    })
}

fn spectrum_point(r: &ResolvedConfig, dp: &DriveParams, phi: f64, params: &[(&str, f64)], reference: Option<[f64; 3]>) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let h = match hamiltonian(phi, dp) {
        Ok(h) => h,
        Err(e) => return vec![CheckRecord::skipped("spectrum", "hamiltonian", params, e.reason())],
    };
    let scale = h.frobenius_norm().max(1.0);
    out.push(CheckRecord::measured("spectrum", "H = H^H", params, h.hermiticity_defect() / scale, r.strict_tolerance));
    out.push(CheckRecord::measured("spectrum", "tr H = 0", params, h.trace().norm(), r.strict_tolerance));
    match (hermitian_eigs(&h), predicted_spectrum(dp)) {
        (Ok(es), Ok(want)) => {
            let dev = es.eigenvalues.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            out.push(
                CheckRecord::measured("spectrum", "eigenvalues = {0, +-hbar omega cos alpha}", params, dev, r.tolerance)
                    .with_value("eigenvalues", es.eigenvalues)
                    .with_value("predicted", want),
            );
            if let Some(reference) = reference {
                let drift = es.eigenvalues.iter().zip(reference).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                out.push(CheckRecord::measured("spectrum", "spectrum independent of phi", params, drift, r.strict_tolerance));
            }
        }
        (Err(e), _) | (_, Err(e)) => out.push(CheckRecord::skipped("spectrum", "eigenvalues", params, e.reason())),
    }
    match decomposition_residual(phi, dp) {
        Ok(res) => out.push(CheckRecord::measured("spectrum", "H = spin decomposition", params, res, r.tolerance)),
        Err(e) => out.push(CheckRecord::skipped("spectrum", "H = spin decomposition", params, e.reason())),
    }
    out
}

/// Describes which closed-form phase the lower-energy branch carried.
fn pairing(gamma_plus: f64, cos_alpha: f64, tol: f64) -> &'static str {
    if phase_distance(gamma_plus, PI * (1.0 - cos_alpha)) < tol {
        "E = -hbar omega cos alpha carries +pi(1 - cos alpha)"
    } else if phase_distance(gamma_plus, -PI * (1.0 - cos_alpha)) < tol {
        "E = -hbar omega cos alpha carries -pi(1 - cos alpha)"
    } else {
        "unmatched"
    }
}

pub fn cmd_berry(r: &ResolvedConfig) -> Vec<CheckRecord> {
    let points: Vec<(f64, f64, f64)> = r
        .theta
        .iter()
        .flat_map(|&t| r.d.iter().flat_map(move |&d| r.omega.iter().map(move |&w| (t, d, w))))
        .collect();
    par_flat_map(&points, |&(theta, d, omega)| {
        let params = [("theta", theta), ("d", d), ("omega", omega)];
        let mut out = Vec::new();
        let closed = match (berry_closed(theta, d, ClosedForm::SinForm), berry_closed(theta, d, ClosedForm::CosForm)) {
            (Ok(s), Ok(c)) => (s, c),
            (Err(e), _) | (_, Err(e)) => {
                out.push(CheckRecord::skipped("berry", "closed forms", &params, e.reason()));
                return out;
            }
        };
        let (closed, cos_form) = closed;
        let dp = match DriveParams::new(theta, omega, d) {
            Ok(dp) => dp,
            Err(e) => {
                out.push(
                    CheckRecord::skipped("berry", "wilson loop", &params, "closed-form-only")
                        .with_value("guard", e.reason())
                        .with_value("sin_form", &closed)
                        .with_value("cos_form", &cos_form),
                );
                return out;
            }
        };
        let num = match wilson_loop_for(&dp, r.steps) {
            Ok(n) => n,
            Err(e) => {
                out.push(CheckRecord::skipped("berry", "wilson loop", &params, e.reason()));
                return out;
            }
        };
        let dev = phase_distance(num.gamma_plus, closed.gamma_plus).max(phase_distance(num.gamma_minus, closed.gamma_minus));
        let mut rec = CheckRecord::measured("berry", "wilson loop = closed form", &params, dev, r.phase_tolerance)
            .with_value("steps", r.steps)
            .with_value("wilson", &num)
            .with_value("sin_form", &closed)
            .with_value("cos_form", &cos_form)
            .with_value("pairing", pairing(num.gamma_plus, num.cos_alpha, r.phase_tolerance));
        if let Some(steps) = r.convergence_steps {
            match wilson_loop_for(&dp, steps) {
                Ok(other) => {
                    let delta = phase_distance(other.gamma_plus, num.gamma_plus).max(phase_distance(other.gamma_minus, num.gamma_minus));
                    rec = rec.with_value("convergence_steps", steps).with_value("convergence_delta", delta);
                }
                Err(e) => rec = rec.with_value("convergence_error", e.reason()),
            }
        }
        out.push(rec);
        out.push(CheckRecord::measured(
            "berry",
            "{gamma+, gamma-} = {+-pi(1 - cos alpha)}",
            &params,
            setwise_discrepancy(num.gamma_plus, num.gamma_minus, closed.cos_alpha),
            r.phase_tolerance,
        ));
        out.push(CheckRecord::measured("berry", "gamma0 = 0", &params, num.gamma_zero.abs(), ZERO_BRANCH_TOL));
        out
    })
}

fn predicate(suite: &str, name: &str, params: &[(&str, f64)], ok: bool) -> CheckRecord {
    let mut c = CheckRecord::skipped(suite, name, params, "");
    c.reason = None;
    c.status = if ok { Status::Pass } else { Status::Fail };
    c
}

fn envelope(d: f64) -> f64 {
    2.0 * (d * d - 1.0).sqrt() / (d * d)
}

type FigureOutput = (Vec<CheckRecord>, Vec<FigureRow>, Vec<FigureRow>);

pub fn cmd_figure(r: &ResolvedConfig) -> Result<FigureOutput, CliError> {
    let rows_for = |ds: &[f64]| -> Result<Vec<FigureRow>, CliError> {
        let per_d: Vec<_> = ds.par_iter().map(|&d| figure_data(&r.theta, &[d])).collect();
        let mut rows = Vec::new();
        for res in per_d {
            rows.extend(res.map_err(|e| CliError::Config(format!("figure grid: {e}")))?);
        }
        Ok(rows)
    };
    let sections = rows_for(&r.d)?;
    let surface = rows_for(&r.surface_d)?;

    let mut checks = Vec::new();
    let tol = r.strict_tolerance;
    let theta_index = |target: f64| r.theta.iter().position(|&t| (t - target).abs() < 1e-15);
    let (at_zero, at_pi) = (theta_index(0.0), theta_index(PI));
    let mut extrema = Vec::new();
    for (k, &d) in r.d.iter().enumerate() {
        let col = &sections[k * r.theta.len()..(k + 1) * r.theta.len()];
        let params = [("d", d)];
        let worst = |f: &dyn Fn(&FigureRow) -> f64| col.iter().map(|row| (row.gamma_plus - f(row)).abs()).fold(0.0, f64::max);
        if (d - SQRT_2).abs() < 1e-15 {
            checks.push(CheckRecord::measured("figure", "gamma+ = pi(1 - cos theta) at d = sqrt 2", &params, worst(&|row| PI * (1.0 - row.theta.cos())), tol));
        }
        if d == 1.0 {
            checks.push(CheckRecord::measured("figure", "gamma+ = pi at d = 1", &params, worst(&|_| PI), tol));
        }
        if col.is_empty() {
            continue;
        }
        let (Some(i0), Some(ipi)) = (at_zero, at_pi) else {
            checks.push(CheckRecord::skipped("figure", "extrema", &params, "grid_lacks_zero_or_pi"));
            continue;
        };
        let max = col.iter().map(|row| row.gamma_plus).fold(f64::MIN, f64::max);
        let min = col.iter().map(|row| row.gamma_plus).fold(f64::MAX, f64::min);
        let (want_max, want_min) = (PI * (1.0 + envelope(d)), PI * (1.0 - envelope(d)));
        let dev = [
            (col[ipi].gamma_plus - want_max).abs(),
            (col[i0].gamma_plus - want_min).abs(),
            (max - col[ipi].gamma_plus).abs(),
            (min - col[i0].gamma_plus).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        checks.push(
            CheckRecord::measured("figure", "max at theta = pi, min at theta = 0", &params, dev, tol)
                .with_value("max", max)
                .with_value("min", min),
        );
        extrema.push((d, max, min));
    }

    // the envelope 2√(d²−1)/d² peaks at d = √2 and falls beyond it
    let mut beyond: Vec<_> = extrema.iter().filter(|(d, _, _)| *d >= SQRT_2 - 1e-15).copied().collect();
    beyond.sort_by(|a, b| a.0.total_cmp(&b.0));
    if beyond.len() >= 2 {
        let ok = beyond.windows(2).all(|w| w[1].1 < w[0].1 && w[1].2 > w[0].2);
        checks.push(
            predicate("figure", "max decreases and min increases with d >= sqrt 2", &[], ok)
                .with_value("d", beyond.iter().map(|e| e.0).collect::<Vec<_>>())
                .with_value("max", beyond.iter().map(|e| e.1).collect::<Vec<_>>())
                .with_value("min", beyond.iter().map(|e| e.2).collect::<Vec<_>>()),
        );
    }

    if !r.theta.is_empty() {
        let far = figure_data(&r.theta, &[LARGE_D]).map_err(|e| CliError::Config(e.to_string()))?;
        let dev = far.iter().map(|row| (row.gamma_plus - PI).abs()).fold(0.0, f64::max);
        checks.push(CheckRecord::measured("figure", "gamma+ -> pi as d -> infinity", &[("d", LARGE_D)], dev, LARGE_D_TOL));
    }
    Ok((checks, sections, surface))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> RunConfig {
        RunConfig {
            phase_pair_count: 2,
            ybe_random_samples: 10,
            steps: 256,
            phase_tolerance: 1e-2,
            ..RunConfig::default()
        }
    }

    #[test]
    fn verify_passes_and_is_worker_independent() {
        let one = execute(Command::Verify, &RunConfig { jobs: 1, ..small() }).unwrap();
        let four = execute(Command::Verify, &RunConfig { jobs: 4, ..small() }).unwrap();
        assert!(one.report.overall_pass, "{:?}", one.report.failures().next());
        assert_eq!(one.report.checks, four.report.checks);
    }

    #[test]
    fn impossible_tolerance_fails() {
        let cfg = RunConfig { tolerance: 1e-16, strict_tolerance: 1e-16, ..small() };
        let run = execute(Command::Verify, &cfg).unwrap();
        assert!(!run.report.overall_pass);
        assert!(run.report.summary.failed > 0);
    }

    #[test]
    fn berry_marks_d_one_closed_form_only() {
        let mut cfg = small();
        cfg.apply_grid_spec("theta=0.7;d=1,2").unwrap();
        let run = execute(Command::Berry, &cfg).unwrap();
        let skipped: Vec<_> = run.report.checks.iter().filter(|c| c.reason.as_deref() == Some("closed-form-only")).collect();
        assert_eq!(skipped.len(), 1);
        assert_eq!(skipped[0].params["d"], 1.0);
        assert!(run.report.overall_pass);
    }

    #[test]
    fn spectrum_reports_guards() {
        let mut cfg = small();
        cfg.apply_grid_spec("theta=0.4;d=1.5;omega=1;phi=0").unwrap();
        let run = execute(Command::Spectrum, &cfg).unwrap();
        assert!(run.report.checks.iter().any(|c| c.reason.as_deref() == Some("d_below_golden_ratio")));
    }

    #[test]
    fn empty_grids_warn() {
        let mut cfg = small();
        cfg.apply_grid_spec("theta=;d=").unwrap();
        let run = execute(Command::Berry, &cfg).unwrap();
        assert_eq!(run.report.summary.total, 0);
        assert!(run.report.overall_pass);
        assert!(run.report.warnings.contains(&"grid `theta` is empty".to_string()));
        assert!(run.report.warnings.contains(&"no checks were run".to_string()));
    }

    #[test]
    fn figure_checks_pass() {
        let run = execute(Command::Figure, &RunConfig { figure_theta_points: 41, surface_d_points: 3, ..small() }).unwrap();
        assert!(run.report.overall_pass, "{:?}", run.report.failures().collect::<Vec<_>>());
        assert_eq!(run.sections.len(), 5 * 41);
        assert_eq!(run.surface.len(), 3 * 41);
    }
}
