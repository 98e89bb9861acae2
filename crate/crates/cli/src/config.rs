//! Run configuration: a TOML file, overridden by command-line flags.

use std::f64::consts::{FRAC_PI_6, PI, SQRT_2, TAU};
use std::path::{Path, PathBuf};

use bwm_core::yang_baxter::{Sign, SpectralParams};
use bwm_core::GOLDEN_RATIO;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Verify,
    Spectrum,
    Berry,
    Figure,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Spectrum => "spectrum",
            Command::Berry => "berry",
            Command::Figure => "figure",
        }
    }
}

/// One Yang–Baxter sample as written in a config file (`epsilon` is ±1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectralSample {
    pub u: f64,
    pub v: f64,
    pub beta_rapidity: f64,
    pub epsilon: i32,
    pub d: f64,
    #[serde(default)]
    pub phi1: f64,
    #[serde(default)]
    pub phi2: f64,
}

impl SpectralSample {
    pub fn to_params(self) -> Result<SpectralParams, String> {
        Ok(SpectralParams {
            u: self.u,
            v: self.v,
            beta_rapidity: self.beta_rapidity,
            epsilon: Sign::try_from(self.epsilon)?,
            d: self.d,
            phi1: self.phi1,
            phi2: self.phi2,
        })
    }
}

/// Unset grids take per-command defaults, see [`RunConfig::resolve`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub tolerance: f64,
    /// Used for the suites that hold to near machine precision (TLA,
    /// transport, traces, nilpotency).
    pub strict_tolerance: f64,
    pub unimodular_tolerance: f64,
    pub phase_tolerance: f64,
    pub q: Option<Vec<f64>>,
    pub d: Option<Vec<f64>>,
    pub theta: Option<Vec<f64>>,
    pub phi: Option<Vec<f64>>,
    pub omega: Option<Vec<f64>>,
    /// Explicit `(φ₁, φ₂)` pairs; seeded random pairs otherwise.
    pub phase_pairs: Option<Vec<[f64; 2]>>,
    pub phase_pair_count: usize,
    /// Explicit Yang–Baxter samples; corner cases plus seeded samples otherwise.
    pub spectral: Option<Vec<SpectralSample>>,
    pub ybe_random_samples: usize,
    pub ybe_d: Vec<f64>,
    pub ybe_beta: Vec<f64>,
    pub steps: usize,
    pub convergence_steps: Option<usize>,
    pub seed: u64,
    pub jobs: usize,
    pub figure_theta_points: usize,
    pub surface_d_points: usize,
    pub surface_d_max: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            strict_tolerance: 1e-12,
            unimodular_tolerance: 1e-13,
            phase_tolerance: 1e-4,
            q: None,
            d: None,
            theta: None,
            phi: None,
            omega: None,
            phase_pairs: None,
            phase_pair_count: 5,
            spectral: None,
            ybe_random_samples: 200,
            ybe_d: vec![1.7, 1.9],
            ybe_beta: vec![0.3, 1.0],
            steps: bwm_core::berry::DEFAULT_STEPS,
            convergence_steps: None,
            seed: 20_130_901,
            jobs: 0,
            figure_theta_points: 401,
            surface_d_points: 51,
            surface_d_max: 6.0,
        }
    }
}

/// Every grid a command needs, with defaults filled in. This is what reports
/// echo back.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolvedConfig {
    pub command: Command,
    pub tolerance: f64,
    pub strict_tolerance: f64,
    pub unimodular_tolerance: f64,
    pub phase_tolerance: f64,
    pub seed: u64,
    pub steps: usize,
    pub convergence_steps: Option<usize>,
    pub q: Vec<f64>,
    pub d: Vec<f64>,
    pub theta: Vec<f64>,
    pub phi: Vec<f64>,
    pub omega: Vec<f64>,
    pub phase_pairs: Vec<[f64; 2]>,
    pub spectral: Vec<SpectralSample>,
    pub surface_d: Vec<f64>,
}

pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        n => (0..n)
            .map(|k| start + (stop - start) * (k as f64 / (n - 1) as f64))
            .collect(),
    }
}

impl RunConfig {
    pub fn from_toml_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        Self::from_toml_str(&text)
    }

    pub fn from_toml_str(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let tols = [self.tolerance, self.strict_tolerance, self.unimodular_tolerance, self.phase_tolerance];
        if tols.iter().any(|t| !(*t > 0.0)) {
            return Err(CliError::Config("tolerances must be positive".into()));
        }
        if self.steps < bwm_core::berry::MIN_STEPS {
            return Err(CliError::Config(format!(
                "steps must be at least {}",
                bwm_core::berry::MIN_STEPS
            )));
        }
        if let Some(c) = self.convergence_steps {
            if c < bwm_core::berry::MIN_STEPS {
                return Err(CliError::Config("convergence_steps must be at least 16".into()));
            }
        }
        if let Some(samples) = &self.spectral {
            for s in samples {
                s.to_params().map_err(CliError::Config)?;
            }
        }
        Ok(())
    }

    fn seeded_phase_pairs(&self) -> Vec<[f64; 2]> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.phase_pair_count)
            .map(|_| [rng.gen_range(-PI..PI), rng.gen_range(-PI..PI)])
            .collect()
    }

    /// Corner cases (`u = 0`, `v = −u`, `β = 0`) for every `(d, β, ε)`,
    /// followed by seeded samples with `u, v ∈ [−0.9, 0.9]`.
    fn default_spectral(&self) -> Vec<SpectralSample> {
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(1));
        for &d in &self.ybe_d {
            for &beta in &self.ybe_beta {
                for eps in [1, -1] {
                    out.push(SpectralSample { u: 0.0, v: 0.5, beta_rapidity: beta, epsilon: eps, d, phi1: 0.4, phi2: -1.1 });
                    out.push(SpectralSample { u: 0.6, v: -0.6, beta_rapidity: beta, epsilon: eps, d, phi1: 0.4, phi2: -1.1 });
                }
            }
            out.push(SpectralSample { u: 0.3, v: 0.5, beta_rapidity: 0.0, epsilon: 1, d, phi1: 0.4, phi2: -1.1 });
        }
        if self.ybe_d.is_empty() || self.ybe_beta.is_empty() {
            return out;
        }
        for _ in 0..self.ybe_random_samples {
            let u = rng.gen_range(-0.9..=0.9);
            let v = rng.gen_range(-0.9..=0.9);
            let beta = self.ybe_beta[rng.gen_range(0..self.ybe_beta.len())];
            let epsilon = if rng.gen_bool(0.5) { 1 } else { -1 };
            let d = self.ybe_d[rng.gen_range(0..self.ybe_d.len())];
            let phi1 = rng.gen_range(-PI..PI);
            let phi2 = rng.gen_range(-PI..PI);
            out.push(SpectralSample { u, v, beta_rapidity: beta, epsilon, d, phi1, phi2 });
        }
        out
    }

    pub fn resolve(&self, command: Command) -> ResolvedConfig {
        let pick = |v: &Option<Vec<f64>>, default: Vec<f64>| v.clone().unwrap_or(default);
        let (d_default, theta_default, omega_default) = match command {
            Command::Verify => (vec![GOLDEN_RATIO, 1.8, 2.0, 3.0, 5.0], vec![], vec![]),
            Command::Spectrum => (
                vec![1.7, 2.0, 3.0, 5.0],
                vec![0.0, 0.4, FRAC_PI_6, 1.0, 2.2],
                vec![0.5, 1.0],
            ),
            Command::Berry => (vec![1.0, 1.7, 2.0, 3.0, 5.0], vec![0.3, 0.7, 1.2, 2.0], vec![1.0]),
            Command::Figure => (
                bwm_core::berry::section_d_values().to_vec(),
                linspace(0.0, TAU, self.figure_theta_points),
                vec![],
            ),
        };
        let is_verify = command == Command::Verify;
        ResolvedConfig {
            command,
            tolerance: self.tolerance,
            strict_tolerance: self.strict_tolerance,
            unimodular_tolerance: self.unimodular_tolerance,
            phase_tolerance: self.phase_tolerance,
            seed: self.seed,
            steps: self.steps,
            convergence_steps: self.convergence_steps,
            q: if is_verify { pick(&self.q, vec![0.5, 0.9, 1.0, 1.3, 2.0]) } else { vec![] },
            d: pick(&self.d, d_default),
            theta: pick(&self.theta, theta_default),
            phi: if command == Command::Spectrum { pick(&self.phi, vec![0.0, 1.3]) } else { vec![] },
            omega: pick(&self.omega, omega_default),
            phase_pairs: if is_verify {
                self.phase_pairs.clone().unwrap_or_else(|| self.seeded_phase_pairs())
            } else {
                vec![]
            },
            spectral: if is_verify {
                self.spectral.clone().unwrap_or_else(|| self.default_spectral())
            } else {
                vec![]
            },
            surface_d: if command == Command::Figure {
                linspace(1.0, self.surface_d_max, self.surface_d_points)
            } else {
                vec![]
            },
        }
    }

    /// Applies `name=values;name=values` overrides. Values are a comma list or
    /// `start:stop:count`; each number may be written as `pi`, `2pi/3`,
    /// `sqrt(2)` or `golden`.
    pub fn apply_grid_spec(&mut self, spec: &str) -> Result<(), CliError> {
        for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, values) = part
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("grid entry `{part}` lacks `=`")))?;
            let values = parse_values(values.trim())?;
            let slot = match name.trim() {
                "q" => &mut self.q,
                "d" => &mut self.d,
                "theta" => &mut self.theta,
                "phi" => &mut self.phi,
                "omega" => &mut self.omega,
                other => return Err(CliError::Config(format!("unknown grid `{other}`"))),
            };
            *slot = Some(values);
        }
        Ok(())
    }
}

fn parse_values(s: &str) -> Result<Vec<f64>, CliError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let range: Vec<&str> = s.split(':').collect();
    if range.len() == 3 {
        let count = range[2]
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Config(format!("bad count in `{s}`")))?;
        return Ok(linspace(parse_number(range[0])?, parse_number(range[1])?, count));
    }
    s.split(',').map(parse_number).collect()
}

/// Plain float, `golden`, `sqrt(x)`, or `[a]pi[/b]`.
pub fn parse_number(token: &str) -> Result<f64, CliError> {
    let t = token.trim();
    let bad = || CliError::Config(format!("cannot parse number `{t}`"));
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    if t == "golden" {
        return Ok(GOLDEN_RATIO);
    }
    if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        let x = parse_number(inner)?;
        return if x == 2.0 { Ok(SQRT_2) } else { Ok(x.sqrt()) };
    }
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, t),
    };
    if let Some(idx) = body.find("pi") {
        let coeff = match body[..idx].trim_end_matches('*') {
            "" => 1.0,
            c => c.parse::<f64>().map_err(|_| bad())?,
        };
        let rest = &body[idx + 2..];
        let denom = match rest.strip_prefix('/') {
            Some(dn) => dn.parse::<f64>().map_err(|_| bad())?,
            None if rest.is_empty() => 1.0,
            None => return Err(bad()),
        };
        return Ok(sign * coeff * PI / denom);
    }
    Err(bad())
}

/// Where outputs go: `--out`, else `$BWM_OUT_DIR`, else the working directory.
pub fn output_dir(out: Option<&Path>) -> PathBuf {
    match out {
        Some(p) => p.to_path_buf(),
        None => std::env::var_os("BWM_OUT_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(parse_number("1.5").unwrap(), 1.5);
        assert_eq!(parse_number("pi").unwrap(), PI);
        assert_eq!(parse_number("pi/6").unwrap(), PI / 6.0);
        assert_eq!(parse_number("2pi/3").unwrap(), 2.0 * PI / 3.0);
        assert_eq!(parse_number("-pi/2").unwrap(), -PI / 2.0);
        assert_eq!(parse_number("sqrt(2)").unwrap(), SQRT_2);
        assert_eq!(parse_number("golden").unwrap(), GOLDEN_RATIO);
        assert!(parse_number("pie").is_err());
        assert!(parse_number("abc").is_err());
    }

    #[test]
    fn grid_spec() {
        let mut cfg = RunConfig::default();
        cfg.apply_grid_spec("q=0.5,2; theta=0:pi:3; d=").unwrap();
        assert_eq!(cfg.q, Some(vec![0.5, 2.0]));
        assert_eq!(cfg.theta, Some(vec![0.0, PI / 2.0, PI]));
        assert_eq!(cfg.d, Some(vec![]));
        assert!(cfg.apply_grid_spec("x=1").is_err());
        assert!(cfg.apply_grid_spec("q").is_err());
    }

    #[test]
    fn toml_round_trip() {
        let cfg = RunConfig::from_toml_str(
            "tolerance = 1e-12\nq = [0.5]\nseed = 7\n[[spectral]]\nu = 0.1\nv = 0.2\nbeta_rapidity = 1.0\nepsilon = -1\nd = 1.8\n",
        )
        .unwrap();
        assert_eq!(cfg.tolerance, 1e-12);
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.spectral.as_ref().unwrap()[0].epsilon, -1);
        assert!(RunConfig::from_toml_str("bogus = 1").is_err());
        let bad = RunConfig::from_toml_str("[[spectral]]\nu=0\nv=0\nbeta_rapidity=1\nepsilon=2\nd=1.8").unwrap();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn default_samples_are_seeded() {
        let cfg = RunConfig::default();
        let a = cfg.resolve(Command::Verify);
        let b = cfg.resolve(Command::Verify);
        assert_eq!(a, b);
        assert_eq!(a.spectral.len(), 2 * (2 * 2 * 2 + 1) + 200);
        assert_eq!(a.phase_pairs.len(), 5);
        let other = RunConfig { seed: 1, ..RunConfig::default() }.resolve(Command::Verify);
        assert_ne!(a.phase_pairs, other.phase_pairs);
    }

    #[test]
    fn figure_grid_contains_pi() {
        let r = RunConfig::default().resolve(Command::Figure);
        assert_eq!(r.theta.len(), 401);
        assert_eq!(r.theta[200], PI);
        assert_eq!(r.theta[400], TAU);
        assert_eq!(r.surface_d.first(), Some(&1.0));
        assert_eq!(r.surface_d.last(), Some(&6.0));
    }
}
