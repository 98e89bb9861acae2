//! JSON run reports.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::config::ResolvedConfig;
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
}

impl CheckRecord {
    /// Passes iff `residual < tolerance` (a NaN residual fails).
    pub fn measured(suite: &str, name: impl Into<String>, params: &[(&str, f64)], residual: f64, tolerance: f64) -> Self {
        Self {
            suite: suite.to_string(),
            name: name.into(),
            params: to_map(params),
            status: if residual < tolerance { Status::Pass } else { Status::Fail },
            residual: Some(residual),
            tolerance: Some(tolerance),
            reason: None,
            values: BTreeMap::new(),
        }
    }

    pub fn skipped(suite: &str, name: impl Into<String>, params: &[(&str, f64)], reason: impl Into<String>) -> Self {
        Self {
            suite: suite.to_string(),
            name: name.into(),
            params: to_map(params),
            status: Status::Skipped,
            residual: None,
            tolerance: None,
            reason: Some(reason.into()),
            values: BTreeMap::new(),
        }
    }

    pub fn with_value(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.values.insert(key.to_string(), v);
        self
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }
}

fn to_map(params: &[(&str, f64)]) -> BTreeMap<String, f64> {
    params.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub command: String,
    pub config: ResolvedConfig,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    /// Largest residual among the checks that ran; `null` when none did.
    pub worst_residual: Option<f64>,
    pub overall_pass: bool,
    pub warnings: Vec<String>,
    pub wall_time_s: f64,
}

impl SuiteReport {
    pub fn new(config: ResolvedConfig, checks: Vec<CheckRecord>, mut warnings: Vec<String>, wall_time_s: f64) -> Self {
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        let mut worst: Option<f64> = None;
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
            if let Some(r) = c.residual {
                // a NaN residual should dominate
                worst = Some(match worst {
                    Some(w) if !(r > w) && !r.is_nan() => w,
                    _ => r,
                });
            }
        }
        if summary.passed + summary.failed == 0 {
            warnings.push("no checks were run".to_string());
        }
        Self {
            schema: SCHEMA_VERSION,
            command: config.command.name().to_string(),
            config,
            overall_pass: summary.failed == 0,
            checks,
            summary,
            worst_residual: worst,
            warnings,
            wall_time_s,
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json()?).map_err(|e| CliError::io(path, e))
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn one_line(&self) -> String {
        let s = &self.summary;
        let worst = self
            .worst_residual
            .map(|w| format!("{w:.3e}"))
            .unwrap_or_else(|| "n/a".into());
        format!(
            "{}: {} checks, {} passed, {} failed, {} skipped, worst residual {}",
            self.command, s.total, s.passed, s.failed, s.skipped, worst
        )
    }
}

/// The report JSON with the wall-clock field removed, for run-to-run comparison.
pub fn without_timing(json: &str) -> Result<String, CliError> {
    let mut v: Value = serde_json::from_str(json)?;
    if let Some(obj) = v.as_object_mut() {
        obj.remove("wall_time_s");
    }
    Ok(serde_json::to_string_pretty(&v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Command, RunConfig};

    fn cfg() -> ResolvedConfig {
        RunConfig::default().resolve(Command::Berry)
    }

    #[test]
    fn summary_counts() {
        let checks = vec![
            CheckRecord::measured("s", "a", &[("d", 2.0)], 1e-12, 1e-10),
            CheckRecord::measured("s", "b", &[], 1e-3, 1e-10),
            CheckRecord::skipped("s", "c", &[], "d_equals_one"),
        ];
        let r = SuiteReport::new(cfg(), checks, vec![], 0.0);
        assert_eq!(r.summary, Summary { total: 3, passed: 1, failed: 1, skipped: 1 });
        assert_eq!(r.worst_residual, Some(1e-3));
        assert!(!r.overall_pass);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn nan_fails() {
        let c = CheckRecord::measured("s", "a", &[], f64::NAN, 1.0);
        assert_eq!(c.status, Status::Fail);
    }

    #[test]
    fn empty_run_warns_and_passes() {
        let r = SuiteReport::new(cfg(), vec![], vec![], 0.0);
        assert!(r.overall_pass);
        assert_eq!(r.warnings, vec!["no checks were run".to_string()]);
        assert_eq!(r.worst_residual, None);
    }

    #[test]
    fn json_shape() {
        let r = SuiteReport::new(cfg(), vec![CheckRecord::skipped("s", "c", &[], "x")], vec![], 1.25);
        let v: Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "berry");
        assert_eq!(v["checks"][0]["status"], "skipped");
        assert_eq!(v["checks"][0]["reason"], "x");
        assert_eq!(v["wall_time_s"], 1.25);
        let stripped = without_timing(&r.to_json().unwrap()).unwrap();
        assert!(!stripped.contains("wall_time_s"));
    }
}
