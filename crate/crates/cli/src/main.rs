use std::path::PathBuf;
use std::process::ExitCode;

use bwm_cli::config::output_dir;
use bwm_cli::{execute, CliError, Command, RunConfig};
use clap::Parser;

/// Verification suites, spectra, Berry phases and figure data for the
/// three-dimensional BWM representation.
#[derive(Debug, Parser)]
#[command(name = "bwm", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,

    /// TOML config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,

    #[arg(long)]
    tolerance: Option<f64>,

    #[arg(long)]
    phase_tolerance: Option<f64>,

    /// Wilson-loop discretisation.
    #[arg(long)]
    steps: Option<usize>,

    /// Also evaluate the Wilson loop at this many steps and report the change.
    #[arg(long)]
    convergence_steps: Option<usize>,

    #[arg(long)]
    seed: Option<u64>,

    /// Output directory (default: $BWM_OUT_DIR). Without either, reports go to
    /// stdout; figure CSVs go to the working directory.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Grid overrides, e.g. `q=0.5,2;theta=0:pi:9;d=sqrt(2),3`.
    #[arg(long)]
    grid_spec: Option<String>,

    /// Worker threads (0 = all cores). Results do not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
}

fn load(args: &Args) -> Result<RunConfig, CliError> {
    let mut cfg = match &args.config {
        Some(path) => RunConfig::from_toml_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(t) = args.tolerance {
        cfg.tolerance = t;
    }
    if let Some(t) = args.phase_tolerance {
        cfg.phase_tolerance = t;
    }
    if let Some(s) = args.steps {
        cfg.steps = s;
    }
    if args.convergence_steps.is_some() {
        cfg.convergence_steps = args.convergence_steps;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(j) = args.jobs {
        cfg.jobs = j;
    }
    if let Some(spec) = &args.grid_spec {
        cfg.apply_grid_spec(spec)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(args: &Args) -> Result<bool, CliError> {
    let cfg = load(args)?;
    let run = execute(args.command, &cfg)?;
    let to_files = args.out.is_some() || std::env::var_os("BWM_OUT_DIR").is_some() || args.command == Command::Figure;
    if to_files {
        for path in run.write(&output_dir(args.out.as_deref()))? {
            eprintln!("wrote {}", path.display());
        }
    } else {
        print!("{}", run.report.to_json()?);
    }
    for w in &run.report.warnings {
        eprintln!("warning: {w}");
    }
    for f in run.report.failures().take(10) {
        eprintln!("FAIL [{}] {} {:?} residual {:?}", f.suite, f.name, f.params, f.residual);
    }
    eprintln!("{}", run.report.one_line());
    Ok(run.report.overall_pass)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
