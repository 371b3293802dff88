//! Command-line front door: run simulations and contraction analyses from
//! JSON configs and emit CSV/JSON reports.
//!
//! Exit codes: 0 success, 2 configuration failure, 3 numeric failure,
//! 4 I/O failure. Failures print one machine-parseable line to stderr:
//! `error: code=<Code> message="..."`.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pressure_consensus::config::ScenarioConfig;
use pressure_consensus::contraction::{
    ContractionReport, SystemAlphas, DEFAULT_CLASSIFICATION_FLOOR,
};
use pressure_consensus::experiments::{
    k2_demo_system, run_scenario, DEFAULT_TOLERANCE,
};
use pressure_consensus::output::{
    write_analysis_json, write_summary_json, write_trajectory_csv, RunSummary, ScenarioSummary,
};
use pressure_consensus::{euler_phi, Error, OpinionSystem, PressureSchedule, DEFAULT_MAX_RHO};

/// Environment variable overriding the pressure overflow cap.
const MAX_RHO_ENV: &str = "PRESSURE_CONSENSUS_MAX_RHO";

const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERIC: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "pressure-consensus",
    version,
    about = "Simulate peer-pressure opinion dynamics and analyze contraction products"
)]
struct Cli {
    /// Suppress informational output on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a configured scenario and write the trajectory CSV.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the contraction report for a configured scenario.
    Analyze {
        #[arg(long)]
        config: PathBuf,
        /// Override the configured number of steps.
        #[arg(long)]
        steps: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// One-shot reproduction of the two demo scenarios.
    Counterexample {
        #[arg(long = "out-dir")]
        out_dir: PathBuf,
    },
}

struct Failure {
    exit: u8,
    code: String,
    message: String,
}

impl Failure {
    fn new(exit: u8, code: &str, message: impl ToString) -> Self {
        Failure {
            exit,
            code: code.to_string(),
            message: message.to_string(),
        }
    }

    fn config(err: &Error) -> Self {
        Failure::new(EXIT_CONFIG, err.code(), err)
    }

    fn numeric(err: &Error) -> Self {
        Failure::new(EXIT_NUMERIC, err.code(), err)
    }

    fn io(err: &std::io::Error) -> Self {
        Failure::new(EXIT_IO, "Io", err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!(
                "error: code={} message=\"{}\"",
                failure.code, failure.message
            );
            ExitCode::from(failure.exit)
        }
    }
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    let max_rho = max_rho_from_env()?;
    match &cli.command {
        Command::Simulate { config, out } => cmd_simulate(cli, config, out, max_rho),
        Command::Analyze { config, steps, out } => cmd_analyze(cli, config, *steps, out),
        Command::Counterexample { out_dir } => cmd_counterexample(cli, out_dir, max_rho),
    }
}

fn max_rho_from_env() -> Result<f64, Failure> {
    match std::env::var(MAX_RHO_ENV) {
        Err(_) => Ok(DEFAULT_MAX_RHO),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
            _ => Err(Failure::new(
                EXIT_CONFIG,
                "InvalidParameter",
                format!("{MAX_RHO_ENV} must be a positive finite number, got {raw:?}"),
            )),
        },
    }
}

fn load_config(cli: &Cli, path: &Path) -> Result<(ScenarioConfig, OpinionSystem), Failure> {
    let text = fs::read_to_string(path).map_err(|e| {
        Failure::new(
            EXIT_CONFIG,
            "UnreadableConfig",
            format!("{}: {e}", path.display()),
        )
    })?;
    let config = ScenarioConfig::from_json(&text)
        .map_err(|e| Failure::new(EXIT_CONFIG, "MalformedConfig", e))?;
    let system = config.validate().map_err(|e| Failure::config(&e))?;
    if !system.is_symmetric() && !cli.quiet {
        eprintln!(
            "warning: adjacency matrix is not symmetric; the consensus point is only \
             guaranteed for symmetric systems"
        );
    }
    Ok((config, system))
}

fn create_output(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::io(&e))
}

fn note(cli: &Cli, message: impl AsRef<str>) {
    if !cli.quiet {
        eprintln!("{}", message.as_ref());
    }
}

fn cmd_simulate(cli: &Cli, config_path: &Path, out: &Path, max_rho: f64) -> Result<(), Failure> {
    let (config, system) = load_config(cli, config_path)?;
    let schedule = config.schedule.clone();
    let x0 = config.x0_state(&system).map_err(|e| Failure::config(&e))?;
    let tolerance = config.tolerance().map_err(|e| Failure::config(&e))?;
    let result = run_scenario(
        &system,
        &schedule,
        config.steps,
        x0.as_ref(),
        tolerance,
        max_rho,
    )
    .map_err(|e| Failure::numeric(&e))?;

    let mut w = create_output(out)?;
    write_trajectory_csv(
        &mut w,
        &result.trajectory,
        &result.report,
        &system.consensus_limit(),
    )
    .and_then(|_| w.flush())
    .map_err(|e| Failure::io(&e))?;
    note(cli, format!("wrote {}", out.display()));
    Ok(())
}

fn cmd_analyze(
    cli: &Cli,
    config_path: &Path,
    steps_override: Option<u64>,
    out: &Path,
) -> Result<(), Failure> {
    let (config, system) = load_config(cli, config_path)?;
    let steps = steps_override.unwrap_or(config.steps);
    if steps < 1 {
        return Err(Failure::new(
            EXIT_CONFIG,
            "InvalidParameter",
            "steps must be at least 1",
        ));
    }
    let report = ContractionReport::from_source(
        &SystemAlphas {
            system: &system,
            schedule: &config.schedule,
        },
        steps,
        DEFAULT_CLASSIFICATION_FLOOR,
    )
    .map_err(|e| Failure::numeric(&e))?;

    let mut w = create_output(out)?;
    write_analysis_json(&mut w, &report)
        .and_then(|_| w.flush())
        .map_err(|e| Failure::io(&e))?;
    note(cli, format!("wrote {}", out.display()));
    Ok(())
}

fn cmd_counterexample(cli: &Cli, out_dir: &Path, max_rho: f64) -> Result<(), Failure> {
    const STEPS: u64 = 10_000;
    fs::create_dir_all(out_dir).map_err(|e| Failure::io(&e))?;

    let system = k2_demo_system();
    let limit = system.consensus_limit();
    let mut summaries = Vec::with_capacity(2);
    for (name, schedule) in [
        ("counterexample", PressureSchedule::ExpSqrt { base: 2.0 }),
        ("convergent", PressureSchedule::Linear { slope: 1.0 }),
    ] {
        let result = run_scenario(&system, &schedule, STEPS, None, DEFAULT_TOLERANCE, max_rho)
            .map_err(|e| Failure::numeric(&e))?;
        let path = out_dir.join(format!("{name}.csv"));
        let mut w = create_output(&path)?;
        write_trajectory_csv(&mut w, &result.trajectory, &result.report, &limit)
            .and_then(|_| w.flush())
            .map_err(|e| Failure::io(&e))?;
        note(cli, format!("wrote {}", path.display()));
        summaries.push(ScenarioSummary::from_result(&result));
    }

    let phi = euler_phi(0.1, 1e-8).map_err(|e| Failure::numeric(&e))?;
    let convergent = summaries.pop().expect("two scenarios ran");
    let counterexample = summaries.pop().expect("two scenarios ran");
    let summary = RunSummary {
        euler_phi_one_tenth: phi,
        counterexample,
        convergent,
    };
    let path = out_dir.join("summary.json");
    let mut w = create_output(&path)?;
    write_summary_json(&mut w, &summary)
        .and_then(|_| w.flush())
        .map_err(|e| Failure::io(&e))?;
    note(cli, format!("wrote {}", path.display()));
    Ok(())
}
