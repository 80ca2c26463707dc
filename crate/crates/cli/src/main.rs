use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use vacuakit_cli::config::{parse_field_value, parse_window, ConfigFile, OutputFormat, RunConfig};
use vacuakit_cli::report::{cmd_report, Severity};
use vacuakit_cli::scan::cmd_scan;
use vacuakit_cli::sweep::{cmd_sweep, SweepParam};
use vacuakit_cli::CliError;

/// Landscape scans, parameter sweeps and reconciliation reports for the
/// tilted-cosine false-vacuum potential.
#[derive(Parser)]
#[command(name = "vacuakit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write phi, v1, dv1, d2v1 across the scan window.
    Scan(Common),
    /// Write the full reconciliation report.
    Report(Common),
    /// One report row per value of a parameter.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Parameter to vary: m, phi_star or cosine_amplitude.
        #[arg(long)]
        param: String,
        /// Comma-separated values (a trailing `pi` multiplies by π).
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true, value_parser = parse_field_value)]
        values: Vec<f64>,
    },
}

#[derive(Args)]
struct Common {
    /// JSON config file; flags override its keys.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Inflaton mass in Planck units.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<f64>,
    #[arg(long = "phi-star", allow_hyphen_values = true, value_parser = parse_field_value)]
    phi_star: Option<f64>,
    /// Cosine amplitude A.
    #[arg(long, allow_hyphen_values = true)]
    amplitude: Option<f64>,
    /// Scan window LO:HI.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    window: Option<(f64, f64)>,
    #[arg(long = "grid-n")]
    grid_n: Option<usize>,
    /// Bounce action S_b.
    #[arg(long, allow_hyphen_values = true)]
    sb: Option<f64>,
    /// Rate prefactor A.
    #[arg(long, allow_hyphen_values = true)]
    prefactor: Option<f64>,
}

impl Common {
    fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            ConfigFile::load(path)?.apply(&mut cfg);
        }
        ConfigFile {
            m: self.m,
            phi_star: self.phi_star,
            amplitude: self.amplitude,
            window: self.window.map(|(lo, hi)| [lo, hi]),
            grid_n: self.grid_n,
            format: self.format,
            out: self.out.clone(),
            sb: self.sb,
            prefactor: self.prefactor,
            ..ConfigFile::default()
        }
        .apply(&mut cfg);
        Ok(cfg)
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output_path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Scan(common) => {
            let cfg = common.resolve()?;
            emit(&cfg, &cmd_scan(&cfg)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report(common) => {
            let cfg = common.resolve()?;
            let out = cmd_report(&cfg)?;
            emit(&cfg, &out.text)?;
            for a in &out.report.annotations {
                eprintln!("{:?}: [{}] {}: {}", a.severity, a.section, a.kind, a.message);
            }
            Ok(match out.severity {
                Some(Severity::Error) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            })
        }
        Command::Sweep {
            common,
            param,
            values,
        } => {
            let param = SweepParam::parse(&param)?;
            let cfg = common.resolve()?;
            let out = cmd_sweep(&cfg, param, &values)?;
            emit(&cfg, &out.text)?;
            let failed = out.rows.iter().filter(|r| r.status == "error").count();
            if failed > 0 {
                eprintln!("error: {failed} sweep value(s) failed");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
