//! One report per parameter value, flattened to a row.

use rayon::prelude::*;
use serde::Serialize;

use vacuakit::format::sig17;

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;
use crate::report::{build_report, Report, Severity};

pub const THREADS_ENV: &str = "VACUAKIT_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum SweepParam {
    M,
    PhiStar,
    CosineAmplitude,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::M => "m",
            SweepParam::PhiStar => "phi_star",
            SweepParam::CosineAmplitude => "cosine_amplitude",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "m" => Ok(Self::M),
            "phi_star" => Ok(Self::PhiStar),
            "cosine_amplitude" => Ok(Self::CosineAmplitude),
            other => Err(CliError::Usage(format!(
                "unknown sweep parameter {other:?} (expected m, phi_star or cosine_amplitude)"
            ))),
        }
    }

    fn apply(self, cfg: &mut RunConfig, value: f64) {
        let p = &mut cfg.params;
        match self {
            SweepParam::M => p.inflaton_mass = value,
            SweepParam::PhiStar => p.phi_star = value,
            SweepParam::CosineAmplitude => p.cosine_amplitude = value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: &'static str,
    pub value: f64,
    pub phi_false: Option<f64>,
    pub phi_true: Option<f64>,
    pub gap_potential: Option<f64>,
    pub gap_bogomilnyi: Option<f64>,
    pub brace_a: Option<f64>,
    pub brace_b: Option<f64>,
    pub length_scale: Option<f64>,
    pub flatness_ratio_phi_star: Option<f64>,
    pub epsilon_false: Option<f64>,
    pub eta_false: Option<f64>,
    pub epsilon_true: Option<f64>,
    pub eta_true: Option<f64>,
    pub s_t: f64,
    pub cdl_rate: Option<f64>,
    pub garriga_n: Option<f64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub t_if: Option<f64>,
    pub status: &'static str,
}

pub const CSV_HEADER: &str = "param,value,phi_false,phi_true,gap_potential,gap_bogomilnyi,brace_a,brace_b,length_scale,flatness_ratio_phi_star,epsilon_false,eta_false,epsilon_true,eta_true,s_t,cdl_rate,garriga_n,c1,c2,t_if,status";

impl SweepRow {
    fn from_report(param: SweepParam, value: f64, r: &Report) -> Self {
        let at = |s| r.slow_roll_at(s).copied();
        let v = r.vacua;
        Self {
            param: param.name(),
            value,
            phi_false: v.map(|v| v.phi_false),
            phi_true: v.map(|v| v.phi_true),
            gap_potential: v.map(|v| v.gap_potential),
            gap_bogomilnyi: v.map(|v| v.gap_bogomilnyi),
            // depends only on m/M_p, so it exists even without a vacuum pair
            brace_a: Some(r.printed_field_vacua.brace_a),
            brace_b: v.map(|v| v.brace_b),
            length_scale: v.and_then(|v| v.length_scale),
            flatness_ratio_phi_star: at("phi_star").map(|s| s.flatness_ratio),
            epsilon_false: at("computed_false").map(|s| s.epsilon),
            eta_false: at("computed_false").map(|s| s.eta),
            epsilon_true: at("computed_true").map(|s| s.epsilon),
            eta_true: at("computed_true").map(|s| s.eta),
            s_t: r.nucleation.s_t,
            cdl_rate: r.nucleation.cdl_rate,
            garriga_n: r.nucleation.garriga_n,
            c1: r.nucleation.c1,
            c2: r.nucleation.c2,
            t_if: r.nucleation.t_if,
            status: status(r.worst_severity()),
        }
    }

    fn failed(param: SweepParam, value: f64) -> Self {
        Self {
            param: param.name(),
            value,
            phi_false: None,
            phi_true: None,
            gap_potential: None,
            gap_bogomilnyi: None,
            brace_a: None,
            brace_b: None,
            length_scale: None,
            flatness_ratio_phi_star: None,
            epsilon_false: None,
            eta_false: None,
            epsilon_true: None,
            eta_true: None,
            s_t: f64::NAN,
            cdl_rate: None,
            garriga_n: None,
            c1: None,
            c2: None,
            t_if: None,
            status: "error",
        }
    }

    fn csv_line(&self) -> String {
        let o = |v: Option<f64>| v.map(sig17).unwrap_or_default();
        [
            self.param.to_owned(),
            sig17(self.value),
            o(self.phi_false),
            o(self.phi_true),
            o(self.gap_potential),
            o(self.gap_bogomilnyi),
            o(self.brace_a),
            o(self.brace_b),
            o(self.length_scale),
            o(self.flatness_ratio_phi_star),
            o(self.epsilon_false),
            o(self.eta_false),
            o(self.epsilon_true),
            o(self.eta_true),
            o(Some(self.s_t).filter(|v| v.is_finite())),
            o(self.cdl_rate),
            o(self.garriga_n),
            o(self.c1),
            o(self.c2),
            o(self.t_if),
            self.status.to_owned(),
        ]
        .join(",")
    }
}

fn status(s: Option<Severity>) -> &'static str {
    match s {
        None => "ok",
        Some(Severity::Warning) => "warning",
        Some(Severity::Error) => "error",
    }
}

/// Thread cap from `VACUAKIT_THREADS`; unset or unparsable means rayon's default.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Rows come back in input order regardless of how many threads ran them.
pub fn sweep_rows(
    cfg: &RunConfig,
    param: SweepParam,
    values: &[f64],
    threads: Option<usize>,
) -> Result<Vec<SweepRow>, CliError> {
    cfg.validate()?;
    if values.is_empty() {
        return Err(CliError::Usage("sweep needs at least one value".into()));
    }
    let run = |&value: &f64| {
        let mut c = cfg.clone();
        param.apply(&mut c, value);
        match build_report(&c) {
            Ok(r) => Ok(SweepRow::from_report(param, value, &r)),
            Err(CliError::Compute(_)) => Ok(SweepRow::failed(param, value)),
            Err(e) => Err(e),
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Compute(format!("thread pool: {e}")))?;
    pool.install(|| values.par_iter().map(run).collect())
}

pub fn render(rows: &[SweepRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in rows {
                s.push_str(&r.csv_line());
                s.push('\n');
            }
            s
        }
        OutputFormat::Json => crate::jsonfmt::to_string(&rows),
    }
}

pub struct SweepOutput {
    pub text: String,
    pub rows: Vec<SweepRow>,
}

pub fn cmd_sweep(cfg: &RunConfig, param: SweepParam, values: &[f64]) -> Result<SweepOutput, CliError> {
    let rows = sweep_rows(cfg, param, values, thread_cap())?;
    Ok(SweepOutput {
        text: render(&rows, cfg.format_or(OutputFormat::Csv)),
        rows,
    })
}
