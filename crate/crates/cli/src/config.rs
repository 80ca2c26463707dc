//! Run configuration: a JSON file, then command-line overrides.

use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use vacuakit::vacua::{default_window, MIN_GRID_N};
use vacuakit::PotentialParams;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Inputs to the rate and amplitude section of a report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NucleationConfig {
    pub prefactor_a: f64,
    pub bounce_action_sb: f64,
    pub garriga_mass: f64,
    pub field_term: f64,
    pub euclidean_action_se: f64,
    /// Overrides for C₁, C₂; by default they come from the normalization integrals.
    pub norm_c1: Option<f64>,
    pub norm_c2: Option<f64>,
    /// Overrides the vantage energy x, which otherwise is V₁(φ_F).
    pub vantage_x: Option<f64>,
}

impl Default for NucleationConfig {
    fn default() -> Self {
        Self {
            prefactor_a: 1.0,
            bounce_action_sb: 0.0,
            garriga_mass: 1.0,
            field_term: 0.0,
            euclidean_action_se: 0.0,
            norm_c1: None,
            norm_c2: None,
            vantage_x: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub params: PotentialParams,
    /// Scan window; `None` means [φ* − 2π, φ* + 2π].
    pub window: Option<(f64, f64)>,
    pub grid_n: usize,
    pub flatness_threshold: f64,
    pub epsilon_plus_fraction: f64,
    pub nucleation: NucleationConfig,
    #[serde(skip)]
    pub output_format: Option<OutputFormat>,
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: PotentialParams::baseline(),
            window: None,
            grid_n: 1024,
            flatness_threshold: 1.0,
            epsilon_plus_fraction: 1e-6,
            nucleation: NucleationConfig::default(),
            output_format: None,
            output_path: None,
        }
    }
}

/// On-disk config. Every key is optional; absent keys keep defaults.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub planck_mass: Option<f64>,
    pub m: Option<f64>,
    pub phi_star: Option<f64>,
    pub amplitude: Option<f64>,
    pub offset: Option<f64>,
    pub window: Option<[f64; 2]>,
    pub grid_n: Option<usize>,
    pub flatness_threshold: Option<f64>,
    pub epsilon_plus_fraction: Option<f64>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub sb: Option<f64>,
    pub prefactor: Option<f64>,
    pub garriga_mass: Option<f64>,
    pub field_term: Option<f64>,
    pub euclidean_action: Option<f64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub x: Option<f64>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }

    /// Applies every present key on top of `cfg`. Command-line flags share
    /// this type so they override in exactly the same way.
    pub fn apply(&self, cfg: &mut RunConfig) {
        let p = &mut cfg.params;
        set(&mut p.planck_mass, self.planck_mass);
        set(&mut p.inflaton_mass, self.m);
        set(&mut p.phi_star, self.phi_star);
        set(&mut p.cosine_amplitude, self.amplitude);
        set(&mut p.vacuum_offset, self.offset);
        if let Some([lo, hi]) = self.window {
            cfg.window = Some((lo, hi));
        }
        set(&mut cfg.grid_n, self.grid_n);
        set(&mut cfg.flatness_threshold, self.flatness_threshold);
        set(&mut cfg.epsilon_plus_fraction, self.epsilon_plus_fraction);
        if self.format.is_some() {
            cfg.output_format = self.format;
        }
        if self.out.is_some() {
            cfg.output_path.clone_from(&self.out);
        }
        let n = &mut cfg.nucleation;
        set(&mut n.bounce_action_sb, self.sb);
        set(&mut n.prefactor_a, self.prefactor);
        set(&mut n.garriga_mass, self.garriga_mass);
        set(&mut n.field_term, self.field_term);
        set(&mut n.euclidean_action_se, self.euclidean_action);
        if self.c1.is_some() {
            n.norm_c1 = self.c1;
        }
        if self.c2.is_some() {
            n.norm_c2 = self.c2;
        }
        if self.x.is_some() {
            n.vantage_x = self.x;
        }
    }
}

fn set<T: Copy>(slot: &mut T, v: Option<T>) {
    if let Some(v) = v {
        *slot = v;
    }
}

impl RunConfig {
    pub fn window(&self) -> (f64, f64) {
        self.window.unwrap_or_else(|| default_window(&self.params))
    }

    pub fn format_or(&self, default: OutputFormat) -> OutputFormat {
        self.output_format.unwrap_or(default)
    }

    /// Config-level invariants. Physics parameter validity is checked by
    /// the library and surfaces as a computation error instead.
    pub fn validate(&self) -> Result<(), CliError> {
        let (lo, hi) = self.window();
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(CliError::Usage(format!("window must satisfy lo < hi, got {lo}:{hi}")));
        }
        if self.grid_n < MIN_GRID_N {
            return Err(CliError::Usage(format!(
                "grid_n must be at least {MIN_GRID_N}, got {}",
                self.grid_n
            )));
        }
        if !(self.flatness_threshold > 0.0) {
            return Err(CliError::Usage(format!(
                "flatness_threshold must be > 0, got {}",
                self.flatness_threshold
            )));
        }
        Ok(())
    }
}

/// Parses a field value, accepting a trailing `pi` multiplier (`0.99pi`).
pub fn parse_field_value(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let (num, scale) = match t.strip_suffix("pi").or_else(|| t.strip_suffix('π')) {
        Some(rest) if rest.is_empty() => ("1", std::f64::consts::PI),
        Some(rest) => (rest.trim_end_matches('*'), std::f64::consts::PI),
        None => (t, 1.0),
    };
    num.parse::<f64>()
        .map(|v| v * scale)
        .map_err(|e| format!("invalid number {s:?}: {e}"))
}

/// Parses `LO:HI`.
pub fn parse_window(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("window must be LO:HI, got {s:?}"))?;
    Ok((parse_field_value(lo)?, parse_field_value(hi)?))
}
