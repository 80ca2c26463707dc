//! Landscape scan: V₁ and its derivatives over the window.

use serde::Serialize;

use vacuakit::format::sig17;

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;

pub const CSV_HEADER: &str = "phi,v1,dv1,d2v1";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub phi: f64,
    pub v1: f64,
    pub dv1: f64,
    pub d2v1: f64,
}

/// `grid_n` evenly spaced rows across the window, both ends included.
pub fn scan_rows(cfg: &RunConfig) -> Result<Vec<ScanRow>, CliError> {
    cfg.validate()?;
    cfg.params
        .validate()
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let (lo, hi) = cfg.window();
    let n = cfg.grid_n;
    let step = (hi - lo) / (n - 1) as f64;
    let p = &cfg.params;
    Ok((0..n)
        .map(|i| {
            let phi = if i == n - 1 { hi } else { lo + step * i as f64 };
            ScanRow {
                phi,
                v1: p.v1(phi),
                dv1: p.dv1(phi),
                d2v1: p.d2v1(phi),
            }
        })
        .collect())
}

pub fn render(rows: &[ScanRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut s = String::with_capacity(rows.len() * 96);
            s.push_str(CSV_HEADER);
            s.push('\n');
            for r in rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    sig17(r.phi),
                    sig17(r.v1),
                    sig17(r.dv1),
                    sig17(r.d2v1)
                ));
            }
            s
        }
        OutputFormat::Json => crate::jsonfmt::to_string(&rows),
    }
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<String, CliError> {
    Ok(render(&scan_rows(cfg)?, cfg.format_or(OutputFormat::Csv)))
}
