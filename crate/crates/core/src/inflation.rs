//! Chaotic-inflation reference quantities, the Hubble rate, flat-slow-roll
//! and negative-pressure diagnostics, and the dilaton coupling.

use serde::Serialize;
use std::f64::consts::PI;

use crate::error::InflationError;
use crate::potential::PotentialParams;

/// Fields below this are reported as weakly coupled (e^φ < 0.05).
pub const WEAK_COUPLING_PHI: f64 = -3.0;

/// H² = (8π/3)·V with G = 1.
pub fn hubble_sq(v: f64) -> Result<f64, InflationError> {
    if v < 0.0 {
        return Err(InflationError::NegativeEnergy(v));
    }
    Ok(8.0 * PI / 3.0 * v)
}

/// Reduced Planck mass M_p/√(8π).
pub fn reduced_planck_mass(planck_mass: f64) -> f64 {
    planck_mass / (8.0 * PI).sqrt()
}

/// Which potential feeds the slow-roll ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialChoice {
    /// V → V₁, the substitution used for both flatness and ε, η.
    #[default]
    V1,
    /// V₁ plus the vacuum offset.
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlowRollOptions {
    pub flatness_threshold: f64,
    pub potential: PotentialChoice,
}

impl Default for SlowRollOptions {
    fn default() -> Self {
        Self {
            flatness_threshold: 1.0,
            potential: PotentialChoice::V1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlowRollReport {
    pub phi: f64,
    pub v: f64,
    pub d2v: f64,
    pub hubble_sq: f64,
    /// |V″|/H²; "≪ 1" is the flat-slow-roll requirement.
    pub flatness_ratio: f64,
    pub epsilon: f64,
    pub eta: f64,
    pub flat_ok: bool,
    pub pressure_ok: bool,
}

impl SlowRollReport {
    pub const CSV_HEADER: &'static str =
        "phi,v,d2v,hubble_sq,flatness_ratio,epsilon,eta,flat_ok,pressure_ok";
}

pub fn slow_roll_report(params: &PotentialParams, phi: f64) -> Result<SlowRollReport, InflationError> {
    slow_roll_report_with(params, phi, &SlowRollOptions::default())
}

pub fn slow_roll_report_with(
    params: &PotentialParams,
    phi: f64,
    opts: &SlowRollOptions,
) -> Result<SlowRollReport, InflationError> {
    if !(opts.flatness_threshold > 0.0) {
        return Err(InflationError::InvalidThreshold(opts.flatness_threshold));
    }
    let v = match opts.potential {
        PotentialChoice::V1 => params.v1(phi),
        PotentialChoice::Total => params.v_total(phi),
    };
    if v == 0.0 {
        return Err(InflationError::ZeroPotential(phi));
    }
    let dv = params.dv1(phi);
    let d2v = params.d2v1(phi);
    assemble(phi, v, dv, d2v, params.planck_mass, opts.flatness_threshold)
}

/// Builds a report from V, V′, V″ directly. Used by the potential path
/// above and by anything holding derivatives from elsewhere.
pub fn assemble(
    phi: f64,
    v: f64,
    dv: f64,
    d2v: f64,
    planck_mass: f64,
    flatness_threshold: f64,
) -> Result<SlowRollReport, InflationError> {
    if v == 0.0 {
        return Err(InflationError::ZeroPotential(phi));
    }
    let h2 = hubble_sq(v)?;
    let mt2 = reduced_planck_mass(planck_mass).powi(2);
    let epsilon = 0.5 * mt2 * (dv / v).powi(2);
    let eta = mt2 * d2v / v;
    let flatness_ratio = d2v.abs() / h2;
    Ok(SlowRollReport {
        phi,
        v,
        d2v,
        hubble_sq: h2,
        flatness_ratio,
        epsilon,
        eta,
        flat_ok: flatness_ratio < flatness_threshold,
        pressure_ok: epsilon.abs() < 1.0 && eta.abs() < 1.0,
    })
}

/// Lower bound √(60/2π) on the initial chaotic-inflation field, in M_p.
pub fn phi0_threshold() -> f64 {
    (60.0 / (2.0 * PI)).sqrt()
}

/// Field value where classical and quantum fluctuations match,
/// (3/16π)^{1/4}·M_p^{3/2}/m^{1/2}.
pub fn phi_star_estimate(m: f64, planck_mass: f64) -> f64 {
    (3.0 / (16.0 * PI)).powf(0.25) * planck_mass.powf(1.5) / m.sqrt()
}

/// Linear classical roll φ₀ − m·t/√(12πG).
pub fn phi_classical_roll(phi0: f64, m: f64, g: f64, t: f64) -> f64 {
    phi0 - m * t / (12.0 * PI * g).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DilatonCoupling {
    pub alpha_gauge: f64,
    pub weak_coupling: bool,
}

/// α_gauge ~ e^φ.
pub fn dilaton_coupling(phi: f64) -> f64 {
    phi.exp()
}

pub fn dilaton_report(phi: f64) -> DilatonCoupling {
    DilatonCoupling {
        alpha_gauge: dilaton_coupling(phi),
        weak_coupling: phi < WEAK_COUPLING_PHI,
    }
}
