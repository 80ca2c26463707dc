//! Nucleation rates and densities: the Coleman–De Luccia rate, Garriga's
//! pair density, the closed-form tunneling amplitude, and the Gaussian
//! wavefunctional normalizations that feed it.

use serde::Serialize;
use std::f64::consts::PI;

use crate::error::NucleationError;
use crate::quadrature::{integrate, QuadOptions};

/// Largest exponent whose `exp` is still finite.
const MAX_EXP_ARG: f64 = 709.782_712_893_384;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CdlInputs {
    pub prefactor_a: f64,
    pub bounce_action_sb: f64,
    pub true_vacuum_density_rho: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GarrigaInputs {
    pub mass_m: f64,
    /// The combined e·E₀²/H² contribution (e is the charge).
    pub field_term: f64,
    pub euclidean_action_se: f64,
}

impl Default for GarrigaInputs {
    fn default() -> Self {
        Self {
            mass_m: 1.0,
            field_term: 0.0,
            euclidean_action_se: 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TunnelInputs {
    pub norm_c1: f64,
    pub norm_c2: f64,
    pub mstar: f64,
    /// Vantage energy x.
    pub x: f64,
    pub length_l: f64,
    pub alpha: f64,
}

impl TunnelInputs {
    /// Inputs with the Gaussian coefficient tied to the separation, α = 1/L.
    pub fn new(norm_c1: f64, norm_c2: f64, mstar: f64, x: f64, length_l: f64) -> Self {
        Self {
            norm_c1,
            norm_c2,
            mstar,
            x,
            length_l,
            alpha: 1.0 / length_l,
        }
    }

    pub fn with_alpha(self, alpha: f64) -> Self {
        Self { alpha, ..self }
    }
}

/// A rate that may have been clamped at the largest finite `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rate {
    pub value: f64,
    pub saturated: bool,
}

/// S_t = −(3/8)·ρ_t.
pub fn cdl_surface_term(rho: f64) -> f64 {
    -0.375 * rho
}

/// ρ_t ≥ (60/4π)·M_p²·m².
pub fn rho_t_lower_bound(m: f64, planck_mass: f64) -> f64 {
    60.0 / (4.0 * PI) * planck_mass * planck_mass * m * m
}

/// Γ = A·exp(−S_b + S_t).
pub fn cdl_rate(inputs: &CdlInputs) -> Result<Rate, NucleationError> {
    if !(inputs.prefactor_a >= 0.0) {
        return Err(NucleationError::DomainError {
            name: "prefactor_a",
            value: inputs.prefactor_a,
        });
    }
    let exponent = -inputs.bounce_action_sb + cdl_surface_term(inputs.true_vacuum_density_rho);
    if inputs.prefactor_a == 0.0 {
        return Ok(Rate {
            value: 0.0,
            saturated: false,
        });
    }
    // ln Γ = ln A + exponent; saturate instead of overflowing
    let log_rate = inputs.prefactor_a.ln() + exponent;
    if log_rate > MAX_EXP_ARG || exponent > MAX_EXP_ARG {
        return Ok(Rate {
            value: f64::MAX,
            saturated: true,
        });
    }
    Ok(Rate {
        value: inputs.prefactor_a * exponent.exp(),
        saturated: false,
    })
}

/// n ≈ (1/2π)·√(M² + field_term)·exp(−S_E).
pub fn garriga_density(inputs: &GarrigaInputs) -> Result<f64, NucleationError> {
    if !(inputs.mass_m >= 0.0) {
        return Err(NucleationError::DomainError {
            name: "mass_m",
            value: inputs.mass_m,
        });
    }
    if !(inputs.field_term >= 0.0) {
        return Err(NucleationError::DomainError {
            name: "field_term",
            value: inputs.field_term,
        });
    }
    let m2 = inputs.mass_m * inputs.mass_m;
    Ok((m2 + inputs.field_term).sqrt() * (-inputs.euclidean_action_se).exp() / (2.0 * PI))
}

/// Argument of the cosh factor, 2√(x/2L) − √(L/2x). Zero at x = L/2.
pub fn cosh_argument(x: f64, length_l: f64) -> f64 {
    2.0 * (x / (2.0 * length_l)).sqrt() - (length_l / (2.0 * x)).sqrt()
}

/// |T_IF| ≈ (C₁C₂/m*)·cosh(2√(x/2L) − √(L/2x))·exp(−αL·L/(2x)).
pub fn tunneling_amplitude(inputs: &TunnelInputs) -> Result<f64, NucleationError> {
    let positive = [
        ("x", inputs.x),
        ("length_l", inputs.length_l),
        ("mstar", inputs.mstar),
        ("norm_c1", inputs.norm_c1),
        ("norm_c2", inputs.norm_c2),
        ("alpha", inputs.alpha),
    ];
    if let Some(&(name, value)) = positive.iter().find(|(_, v)| !(*v > 0.0 && v.is_finite())) {
        return Err(NucleationError::DomainError { name, value });
    }
    let l = inputs.length_l;
    let prefactor = inputs.norm_c1 * inputs.norm_c2 / inputs.mstar;
    let decay = -inputs.alpha * l * (l / (2.0 * inputs.x));
    Ok(prefactor * cosh_argument(inputs.x, l).cosh() * decay.exp())
}

/// C = 1/√(∫₀^L (L²/2π)·exp(−2·brace·u²) du), integrated adaptively to a
/// relative tolerance of 1e-10.
pub fn normalization_constant(brace_i: f64, length_l: f64) -> Result<f64, NucleationError> {
    normalization_constant_with(brace_i, length_l, &QuadOptions::default())
}

pub fn normalization_constant_with(
    brace_i: f64,
    length_l: f64,
    opts: &QuadOptions,
) -> Result<f64, NucleationError> {
    if !(brace_i > 0.0 && brace_i.is_finite()) {
        return Err(NucleationError::DomainError {
            name: "brace_i",
            value: brace_i,
        });
    }
    if !(length_l > 0.0 && length_l.is_finite()) {
        return Err(NucleationError::DomainError {
            name: "length_l",
            value: length_l,
        });
    }
    let weight = length_l * length_l / (2.0 * PI);
    let r = integrate(|u| (-2.0 * brace_i * u * u).exp(), 0.0, length_l, opts)?;
    Ok(1.0 / (weight * r.value).sqrt())
}

/// log₁₀ of |T_IF|/n. Magnitude ≤ 1 means "within an order of magnitude".
pub fn orders_of_magnitude_apart(t_if: f64, density_n: f64) -> f64 {
    (t_if / density_n).log10()
}
