//! The tilted cosine-plus-quadratic inflaton potential and the extended
//! sine-Gordon template used to read off the Bogomil'nyi gap.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::ParamError;

/// Parameters of V₁(φ) = M_p²·A·(1 − cos φ) + (m²/2)(φ − φ*)², plus the
/// constant offset that turns V₁ into the full V.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    pub planck_mass: f64,
    pub inflaton_mass: f64,
    pub phi_star: f64,
    pub cosine_amplitude: f64,
    pub vacuum_offset: f64,
}

impl PotentialParams {
    pub const DEFAULT_INFLATON_MASS: f64 = 0.441;
    pub const DEFAULT_COSINE_AMPLITUDE: f64 = 0.5989;
    pub const DEFAULT_PHI_STAR: f64 = 0.99 * PI;

    /// The reference parameter set: M_p = 1, m = 0.441, A = 0.5989,
    /// φ* = 0.99π, zero offset.
    pub fn baseline() -> Self {
        Self {
            planck_mass: 1.0,
            inflaton_mass: Self::DEFAULT_INFLATON_MASS,
            phi_star: Self::DEFAULT_PHI_STAR,
            cosine_amplitude: Self::DEFAULT_COSINE_AMPLITUDE,
            vacuum_offset: 0.0,
        }
    }

    pub fn new(
        planck_mass: f64,
        inflaton_mass: f64,
        phi_star: f64,
        cosine_amplitude: f64,
        vacuum_offset: f64,
    ) -> Result<Self, ParamError> {
        let p = Self {
            planck_mass,
            inflaton_mass,
            phi_star,
            cosine_amplitude,
            vacuum_offset,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let finite = [
            self.planck_mass,
            self.inflaton_mass,
            self.phi_star,
            self.cosine_amplitude,
            self.vacuum_offset,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return Err(ParamError::NonFinite);
        }
        if self.planck_mass <= 0.0 {
            return Err(ParamError::NonPositive("planck_mass", self.planck_mass));
        }
        if self.inflaton_mass <= 0.0 {
            return Err(ParamError::NonPositive("inflaton_mass", self.inflaton_mass));
        }
        if self.cosine_amplitude < 0.0 {
            return Err(ParamError::Negative("cosine_amplitude", self.cosine_amplitude));
        }
        if self.vacuum_offset < 0.0 {
            return Err(ParamError::Negative("vacuum_offset", self.vacuum_offset));
        }
        Ok(())
    }

    /// Set when m ≥ M_p. Not an error: the reference set itself has m = 0.441 M_p.
    pub fn heavy_inflaton_warning(&self) -> bool {
        self.inflaton_mass >= self.planck_mass
    }

    /// Inflaton mass in units of M_p.
    pub fn mass_ratio(&self) -> f64 {
        self.inflaton_mass / self.planck_mass
    }

    pub fn with_inflaton_mass(self, m: f64) -> Self {
        Self {
            inflaton_mass: m,
            ..self
        }
    }

    pub fn with_phi_star(self, phi_star: f64) -> Self {
        Self { phi_star, ..self }
    }

    pub fn with_cosine_amplitude(self, a: f64) -> Self {
        Self {
            cosine_amplitude: a,
            ..self
        }
    }

    pub fn with_vacuum_offset(self, offset: f64) -> Self {
        Self {
            vacuum_offset: offset,
            ..self
        }
    }

    fn cosine_scale(&self) -> f64 {
        self.planck_mass * self.planck_mass * self.cosine_amplitude
    }

    fn mass_sq(&self) -> f64 {
        self.inflaton_mass * self.inflaton_mass
    }

    pub fn v1(&self, phi: f64) -> f64 {
        let d = phi - self.phi_star;
        self.cosine_scale() * (1.0 - phi.cos()) + 0.5 * self.mass_sq() * d * d
    }

    /// V = offset + V₁. The offset stands in for the brane-world term with
    /// the radial field pinned at zero.
    pub fn v_total(&self, phi: f64) -> f64 {
        self.vacuum_offset + self.v1(phi)
    }

    pub fn dv1(&self, phi: f64) -> f64 {
        self.cosine_scale() * phi.sin() + self.mass_sq() * (phi - self.phi_star)
    }

    pub fn d2v1(&self, phi: f64) -> f64 {
        self.cosine_scale() * phi.cos() + self.mass_sq()
    }
}

impl Default for PotentialParams {
    fn default() -> Self {
        Self::baseline()
    }
}

/// Free-function forms of the potential methods.
pub fn v1(params: &PotentialParams, phi: f64) -> f64 {
    params.v1(phi)
}

pub fn v_total(params: &PotentialParams, phi: f64) -> f64 {
    params.v_total(phi)
}

pub fn dv1(params: &PotentialParams, phi: f64) -> f64 {
    params.dv1(phi)
}

pub fn d2v1(params: &PotentialParams, phi: f64) -> f64 {
    params.d2v1(phi)
}

/// Coefficients of the extended sine-Gordon quartic template.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EsgParams {
    pub c1: f64,
    pub c2: f64,
    pub phi0: f64,
}

impl EsgParams {
    /// C₁(φ−φ₀)² − 4C₂φφ₀(φ−φ₀)² + C₂(φ²−φ₀²)²
    pub fn value(&self, phi: f64) -> f64 {
        let d = phi - self.phi0;
        let s = phi * phi - self.phi0 * self.phi0;
        self.c1 * d * d - 4.0 * self.c2 * phi * self.phi0 * d * d + self.c2 * s * s
    }
}

pub fn v_extended(esg: &EsgParams, phi: f64) -> f64 {
    esg.value(phi)
}
