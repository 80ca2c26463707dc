//! Planck-unit constants and the mass scales used by the rest of the crate.
//!
//! Everything downstream works with ħ = c = G = M_p = 1. The SI reference
//! values are kept only so reports can state what "1" stands for.

use serde::Serialize;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 2.997_924_58e8;

/// Planck length as printed alongside the normalization, meters.
pub const PLANCK_LENGTH_M: f64 = 1.616e-35;
/// Planck time at the same printed precision, seconds.
pub const PLANCK_TIME_S: f64 = 5.391e-44;
/// Planck mass, GeV.
pub const PLANCK_MASS_GEV: f64 = 1.22e19;

/// Electron mass in units of the Planck mass (canonical stored value).
pub const ELECTRON_MASS_PLANCK: f64 = 4.338e-20;
/// The Planck mass quoted as a multiple of the electron mass.
pub const PLANCK_MASS_IN_ELECTRON_MASSES: f64 = 0.231e20;

/// Order-of-magnitude FRW size of the universe at the Planck epoch, cm.
pub const FRW_PLANCK_EPOCH_SIZE_CM: f64 = 1e-2;
/// The Planck-epoch time used in the FRW size estimate, seconds.
pub const FRW_PLANCK_EPOCH_TIME_S: f64 = 1e-42;

/// CODATA 2018 values, selectable for documentation output only.
pub mod codata {
    pub const PLANCK_LENGTH_M: f64 = 1.616_255e-35;
    pub const PLANCK_TIME_S: f64 = 5.391_247e-44;
    pub const PLANCK_MASS_GEV: f64 = 1.220_890e19;
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitSystem {
    pub planck_mass_gev: f64,
    pub planck_length_m: f64,
    pub planck_time_s: f64,
    pub normalized: bool,
}

impl UnitSystem {
    /// Unit-carrying length. Exactly 1 in the normalized system.
    pub fn length(&self) -> f64 {
        if self.normalized {
            1.0
        } else {
            self.planck_length_m
        }
    }

    pub fn time(&self) -> f64 {
        if self.normalized {
            1.0
        } else {
            self.planck_time_s
        }
    }

    pub fn mass(&self) -> f64 {
        if self.normalized {
            1.0
        } else {
            self.planck_mass_gev
        }
    }

    /// Same normalization, but carrying CODATA reference values.
    pub fn codata() -> Self {
        Self {
            planck_mass_gev: codata::PLANCK_MASS_GEV,
            planck_length_m: codata::PLANCK_LENGTH_M,
            planck_time_s: codata::PLANCK_TIME_S,
            normalized: true,
        }
    }

    /// The SI view of the same constants (accessors return SI values).
    pub fn si(self) -> Self {
        Self {
            normalized: false,
            ..self
        }
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        default_units()
    }
}

/// Normalized Planck units with the printed SI reference values attached.
pub fn default_units() -> UnitSystem {
    UnitSystem {
        planck_mass_gev: PLANCK_MASS_GEV,
        planck_length_m: PLANCK_LENGTH_M,
        planck_time_s: PLANCK_TIME_S,
        normalized: true,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MassScales {
    pub electron_mass_planck: f64,
}

impl MassScales {
    /// The effective tunneling mass m* = 2 m_e. Derived, never stored.
    pub fn effective_mass_mstar(&self) -> f64 {
        2.0 * self.electron_mass_planck
    }
}

impl Default for MassScales {
    fn default() -> Self {
        Self {
            electron_mass_planck: ELECTRON_MASS_PLANCK,
        }
    }
}

/// m* in Planck units.
pub fn effective_mass() -> f64 {
    MassScales::default().effective_mass_mstar()
}
