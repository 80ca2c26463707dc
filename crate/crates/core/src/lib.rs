//! Numerics for a tilted cosine inflaton potential with a false vacuum:
//! landscape and vacuum location, the Bogomil'nyi gap and separation
//! length, slow-roll diagnostics, nucleation rates, tunneling amplitudes,
//! and Gaussian wavefunctionals over discretized field configurations.
//!
//! All quantities are in Planck units (ħ = c = G = M_p = 1) unless a field
//! says otherwise.

pub mod error;
pub mod format;
pub mod inflation;
pub mod nucleation;
pub mod potential;
pub mod quadrature;
pub mod reference;
pub mod units;
pub mod vacua;
pub mod wavefunctional;

pub use error::{FieldError, InflationError, NucleationError, ParamError, VacuaError};
pub use inflation::{slow_roll_report, SlowRollOptions, SlowRollReport};
pub use nucleation::{CdlInputs, GarrigaInputs, Rate, TunnelInputs};
pub use potential::{EsgParams, PotentialParams};
pub use units::{default_units, effective_mass, MassScales, UnitSystem};
pub use vacua::{classify_vacua, scan_critical_points, CriticalKind, CriticalPoint, VacuumPair};
pub use wavefunctional::{FieldGrid, GaussianFunctional};
