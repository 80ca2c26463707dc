//! Shared fixtures for the criterion benches.

use vacuakit::vacua::default_window;
use vacuakit::PotentialParams;

/// Reference parameters and their default scan window.
pub fn reference_setup() -> (PotentialParams, f64, f64) {
    let p = PotentialParams::baseline();
    let (lo, hi) = default_window(&p);
    (p, lo, hi)
}

/// Log-spaced inflaton masses for sweep benches.
pub fn mass_sweep(n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| 0.05 * (20.0f64).powf(i as f64 / (n.max(2) - 1) as f64))
        .collect()
}
