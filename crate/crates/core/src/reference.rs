//! Published reference values the reconciliation report compares against.
//! Each carries a short label saying what the number was quoted as.

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Printed {
    pub value: f64,
    pub tag: &'static str,
}

const fn printed(value: f64, tag: &'static str) -> Printed {
    Printed { value, tag }
}

pub const PHI_FALSE: Printed = printed(0.5472, "quoted false vacuum");
pub const PHI_TRUE: Printed = printed(5.457, "quoted true vacuum");
pub const PHI_STAR: Printed = printed(0.99 * PI, "quoted parabola center");
pub const GAP: Printed = printed(0.041, "quoted vacuum gap");
pub const LENGTH_SCALE: Printed = printed(24.39, "quoted bubble separation");
pub const PHI0_THRESHOLD: Printed = printed(3.1, "quoted eternal-inflation threshold");
pub const MSTAR: Printed = printed(8.676e-20, "quoted effective mass");
pub const X_VANTAGE: Printed = printed(0.663, "quoted vantage energy");

pub const CURVATURE_AT_TRUE: Printed = printed(0.504, "quoted curvature, true vacuum");
pub const HUBBLE_SQ_AT_TRUE: Printed = printed(4.962, "quoted H^2, true vacuum");
pub const CURVATURE_AT_FALSE: Printed = printed(0.575, "quoted curvature, false vacuum");
pub const HUBBLE_SQ_AT_FALSE: Printed = printed(5.305, "quoted H^2, false vacuum");
pub const CURVATURE_AT_PHI_STAR: Printed = printed(0.335, "quoted curvature, parabola center");
pub const HUBBLE_SQ_AT_PHI_STAR: Printed = printed(8.378, "quoted H^2, parabola center");

/// Other φ* values quoted alongside the default 0.99π.
pub const PHI_STAR_ALTERNATIVES: [Printed; 2] = [printed(1.03 * PI, "quoted alternative"), printed(1.125 * PI, "quoted alternative")];

/// Relative difference above which a computed value is flagged.
pub const DISCREPANCY_REL_TOL: f64 = 1e-2;

/// True when `computed` differs from the printed value by more than
/// [`DISCREPANCY_REL_TOL`] relative, or is not finite.
pub fn is_discrepant(printed: f64, computed: f64) -> bool {
    if !computed.is_finite() {
        return true;
    }
    let scale = printed.abs().max(f64::MIN_POSITIVE);
    (computed - printed).abs() / scale > DISCREPANCY_REL_TOL
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags() {
        assert!(!is_discrepant(3.1, 3.0902));
        assert!(is_discrepant(0.041, 0.0497));
        assert!(is_discrepant(1.0, f64::NAN));
        assert!(!is_discrepant(0.0, 0.0));
    }
}
