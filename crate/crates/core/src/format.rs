//! Number formatting shared by every CSV/JSON writer.

/// Seventeen significant digits in scientific notation; round-trips any f64.
pub fn sig17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".to_owned()
    } else if x > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}
