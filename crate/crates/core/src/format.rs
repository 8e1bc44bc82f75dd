//! Number formatting shared by every text output.

/// Shortest representation that parses back to the same `f64`, with `.` as
/// decimal separator and exponent notation only for very large or small
/// magnitudes. Independent of locale.
pub fn fmt_float(x: f64) -> String {
    format!("{x:?}")
}

/// JSON number, or `null` for NaN and infinities.
pub fn json_float(x: f64) -> String {
    if x.is_finite() {
        fmt_float(x)
    } else {
        "null".to_owned()
    }
}
