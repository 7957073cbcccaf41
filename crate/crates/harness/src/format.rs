//! Deterministic, locale-independent number formatting for CSV output.

/// Full-precision scientific form for per-trial rows.
pub fn full(v: f64) -> String {
    format!("{v:.16e}")
}

/// Four significant digits in `d.dddE+xx` style for summary tables.
pub fn sci4(v: f64) -> String {
    if v == 0.0 {
        return "0.000E+00".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sign = if v < 0.0 { "-" } else { "" };
    let mag = v.abs();
    let mut exp = mag.log10().floor() as i32;
    let mut mantissa = mag / 10f64.powi(exp);
    // rounding to 3 decimals can push the mantissa to 10.0
    if format!("{mantissa:.3}").starts_with("10") {
        mantissa /= 10.0;
        exp += 1;
    }
    format!("{sign}{mantissa:.3}E{exp:+03}")
}
