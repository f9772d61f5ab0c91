/// Renders `value` with `digits` fractional digits, trailing zeros removed.
///
/// Magnitudes in `[1e-3, 1e12)` are printed in fixed notation, everything
/// else in scientific notation with a `digits`-digit mantissa.
pub fn scalar(value: f64, digits: usize) -> String {
    if value.is_nan() {
        return "nan".into();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if value == 0.0 {
        return "0".into();
    }
    let magnitude = value.abs();
    if (1e-3..1e12).contains(&magnitude) {
        let fixed = format!("{value:.digits$}");
        let trimmed = trim_fraction(&fixed);
        if trimmed == "-0" { "0".into() } else { trimmed.into() }
    } else {
        let sci = format!("{value:.digits$e}");
        let (mantissa, exponent) = sci.split_once('e').expect("scientific format has an exponent");
        format!("{}e{exponent}", trim_fraction(mantissa))
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Shortest round-trip form, with `inf` for infinities (CSV cells). Very
/// small or large magnitudes switch to exponent notation.
pub fn exact(value: f64) -> String {
    if value.is_infinite() {
        if value > 0.0 { "inf".into() } else { "-inf".into() }
    } else if value != 0.0 && !(1e-5..1e16).contains(&value.abs()) {
        format!("{value:e}")
    } else {
        value.to_string()
    }
}
