//! Fixed-precision rendering of reals for reports.

/// Significant digits used by every report.
pub const REPORT_DIGITS: usize = 12;

/// Rounds to `digits` significant digits, ties away from zero, and renders
/// positionally with trailing zeros trimmed. Magnitudes outside
/// `[1e-6, 1e15)` fall back to `d.ddde±x` notation.
pub fn format_sig(value: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return "0".to_string();
    }
    let (negative, mantissa, exponent) = round_half_away(value, digits);
    let sign = if negative { "-" } else { "" };
    if !(-6..15).contains(&exponent) {
        let (head, tail) = mantissa.split_at(1);
        let tail = tail.trim_end_matches('0');
        let dot = if tail.is_empty() { "" } else { "." };
        return format!("{sign}{head}{dot}{tail}e{exponent}");
    }
    let body = if exponent >= 0 {
        let int_len = exponent as usize + 1;
        if mantissa.len() <= int_len {
            format!("{mantissa}{}", "0".repeat(int_len - mantissa.len()))
        } else {
            let (int, frac) = mantissa.split_at(int_len);
            let frac = frac.trim_end_matches('0');
            if frac.is_empty() {
                int.to_string()
            } else {
                format!("{int}.{frac}")
            }
        }
    } else {
        let zeros = "0".repeat((-exponent - 1) as usize);
        format!("0.{zeros}{}", mantissa.trim_end_matches('0'))
    };
    format!("{sign}{body}")
}

/// `format_sig` at [`REPORT_DIGITS`].
pub fn sig12(value: f64) -> String {
    format_sig(value, REPORT_DIGITS)
}

/// `value` rounded to [`REPORT_DIGITS`] significant digits, as an `f64`.
pub fn round_sig12(value: f64) -> f64 {
    sig12(value)
        .parse()
        .expect("sig12 renders a parseable float")
}

/// Sign, `digits` significant decimal digits and the decimal exponent of the
/// leading digit.
fn round_half_away(value: f64, digits: usize) -> (bool, String, i32) {
    // 40 fractional digits reproduce the exact binary value closely enough
    // that only genuine decimal ties land on a trailing 5.
    let sci = format!("{:.40e}", value.abs());
    let (mant, exp) = sci.split_once('e').expect("scientific notation");
    let mut exponent: i32 = exp.parse().expect("integer exponent");
    let all: Vec<u8> = mant
        .bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    let mut kept: Vec<u8> = all[..digits].to_vec();
    if all[digits] >= 5 {
        let mut i = digits;
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                exponent += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let mantissa = kept.iter().map(|d| char::from(b'0' + d)).collect();
    (value.is_sign_negative(), mantissa, exponent)
}
