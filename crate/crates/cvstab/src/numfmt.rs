//! Deterministic decimal formatting for simulated quantities.

/// Format with 12 significant digits, trailing zeros trimmed.
///
/// Values with decimal exponent in `[-4, 12)` render as plain decimals
/// (`-0.3`, `12345.678`); anything else keeps scientific notation
/// (`1.5e-7`). The output is a pure function of the bits of `x`, which is
/// what makes repeated simulation runs byte-identical.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("std formats with an exponent");
    let exp: i32 = exp.parse().expect("std writes a valid exponent");
    let sign = if mantissa.starts_with('-') { "-" } else { "" };
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    if (-4..12).contains(&exp) {
        if exp >= 0 {
            let int_len = (exp + 1) as usize;
            if digits.len() <= int_len {
                format!("{sign}{digits}{}", "0".repeat(int_len - digits.len()))
            } else {
                format!("{sign}{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
        }
    } else if digits.len() == 1 {
        format!("{sign}{digits}e{exp}")
    } else {
        format!("{sign}{}.{}e{exp}", &digits[..1], &digits[1..])
    }
}

#[cfg(test)]
mod tests {
    use super::sig12;

    #[test]
    fn plain_decimals() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-0.3), "-0.3");
        assert_eq!(sig12(0.1 + 0.2), "0.3");
        assert_eq!(sig12(12345.678), "12345.678");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(-2.0), "-2");
        assert_eq!(sig12(0.0001), "0.0001");
    }

    #[test]
    fn scientific_for_extreme_magnitudes() {
        assert_eq!(sig12(1.5e-7), "1.5e-7");
        assert_eq!(sig12(1e-7), "1e-7");
        assert_eq!(sig12(-2.25e13), "-2.25e13");
    }

    #[test]
    fn twelve_significant_digits_survive() {
        assert_eq!(sig12(1.23456789012e0), "1.23456789012");
        assert_eq!(sig12(0.123456789012345), "0.123456789012");
    }
}
