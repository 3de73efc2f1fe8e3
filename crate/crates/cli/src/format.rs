//! Number formatting shared by the text and CSV writers.

use modinv_core::IntMatrix;

/// `x` with 12 significant digits, trailing zeros dropped; exponent form
/// outside `1e-5 ..= 1e12`.
pub fn fmt12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

/// Like [`fmt12`] but prints values within `1e-12` of zero as `0`.
pub fn fmt12_clean(x: f64) -> String {
    if x.abs() < 1e-12 {
        "0".into()
    } else {
        fmt12(x)
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Space-aligned rows of an integer matrix.
pub fn int_matrix(m: &IntMatrix) -> String {
    let width = m.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|c| format!("{:>width$}", m[(r, c)])).collect();
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt12(1.0), "1");
        assert_eq!(fmt12(-0.0), "0");
        assert_eq!(fmt12(2f64.sqrt()), "1.41421356237");
        assert_eq!(fmt12(12.0), "12");
        assert_eq!(fmt12(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt12(9.999_999_999_999_9), "10");
        assert_eq!(fmt12(1.5e-9), "1.5e-9");
        assert_eq!(fmt12(-2.5e13), "-2.5e13");
        assert_eq!(fmt12_clean(1e-16), "0");
    }
}
