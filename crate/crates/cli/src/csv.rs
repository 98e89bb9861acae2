//! Figure CSV output: `theta,d,gamma_plus`, LF line endings, 17 significant
//! digits written as plain decimals.

use std::fmt::Write as _;
use std::path::Path;

use bwm_core::berry::FigureRow;

use crate::error::CliError;

pub const HEADER: &str = "theta,d,gamma_plus";

/// Round-trippable plain decimal with at most 17 significant digits and no
/// trailing zeros.
pub fn sig17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    let point = exp + 1;
    if point <= 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-point) as usize));
        out.push_str(digits);
    } else if point as usize >= digits.len() {
        out.push_str(digits);
        out.push_str(&"0".repeat(point as usize - digits.len()));
    } else {
        let (int, frac) = digits.split_at(point as usize);
        out.push_str(int);
        out.push('.');
        out.push_str(frac);
    }
    out
}

/// Rows sorted by `(d, theta)`.
pub fn render(rows: &[FigureRow]) -> String {
    let mut sorted = rows.to_vec();
    sorted.sort_by(|a, b| a.d.total_cmp(&b.d).then(a.theta.total_cmp(&b.theta)));
    let mut out = String::with_capacity(48 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in &sorted {
        let _ = writeln!(out, "{},{},{}", sig17(r.theta), sig17(r.d), sig17(r.gamma_plus));
    }
    out
}

pub fn write(path: &Path, rows: &[FigureRow]) -> Result<(), CliError> {
    std::fs::write(path, render(rows)).map_err(|e| CliError::io(path, e))
}
