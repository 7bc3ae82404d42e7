//! Plain-text rendering: fixed-significance numbers and CSV tables.
//!
//! Every number the tool emits goes through [`format_significant`] so that
//! output is deterministic, locale-independent (`.` decimal separator, no
//! grouping), and round-trips through an `f64` parse to within one unit in
//! the last rendered digit.

use std::io::{self, Write};

use hfent_core::sweep::SweepSeries;

/// Number of significant digits in all rendered values.
pub const SIGNIFICANT_DIGITS: i32 = 12;

/// Renders `x` in plain decimal notation with [`SIGNIFICANT_DIGITS`]
/// significant digits.
///
/// Zero renders as `0.000000000000` and values of magnitude one or more
/// keep exactly twelve digits overall (`-1.28077640640`), so columns of
/// comparable magnitudes align. Magnitudes at `1e12` or above fall back to
/// plain integer rendering rather than losing digits before the point.
pub fn format_significant(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    // Canonicalize negative zero so equal values render identically.
    let x = if x == 0.0 { 0.0 } else { x };
    let decimals = if x == 0.0 {
        SIGNIFICANT_DIGITS
    } else {
        (SIGNIFICANT_DIGITS - 1 - x.abs().log10().floor() as i32).max(0)
    };
    format!("{x:.*}", decimals as usize)
}

/// Writes one sweep table as CSV: a header row naming the parameter and
/// value columns, then one row per record. LF line endings, no quoting
/// (all fields are numeric).
pub fn write_series_csv<W: Write + ?Sized>(out: &mut W, series: &SweepSeries) -> io::Result<()> {
    write!(out, "{}", series.parameter_name())?;
    for name in series.value_names() {
        write!(out, ",{name}")?;
    }
    writeln!(out)?;
    for record in series.records() {
        write!(out, "{}", format_significant(record.parameter))?;
        for &v in &record.values {
            write!(out, ",{}", format_significant(v))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Writes the thermal sweep as one long CSV with header `t,c,negativity`:
/// the per-temperature series are stacked in the order given, temperature
/// repeated on every row so the file is self-describing.
pub fn write_thermal_csv<W: Write + ?Sized>(
    out: &mut W,
    sweeps: &[(f64, SweepSeries)],
) -> io::Result<()> {
    writeln!(out, "t,c,negativity")?;
    for (t, series) in sweeps {
        let t_text = format_significant(*t);
        for record in series.records() {
            writeln!(
                out,
                "{},{},{}",
                t_text,
                format_significant(record.parameter),
                format_significant(record.values[0]),
            )?;
        }
    }
    Ok(())
}
