use std::fmt::Write as _;
use std::str::FromStr;

use crate::harness::{BenchError, BenchRecord};

pub const CSV_HEADER: &str = "op,radix,dims,total_n,reps,median_s,min_s,flop_est,bytes_est,ai_est";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Csv,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "md" => Ok(TableFormat::Markdown),
            other => Err(format!("unknown format {other:?} (expected csv or md)")),
        }
    }
}

/// Renders records as CSV (header plus one line per record) or as an aligned
/// Markdown table (header, rule, one row per record).
pub fn emit_table(records: &[BenchRecord], format: TableFormat) -> Result<String, BenchError> {
    if records.is_empty() {
        return Err(BenchError::NoRecords);
    }
    let header: Vec<&str> = CSV_HEADER.split(',').collect();
    let rows: Vec<Vec<String>> = records.iter().map(row).collect();
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in &rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            let widths: Vec<usize> = (0..header.len())
                .map(|c| {
                    rows.iter()
                        .map(|r| r[c].len())
                        .chain([header[c].len(), 3])
                        .max()
                        .unwrap()
                })
                .collect();
            let line = |cells: &[String]| {
                let mut s = String::from("|");
                for (cell, w) in cells.iter().zip(&widths) {
                    let _ = write!(s, " {cell:<w$} |");
                }
                s.push('\n');
                s
            };
            let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
            out.push_str(&line(&header));
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            out.push_str(&line(&rule));
            for r in &rows {
                out.push_str(&line(r));
            }
        }
    }
    Ok(out)
}

fn row(r: &BenchRecord) -> Vec<String> {
    vec![
        r.op.to_string(),
        r.radix.to_string(),
        r.shape.to_string(),
        r.total_n.to_string(),
        r.reps.to_string(),
        significant(r.median_seconds, 6),
        significant(r.min_seconds, 6),
        format!("{:.0}", r.flop_estimate),
        format!("{:.0}", r.bytes_estimate),
        format!("{:.3}", r.ai_estimate),
    ]
}

/// `%g`-style rendering with `digits` significant digits.
pub fn significant(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let exponent = value.abs().log10().floor() as i32;
    if (-5..digits as i32).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        let s = format!("{value:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{:.*e}", digits - 1, value)
    }
}
