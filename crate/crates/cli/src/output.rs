// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! CSV and JSON writers.
//!
//! CSV: comma separated, '.' decimal point, one header row, LF line endings.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::CliError;

/// `v` rounded to `precision` significant digits, in the shortest form that
/// reads back to the rounded value.
pub fn format_float(v: f64, precision: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{:.*e}", precision.saturating_sub(1), v).parse().expect("formatted float parses");
    if (1e-5..1e16).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

pub fn to_csv(columns: &[String], rows: &[Vec<f64>], precision: usize) -> Result<String, CliError> {
    let mut out = columns.join(",");
    out.push('\n');
    for (i, row) in rows.iter().enumerate() {
        if let Some(v) = row.iter().find(|v| !v.is_finite()) {
            return Err(CliError::Numeric(format!("non-finite value {v} in row {i}")));
        }
        let cells: Vec<String> = row.iter().map(|&v| format_float(v, precision)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Header and numeric rows of a CSV document written by [`to_csv`].
pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>), String> {
    let mut lines = text.lines();
    let header: Vec<String> = lines.next().ok_or("empty document")?.split(',').map(str::to_string).collect();
    let rows = lines
        .enumerate()
        .map(|(i, line)| {
            let row = line
                .split(',')
                .map(|c| c.parse::<f64>().map_err(|e| format!("row {i}: {c:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != header.len() {
                return Err(format!("row {i} has {} cells, header has {}", row.len(), header.len()));
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((header, rows))
}

/// `data.csv` → `data.meta.json`.
pub fn sidecar_path(out: &Path) -> PathBuf {
    out.with_extension("meta.json")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io("write", path, e))
}
