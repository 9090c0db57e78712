//! Solution table writers. CSV rows are `x,t,w,status`, t-major, with
//! shortest-round-trip decimal floats (re-parsing reproduces the matrix
//! bit-exactly). JSON mirrors the same cells plus the run metadata.

use crate::config::OutputFormat;
use burgers_laplace::engine::SolutionTable;
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;

pub fn emit_table(
    table: &SolutionTable,
    format: OutputFormat,
    path: &Path,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => emit_csv(table, path),
        OutputFormat::Json => emit_json(table, path),
    }
}

pub fn emit_csv(table: &SolutionTable, path: &Path) -> std::io::Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "x,t,w,status")?;
    for (ti, &t) in table.grid.ts().iter().enumerate() {
        for (j, &x) in table.grid.xs().iter().enumerate() {
            writeln!(
                out,
                "{},{},{},{}",
                x,
                t,
                table.value(ti, j),
                table.status(ti, j).as_str()
            )?;
        }
    }
    out.flush()
}

pub fn emit_json(table: &SolutionTable, path: &Path) -> std::io::Result<()> {
    let mut rows = Vec::new();
    for (ti, &t) in table.grid.ts().iter().enumerate() {
        for (j, &x) in table.grid.xs().iter().enumerate() {
            let w = table.value(ti, j);
            rows.push(json!({
                "x": x,
                "t": t,
                // JSON has no NaN; guarded cells carry null
                "w": if w.is_finite() { json!(w) } else { Value::Null },
                "status": table.status(ti, j).as_str(),
            }));
        }
    }
    let doc = json!({
        "meta": meta_value(table),
        "xs": table.grid.xs(),
        "ts": table.grid.ts(),
        "rows": rows,
    });
    std::fs::write(path, serde_json::to_string_pretty(&doc)?)
}

pub fn meta_value(table: &SolutionTable) -> Value {
    let m = &table.meta;
    let echo: Value = m
        .config_echo
        .as_deref()
        .and_then(|text| serde_json::from_str(text).ok())
        .unwrap_or(Value::Null);
    json!({
        "solver": m.solver,
        "config": echo,
        "wall_s": {
            "setup": m.timings.setup.as_secs_f64(),
            "field_eval": m.timings.field_eval.as_secs_f64(),
            "inversion": m.timings.inversion.as_secs_f64(),
            "total": m.timings.total.as_secs_f64(),
        },
        "degraded_cells": m.degraded_cells,
        "guard_cells": m.guard_cells,
        "boundary_max_dev": m.boundary_max_dev,
        "warnings": m.warnings,
    })
}

/// Re-parse an emitted CSV into (x, t, w, status) rows.
pub fn parse_csv(text: &str) -> Result<Vec<(f64, f64, f64, String)>, String> {
    let mut rows = Vec::new();
    let mut lines = text.lines();
    match lines.next() {
        Some("x,t,w,status") => {}
        other => return Err(format!("bad header: {other:?}")),
    }
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(format!("row {i}: expected 4 fields"));
        }
        let x: f64 = fields[0].parse().map_err(|e| format!("row {i} x: {e}"))?;
        let t: f64 = fields[1].parse().map_err(|e| format!("row {i} t: {e}"))?;
        let w: f64 = fields[2].parse().map_err(|e| format!("row {i} w: {e}"))?;
        rows.push((x, t, w, fields[3].to_string()));
    }
    Ok(rows)
}
