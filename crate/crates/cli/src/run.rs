//! Orchestration: run the selected solvers, write one table per solver and a
//! report with per-stage wall times and error norms for every solver pair
//! sharing a grid.

use crate::config::{RunConfig, SolverKind};
use crate::emit;
use burgers_laplace::engine::{
    error_norms, solve_with_options, EngineOptions, SolutionTable, SpaceTimeGrid,
};
use burgers_laplace::reference::{
    fd_solve, ColeSeries, ColeSeriesParams, Example1Params,
};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

pub struct RunOutcome {
    pub exit_code: u8,
    pub files: Vec<PathBuf>,
}

#[derive(Debug)]
pub enum RunError {
    Solver(String),
    Io(std::io::Error),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Solver(m) => write!(f, "{m}"),
            RunError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<serde_json::Error> for RunError {
    fn from(e: serde_json::Error) -> Self {
        RunError::Io(e.into())
    }
}

fn engine_options(cfg: &RunConfig, threads: usize) -> EngineOptions {
    EngineOptions {
        u00: cfg.u00,
        threads,
        ..EngineOptions::default()
    }
}

/// Run one solver, producing its table on its natural grid.
pub fn run_solver(
    cfg: &RunConfig,
    kind: SolverKind,
    threads: usize,
) -> Result<SolutionTable, RunError> {
    let fail = |e: &dyn std::fmt::Display| RunError::Solver(format!("{}: {e}", kind.name()));
    match kind {
        SolverKind::Ilt => {
            let grid = SpaceTimeGrid::new(cfg.xs.clone(), cfg.ts.clone())
                .map_err(|e| fail(&e))?;
            solve_with_options(&cfg.problem, &grid, &cfg.ilt, &engine_options(cfg, threads))
                .map_err(|e| fail(&e))
        }
        SolverKind::Fd => fd_solve(&cfg.problem, &cfg.fd).map_err(|e| fail(&e)),
        SolverKind::Exact1 => {
            let grid = SpaceTimeGrid::new(cfg.xs.clone(), cfg.ts.clone())
                .map_err(|e| fail(&e))?;
            let params = Example1Params::new(cfg.problem.a_sq, cfg.sigma.unwrap_or(2.0))
                .map_err(|e| fail(&e))?;
            Ok(burgers_laplace::reference::example1_table(&params, &grid))
        }
        SolverKind::Cole => {
            let grid = SpaceTimeGrid::new(cfg.xs.clone(), cfg.ts.clone())
                .map_err(|e| fail(&e))?;
            let params = ColeSeriesParams::new(cfg.problem.a_sq, cfg.cole_terms)
                .map_err(|e| fail(&e))?;
            let series = ColeSeries::build(&params).map_err(|e| fail(&e))?;
            Ok(series.table(&grid))
        }
    }
}

/// The `solve` subcommand: one table file per solver plus `report.json`.
pub fn run(cfg: &RunConfig, out_dir: &Path, threads: usize) -> Result<RunOutcome, RunError> {
    std::fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    let mut tables: Vec<(SolverKind, SolutionTable)> = Vec::new();
    for &kind in &cfg.solvers {
        let mut table = run_solver(cfg, kind, threads)?;
        table.meta.config_echo = Some(cfg.echo.clone());
        tables.push((kind, table));
    }

    let mut solver_entries = serde_json::Map::new();
    let mut flagged_cells = 0usize;
    for (kind, table) in &tables {
        let file = out_dir.join(format!("{}.{}", kind.name(), cfg.format.extension()));
        emit::emit_table(table, cfg.format, &file)?;
        flagged_cells += table.meta.degraded_cells + table.meta.guard_cells;
        let mut entry = emit::meta_value(table);
        // the per-table echo already sits in the table files; the report
        // carries it once at top level
        entry.as_object_mut().unwrap().remove("config");
        entry.as_object_mut().unwrap().insert(
            "file".into(),
            json!(file.file_name().unwrap().to_string_lossy()),
        );
        solver_entries.insert(kind.name().to_string(), entry);
        files.push(file);
    }

    // norms for every unordered pair sharing a grid
    let mut norms = Vec::new();
    for i in 0..tables.len() {
        for j in i + 1..tables.len() {
            let (ka, ta) = &tables[i];
            let (kb, tb) = &tables[j];
            if ta.grid != tb.grid {
                continue;
            }
            let n = error_norms(ta, tb).map_err(|e| RunError::Solver(e.to_string()))?;
            let per_time: Vec<Value> = n
                .per_time
                .iter()
                .map(|s| json!({"t": s.t, "l2": s.l2, "linf": s.linf, "excluded": s.excluded}))
                .collect();
            norms.push(json!({
                "pair": [ka.name(), kb.name()],
                "l2": n.l2,
                "linf": n.linf,
                "excluded_cells": n.excluded_cells,
                "per_time": per_time,
            }));
        }
    }

    let report = json!({
        "config": cfg.echo_value,
        "solvers": Value::Object(solver_entries),
        "norms": norms,
    });
    let report_path = out_dir.join("report.json");
    std::fs::write(&report_path, serde_json::to_string_pretty(&report)?)?;
    files.push(report_path);

    Ok(RunOutcome {
        exit_code: if flagged_cells > 0 { 2 } else { 0 },
        files,
    })
}

/// The `bench` subcommand: each selected solver runs `iterations` times; the
/// report carries the minimum wall time per stage so first-run effects are
/// visible next to steady-state cost.
pub fn bench(
    cfg: &RunConfig,
    out_dir: &Path,
    threads: usize,
    iterations: usize,
) -> Result<RunOutcome, RunError> {
    std::fs::create_dir_all(out_dir)?;
    let mut solver_entries = serde_json::Map::new();
    for &kind in &cfg.solvers {
        let mut best: Option<[f64; 4]> = None;
        let mut first_total = 0.0f64;
        for it in 0..iterations {
            let table = run_solver(cfg, kind, threads)?;
            let t = &table.meta.timings;
            let stages = [
                t.setup.as_secs_f64(),
                t.field_eval.as_secs_f64(),
                t.inversion.as_secs_f64(),
                t.total.as_secs_f64(),
            ];
            if it == 0 {
                first_total = stages[3];
            }
            best = Some(match best {
                None => stages,
                Some(b) => [
                    b[0].min(stages[0]),
                    b[1].min(stages[1]),
                    b[2].min(stages[2]),
                    b[3].min(stages[3]),
                ],
            });
        }
        let b = best.expect("at least one iteration");
        println!(
            "{:8} min total {:.6}s (setup {:.6}s, field {:.6}s, inversion {:.6}s; first run {:.6}s)",
            kind.name(),
            b[3],
            b[0],
            b[1],
            b[2],
            first_total
        );
        solver_entries.insert(
            kind.name().to_string(),
            json!({
                "min_wall_s": {
                    "setup": b[0],
                    "field_eval": b[1],
                    "inversion": b[2],
                    "total": b[3],
                },
                "first_run_total_s": first_total,
            }),
        );
    }
    let report = json!({
        "config": cfg.echo_value,
        "iterations": iterations,
        "solvers": Value::Object(solver_entries),
    });
    let path = out_dir.join("bench_report.json");
    std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
    Ok(RunOutcome {
        exit_code: 0,
        files: vec![path],
    })
}
