//! Browser demo bindings: solution curves for the two preset problems
//! (numerical inversion next to the reference solution) and the inversion
//! engine on textbook transform pairs. Every entry point returns a JSON
//! string so the page needs nothing beyond `JSON.parse`.

// `!(x > 0.0)` style comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use burgers_laplace::engine::{solve, SpaceTimeGrid};
use burgers_laplace::ilt::{invert, IltConfig};
use burgers_laplace::num_complex::Complex64;
use burgers_laplace::reference::{
    example1_exact, example1_problem, example2_problem, ColeSeries, ColeSeriesParams,
    Example1Params,
};
use serde_json::json;
use std::f64::consts::PI;
use wasm_bindgen::prelude::*;

type Transform = Box<dyn Fn(Complex64) -> Complex64>;
type Original = Box<dyn Fn(f64) -> f64>;

fn error_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn parse_times(times_csv: &str) -> Result<Vec<f64>, String> {
    let mut times: Vec<f64> = Vec::new();
    for piece in times_csv.split(',') {
        let trimmed = piece.trim();
        if trimmed.is_empty() {
            continue;
        }
        let t: f64 = trimmed
            .parse()
            .map_err(|_| format!("'{trimmed}' is not a number"))?;
        if !(t > 0.0) {
            return Err(format!("times must be positive (got {t})"));
        }
        times.push(t);
    }
    if times.is_empty() {
        return Err("no times given".into());
    }
    times.sort_by(f64::total_cmp);
    times.dedup();
    Ok(times)
}

fn grid_for(times: &[f64], nx: u32) -> Result<SpaceTimeGrid, String> {
    let nx = nx.clamp(8, 512) as usize;
    let xs = (0..=nx).map(|i| i as f64 / nx as f64).collect();
    SpaceTimeGrid::new(xs, times.to_vec()).map_err(|e| e.to_string())
}

/// Solve the cosine-ratio preset and return, per requested time, the
/// inverted-transform curve next to the closed-form solution.
#[wasm_bindgen]
pub fn cosine_profile_curves(a_sq: f64, sigma: f64, times_csv: &str, nx: u32) -> String {
    let params = match Example1Params::new(a_sq, sigma) {
        Ok(p) => p,
        Err(e) => return error_json(e),
    };
    let times = match parse_times(times_csv) {
        Ok(t) => t,
        Err(e) => return error_json(e),
    };
    let t_max = *times.last().unwrap();
    let grid = match grid_for(&times, nx) {
        Ok(g) => g,
        Err(e) => return error_json(e),
    };
    let problem = example1_problem(&params, t_max);
    let table = match solve(&problem, &grid, &IltConfig::default()) {
        Ok(t) => t,
        Err(e) => return error_json(e),
    };

    let mut curves = Vec::new();
    let mut max_abs_err = 0.0f64;
    for (ti, &t) in grid.ts().iter().enumerate() {
        let mut inverted = Vec::with_capacity(grid.xs().len());
        let mut exact = Vec::with_capacity(grid.xs().len());
        for (j, &x) in grid.xs().iter().enumerate() {
            let w = table.value(ti, j);
            let e = example1_exact(x, t, &params);
            max_abs_err = max_abs_err.max((w - e).abs());
            inverted.push(w);
            exact.push(e);
        }
        curves.push(json!({ "t": t, "inverse_laplace": inverted, "exact": exact }));
    }
    json!({
        "xs": grid.xs(),
        "curves": curves,
        "max_abs_err": max_abs_err,
        "degraded_cells": table.meta.degraded_cells,
    })
    .to_string()
}

/// Solve the sine preset and return the inverted-transform curves next to
/// the truncated series solution.
#[wasm_bindgen]
pub fn sine_profile_curves(a_sq: f64, times_csv: &str, nx: u32, n_terms: u32) -> String {
    if !(a_sq > 0.0) {
        return error_json("a_sq must be positive");
    }
    let times = match parse_times(times_csv) {
        Ok(t) => t,
        Err(e) => return error_json(e),
    };
    let grid = match grid_for(&times, nx) {
        Ok(g) => g,
        Err(e) => return error_json(e),
    };
    let series_params = match ColeSeriesParams::new(a_sq, n_terms.clamp(1, 200) as usize) {
        Ok(p) => p,
        Err(e) => return error_json(e),
    };
    let series = match ColeSeries::build(&series_params) {
        Ok(s) => s,
        Err(e) => return error_json(e),
    };
    let problem = example2_problem(a_sq, *times.last().unwrap());
    let table = match solve(&problem, &grid, &IltConfig::default()) {
        Ok(t) => t,
        Err(e) => return error_json(e),
    };

    let mut curves = Vec::new();
    let mut max_abs_gap = 0.0f64;
    for (ti, &t) in grid.ts().iter().enumerate() {
        let mut inverted = Vec::with_capacity(grid.xs().len());
        let mut truncated = Vec::with_capacity(grid.xs().len());
        for (j, &x) in grid.xs().iter().enumerate() {
            let w = table.value(ti, j);
            let s = series.eval(x, t);
            max_abs_gap = max_abs_gap.max((w - s).abs());
            inverted.push(w);
            truncated.push(s);
        }
        curves.push(json!({ "t": t, "inverse_laplace": inverted, "series": truncated }));
    }
    json!({
        "xs": grid.xs(),
        "curves": curves,
        "max_abs_gap": max_abs_gap,
        "series_terms": series.n_terms(),
    })
    .to_string()
}

/// Invert one of the textbook transform pairs on a time range and return the
/// numerical inverse next to the analytic original.
#[wasm_bindgen]
pub fn transform_pair_curve(pair: &str, t_min: f64, t_max: f64, points: u32) -> String {
    let (f, exact): (Transform, Original) = match pair {
        "1/p" => (Box::new(|p: Complex64| 1.0 / p), Box::new(|_| 1.0)),
        "1/p^2" => (Box::new(|p: Complex64| 1.0 / (p * p)), Box::new(|t| t)),
        "1/(p+1)" => (
            Box::new(|p: Complex64| 1.0 / (p + 1.0)),
            Box::new(|t: f64| (-t).exp()),
        ),
        "1/sqrt(p)" => (
            Box::new(|p: Complex64| 1.0 / p.sqrt()),
            Box::new(|t: f64| 1.0 / (PI * t).sqrt()),
        ),
        "1/(p^2+1)" => (
            Box::new(|p: Complex64| 1.0 / (p * p + 1.0)),
            Box::new(|t: f64| t.sin()),
        ),
        "p/(p^2+1)" => (
            Box::new(|p: Complex64| p / (p * p + 1.0)),
            Box::new(|t: f64| t.cos()),
        ),
        other => return error_json(format!("unknown pair '{other}'")),
    };
    if !(t_min > 0.0) || !(t_max > t_min) {
        return error_json("need 0 < t_min < t_max");
    }
    let n = points.clamp(8, 2048) as usize;
    let times: Vec<f64> = (0..n)
        .map(|i| t_min + (t_max - t_min) * i as f64 / (n - 1) as f64)
        .collect();

    // one contour per octave, as the solver batches internally
    let cfg = IltConfig::default();
    let mut values = vec![0.0f64; n];
    let mut start = 0usize;
    while start < n {
        let bound = 4.0 * times[start];
        let mut end = start + 1;
        while end < n && times[end] < bound {
            end += 1;
        }
        let batch = &times[start..end];
        match invert(&f, batch, &cfg) {
            Ok(r) => values[start..end].copy_from_slice(&r.values),
            Err(e) => return error_json(e),
        }
        start = end;
    }

    let analytic: Vec<f64> = times.iter().map(|&t| exact(t)).collect();
    let max_abs_err = values
        .iter()
        .zip(analytic.iter())
        .map(|(v, a)| (v - a).abs())
        .fold(0.0f64, f64::max);
    json!({
        "ts": times,
        "inverse_laplace": values,
        "analytic": analytic,
        "max_abs_err": max_abs_err,
    })
    .to_string()
}
