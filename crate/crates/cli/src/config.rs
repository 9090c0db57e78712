//! Run configuration: a JSON file parsed field by field so that every
//! validation failure carries the JSON pointer of the offending value.

use burgers_laplace::ilt::IltConfig;
use burgers_laplace::problem::{BurgersProblem, InitialProfile};
use burgers_laplace::reference::{Example1Params, FdScheme};
use serde_json::Value;
use std::fmt;

#[derive(Debug)]
pub struct ConfigError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config error at {}: {}", self.pointer, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(pointer: &str, message: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError {
        pointer: pointer.to_string(),
        message: message.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Ilt,
    Fd,
    Exact1,
    Cole,
}

impl SolverKind {
    pub fn name(&self) -> &'static str {
        match self {
            SolverKind::Ilt => "ilt",
            SolverKind::Fd => "fd",
            SolverKind::Exact1 => "exact1",
            SolverKind::Cole => "cole",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Example1,
    Example2,
    Table,
}

/// Parsed and validated run configuration.
pub struct RunConfig {
    pub problem: BurgersProblem,
    pub profile: ProfileKind,
    pub sigma: Option<f64>,
    pub xs: Vec<f64>,
    pub ts: Vec<f64>,
    pub solvers: Vec<SolverKind>,
    pub ilt: IltConfig,
    pub u00: f64,
    pub cole_terms: usize,
    pub fd: FdScheme,
    pub output_dir: String,
    pub format: OutputFormat,
    /// Raw config text, echoed into output metadata.
    pub echo: String,
    pub echo_value: Value,
}

pub fn parse(text: &str) -> Result<RunConfig, ConfigError> {
    let root: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return err("", format!("not valid JSON: {e}")),
    };
    let obj = as_object(&root, "")?;

    // problem block
    let problem_v = require(obj, "problem", "")?;
    let pobj = as_object(problem_v, "/problem")?;
    let interval = require(pobj, "interval", "/problem")?;
    let ends = as_array(interval, "/problem/interval")?;
    if ends.len() != 2 {
        return err("/problem/interval", "expected [l1, l2]");
    }
    let l1 = as_number(&ends[0], "/problem/interval/0")?;
    let l2 = as_number(&ends[1], "/problem/interval/1")?;
    if !(l1 < l2) {
        return err("/problem/interval", "l1 must be less than l2");
    }
    let a_sq = as_number(require(pobj, "a_sq", "/problem")?, "/problem/a_sq")?;
    if !(a_sq > 0.0) {
        return err("/problem/a_sq", "viscosity must be positive");
    }
    let alpha1 = optional_number(pobj, "alpha1", "/problem")?.unwrap_or(0.0);
    let alpha2 = optional_number(pobj, "alpha2", "/problem")?.unwrap_or(0.0);
    let t_max = as_number(require(pobj, "t_max", "/problem")?, "/problem/t_max")?;
    if !(t_max > 0.0) {
        return err("/problem/t_max", "time horizon must be positive");
    }

    let w0_name = as_string(require(pobj, "w0", "/problem")?, "/problem/w0")?;
    let sigma = optional_number(pobj, "sigma", "/problem")?;
    let (profile, w0) = match w0_name.as_str() {
        "example1" => {
            let sigma = match sigma {
                Some(s) => s,
                None => return err("/problem/sigma", "required for the example1 preset"),
            };
            let params = match Example1Params::new(a_sq, sigma) {
                Ok(p) => p,
                Err(e) => return err("/problem/sigma", e.to_string()),
            };
            (
                ProfileKind::Example1,
                burgers_laplace::reference::example1_initial(&params),
            )
        }
        "example2" => (
            ProfileKind::Example2,
            burgers_laplace::reference::example2_initial(),
        ),
        "table" => {
            let table = require(pobj, "w0_table", "/problem")?;
            let rows = as_array(table, "/problem/w0_table")?;
            let mut xs = Vec::with_capacity(rows.len());
            let mut vs = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let pair = as_array(row, &format!("/problem/w0_table/{i}"))?;
                if pair.len() != 2 {
                    return err(&format!("/problem/w0_table/{i}"), "expected [x, w] pair");
                }
                xs.push(as_number(&pair[0], &format!("/problem/w0_table/{i}/0"))?);
                vs.push(as_number(&pair[1], &format!("/problem/w0_table/{i}/1"))?);
            }
            match InitialProfile::sampled(xs, vs) {
                Ok(p) => (ProfileKind::Table, p),
                Err(e) => return err("/problem/w0_table", e.to_string()),
            }
        }
        other => {
            return err(
                "/problem/w0",
                format!("unknown profile '{other}' (expected example1, example2 or table)"),
            )
        }
    };

    let problem = BurgersProblem {
        a_sq,
        l1,
        l2,
        alpha1,
        alpha2,
        w0,
        t_max,
    };
    if let Err(e) = problem.validate() {
        return err("/problem", e.to_string());
    }

    // grid block: dx or xs, dt or ts
    let grid_v = require(obj, "grid", "")?;
    let gobj = as_object(grid_v, "/grid")?;
    let xs = match (gobj.get("dx"), gobj.get("xs")) {
        (Some(_), Some(_)) => return err("/grid", "give either dx or xs, not both"),
        (Some(dx_v), None) => {
            let dx = as_number(dx_v, "/grid/dx")?;
            if !(dx > 0.0) {
                return err("/grid/dx", "step must be positive");
            }
            let n = ((l2 - l1) / dx).round().max(1.0) as usize;
            (0..=n).map(|i| l1 + (l2 - l1) * i as f64 / n as f64).collect()
        }
        (None, Some(xs_v)) => number_vec(xs_v, "/grid/xs")?,
        (None, None) => return err("/grid", "need dx or xs"),
    };
    let ts = match (gobj.get("dt"), gobj.get("ts")) {
        (Some(_), Some(_)) => return err("/grid", "give either dt or ts, not both"),
        (Some(dt_v), None) => {
            let dt = as_number(dt_v, "/grid/dt")?;
            if !(dt > 0.0) {
                return err("/grid/dt", "step must be positive");
            }
            let n = (t_max / dt).round().max(1.0) as usize;
            (1..=n).map(|k| t_max * k as f64 / n as f64).collect()
        }
        (None, Some(ts_v)) => {
            let ts = number_vec(ts_v, "/grid/ts")?;
            if ts.iter().any(|&t| t <= 0.0) {
                return err(
                    "/grid/ts",
                    "times must be positive (the t = 0 profile is w0 itself)",
                );
            }
            ts
        }
        (None, None) => return err("/grid", "need dt or ts"),
    };

    // solvers
    let solvers_v = require(obj, "solvers", "")?;
    let list = as_array(solvers_v, "/solvers")?;
    if list.is_empty() {
        return err("/solvers", "no solver selected");
    }
    let mut solvers = Vec::with_capacity(list.len());
    for (i, item) in list.iter().enumerate() {
        let name = as_string(item, &format!("/solvers/{i}"))?;
        let kind = match name.as_str() {
            "ilt" => SolverKind::Ilt,
            "fd" => SolverKind::Fd,
            "exact1" => SolverKind::Exact1,
            "cole" => SolverKind::Cole,
            other => {
                return err(
                    &format!("/solvers/{i}"),
                    format!("unknown solver '{other}' (expected ilt, fd, exact1 or cole)"),
                )
            }
        };
        if kind == SolverKind::Exact1 && profile != ProfileKind::Example1 {
            return err(
                &format!("/solvers/{i}"),
                "exact1 applies only to the example1 preset",
            );
        }
        if kind == SolverKind::Cole && profile != ProfileKind::Example2 {
            return err(
                &format!("/solvers/{i}"),
                "cole applies only to the example2 preset",
            );
        }
        if !solvers.contains(&kind) {
            solvers.push(kind);
        }
    }

    // ilt block (optional, defaults apply)
    let mut ilt = IltConfig::default();
    let mut u00 = 1.0;
    if let Some(ilt_v) = obj.get("ilt") {
        let iobj = as_object(ilt_v, "/ilt")?;
        if let Some(v) = optional_number(iobj, "tol", "/ilt")? {
            ilt.tol = v;
        }
        if let Some(v) = optional_number(iobj, "terms", "/ilt")? {
            if v < 1.0 || v.fract() != 0.0 {
                return err("/ilt/terms", "must be a positive integer");
            }
            ilt.terms = v as usize;
        }
        if let Some(v) = optional_number(iobj, "scale_factor", "/ilt")? {
            ilt.scale_factor = v;
        }
        if let Some(v) = optional_number(iobj, "gamma_shift", "/ilt")? {
            ilt.gamma_shift = v;
        }
        if let Some(v) = optional_number(iobj, "u00", "/ilt")? {
            if v == 0.0 {
                return err("/ilt/u00", "reference value must be nonzero");
            }
            u00 = v;
        }
    }
    if ilt.validate().is_err() {
        return err("/ilt", "need tol > 0, terms >= 5, scale_factor > 1");
    }

    // cole block
    let mut cole_terms = 20usize;
    if let Some(cole_v) = obj.get("cole") {
        let cobj = as_object(cole_v, "/cole")?;
        if let Some(v) = optional_number(cobj, "n_terms", "/cole")? {
            if v < 1.0 || v.fract() != 0.0 {
                return err("/cole/n_terms", "must be a positive integer");
            }
            cole_terms = v as usize;
        }
    }

    // fd block (defaults to the reference mesh)
    let mut fd = FdScheme {
        dx: 0.01,
        dt: 0.001,
    };
    if let Some(fd_v) = obj.get("fd") {
        let fobj = as_object(fd_v, "/fd")?;
        if let Some(v) = optional_number(fobj, "dx", "/fd")? {
            fd.dx = v;
        }
        if let Some(v) = optional_number(fobj, "dt", "/fd")? {
            fd.dt = v;
        }
        if fd.validate().is_err() {
            return err("/fd", "steps must be positive");
        }
    }

    // output block
    let mut output_dir = ".".to_string();
    let mut format = OutputFormat::Csv;
    if let Some(out_v) = obj.get("output") {
        let oobj = as_object(out_v, "/output")?;
        if let Some(p) = oobj.get("path") {
            output_dir = as_string(p, "/output/path")?;
        }
        if let Some(f) = oobj.get("format") {
            format = match as_string(f, "/output/format")?.as_str() {
                "csv" => OutputFormat::Csv,
                "json" => OutputFormat::Json,
                other => {
                    return err("/output/format", format!("unknown format '{other}'"))
                }
            };
        }
    }

    Ok(RunConfig {
        problem,
        profile,
        sigma,
        xs,
        ts,
        solvers,
        ilt,
        u00,
        cole_terms,
        fd,
        output_dir,
        format,
        echo: text.to_string(),
        echo_value: root,
    })
}

fn as_object<'v>(
    v: &'v Value,
    pointer: &str,
) -> Result<&'v serde_json::Map<String, Value>, ConfigError> {
    v.as_object()
        .ok_or_else(|| ConfigError {
            pointer: pointer.to_string(),
            message: "expected an object".into(),
        })
}

fn as_array<'v>(v: &'v Value, pointer: &str) -> Result<&'v Vec<Value>, ConfigError> {
    v.as_array().ok_or_else(|| ConfigError {
        pointer: pointer.to_string(),
        message: "expected an array".into(),
    })
}

fn as_number(v: &Value, pointer: &str) -> Result<f64, ConfigError> {
    v.as_f64().ok_or_else(|| ConfigError {
        pointer: pointer.to_string(),
        message: "expected a number".into(),
    })
}

fn as_string(v: &Value, pointer: &str) -> Result<String, ConfigError> {
    v.as_str().map(str::to_string).ok_or_else(|| ConfigError {
        pointer: pointer.to_string(),
        message: "expected a string".into(),
    })
}

fn require<'v>(
    obj: &'v serde_json::Map<String, Value>,
    key: &str,
    parent: &str,
) -> Result<&'v Value, ConfigError> {
    obj.get(key).ok_or_else(|| ConfigError {
        pointer: format!("{parent}/{key}"),
        message: "missing required field".into(),
    })
}

fn optional_number(
    obj: &serde_json::Map<String, Value>,
    key: &str,
    parent: &str,
) -> Result<Option<f64>, ConfigError> {
    match obj.get(key) {
        Some(v) => Ok(Some(as_number(v, &format!("{parent}/{key}"))?)),
        None => Ok(None),
    }
}

fn number_vec(v: &Value, pointer: &str) -> Result<Vec<f64>, ConfigError> {
    let arr = as_array(v, pointer)?;
    let mut out = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        out.push(as_number(item, &format!("{pointer}/{i}"))?);
    }
    if out.is_empty() {
        return err(pointer, "must be non-empty");
    }
    Ok(out)
}
