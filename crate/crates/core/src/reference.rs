//! Reference solutions for validation: the closed-form solution of the
//! cosine-ratio test problem, the classical Cole series for the sine initial
//! profile with its semi-analytic p-domain form, and a finite-difference
//! baseline (Crank-Nicolson diffusion, explicit conservative convection).

use crate::engine::{CellStatus, EngineError, SolutionTable, SolveMeta, SpaceTimeGrid, StageTimings};
use crate::operational::{build_field, LaplaceField, OperationalError, ReactionDiffusionProblem};
use crate::problem::{BurgersProblem, InitialProfile, ValidationWarning};
use crate::quadrature::{integrate, QuadratureError, QuadratureSpec};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReferenceError {
    #[error("invalid reference parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Operational(#[from] OperationalError),
    #[error(transparent)]
    Problem(#[from] crate::problem::ProblemError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("finite-difference march unstable at step {step} (t = {time}): max |w| = {max_abs:.3e}")]
    Unstable { step: usize, time: f64, max_abs: f64 },
}

/// Parameters of the first test problem. |sigma| > 1 keeps the closed-form
/// denominator away from zero for all (x, t).
#[derive(Debug, Clone, Copy)]
pub struct Example1Params {
    pub a_sq: f64,
    pub sigma: f64,
}

impl Example1Params {
    pub fn new(a_sq: f64, sigma: f64) -> Result<Self, ReferenceError> {
        if !(a_sq > 0.0) {
            return Err(ReferenceError::InvalidParams(format!(
                "a_sq must be positive (got {a_sq})"
            )));
        }
        if !(sigma.abs() > 1.0) {
            return Err(ReferenceError::InvalidParams(format!(
                "|sigma| must exceed 1 (got {sigma})"
            )));
        }
        Ok(Self { a_sq, sigma })
    }
}

/// Initial profile of the first test problem:
/// w0(x) = 2a²π·sin(πx)/(σ + cos(πx)) on [0, 1].
pub fn example1_initial(params: &Example1Params) -> InitialProfile {
    let (a_sq, sigma) = (params.a_sq, params.sigma);
    InitialProfile::analytic(move |x: f64| {
        2.0 * a_sq * PI * (PI * x).sin() / (sigma + (PI * x).cos())
    })
}

/// Closed-form solution of the first test problem:
/// w(x,t) = 2a²π·e^{-π²a²t}·sin(πx)/(σ + e^{-π²a²t}·cos(πx)).
pub fn example1_exact(x: f64, t: f64, params: &Example1Params) -> f64 {
    let decay = (-PI * PI * params.a_sq * t).exp();
    2.0 * params.a_sq * PI * decay * (PI * x).sin() / (params.sigma + decay * (PI * x).cos())
}

/// The problem instance matching [`example1_exact`].
pub fn example1_problem(params: &Example1Params, t_max: f64) -> BurgersProblem {
    BurgersProblem {
        a_sq: params.a_sq,
        l1: 0.0,
        l2: 1.0,
        alpha1: 0.0,
        alpha2: 0.0,
        w0: example1_initial(params),
        t_max,
    }
}

/// Laplace-domain closed forms of the first test problem, from the transform
/// of u(x,t) = u00(σ + e^{-π²a²t}cos πx)/(σ+1):
/// U(x,p) = u00(π²a²σ + p·cos(πx) + pσ)/((σ+1)·p·(π²a² + p)),
/// U_x(x,p) = -u00·π·sin(πx)/((σ+1)·(π²a² + p)).
pub fn example1_pdomain(
    x: f64,
    p: Complex64,
    params: &Example1Params,
    u00: f64,
) -> (Complex64, Complex64) {
    let pi2a2 = PI * PI * params.a_sq;
    let sigma = params.sigma;
    let u = ((PI * x).cos() * p + pi2a2 * sigma + p * sigma) * u00
        / ((sigma + 1.0) * p * (p + pi2a2));
    let ux = -(PI * x).sin() * PI * u00 / ((sigma + 1.0) * (p + pi2a2));
    (u, ux)
}

/// The boundary coefficient vector of the first test problem
/// (U, U_x at both endpoints; the derivative entries vanish).
pub fn example1_boundary_vector(
    p: Complex64,
    params: &Example1Params,
    u00: f64,
) -> (Complex64, Complex64, Complex64, Complex64) {
    let pi2a2 = PI * PI * params.a_sq;
    let sigma = params.sigma;
    let denom = (sigma + 1.0) * p * (p + pi2a2);
    let u_l1 = (pi2a2 * sigma + p * sigma + p) * u00 / denom;
    let u_l2 = (pi2a2 * sigma + p * sigma - p) * u00 / denom;
    let zero = Complex64::new(0.0, 0.0);
    (u_l1, zero, u_l2, zero)
}

/// Evaluate the closed form on a grid as a solution table.
pub fn example1_table(params: &Example1Params, grid: &SpaceTimeGrid) -> SolutionTable {
    let t0 = Instant::now();
    let (nt, nx) = grid.shape();
    let mut values = Vec::with_capacity(nt * nx);
    for &t in grid.ts() {
        for &x in grid.xs() {
            values.push(example1_exact(x, t, params));
        }
    }
    let meta = SolveMeta {
        solver: "exact1".to_string(),
        timings: StageTimings {
            total: t0.elapsed(),
            ..StageTimings::default()
        },
        ..SolveMeta::default()
    };
    SolutionTable::new(grid.clone(), values, vec![CellStatus::Ok; nt * nx], meta)
        .expect("shape matches by construction")
}

/// Initial profile of the second test problem: w0(x) = sin(πx) on [0, 1].
pub fn example2_initial() -> InitialProfile {
    InitialProfile::analytic(|x: f64| (PI * x).sin())
}

/// The problem instance for the sine initial profile.
pub fn example2_problem(a_sq: f64, t_max: f64) -> BurgersProblem {
    BurgersProblem {
        a_sq,
        l1: 0.0,
        l2: 1.0,
        alpha1: 0.0,
        alpha2: 0.0,
        w0: example2_initial(),
        t_max,
    }
}

#[derive(Debug, Clone)]
pub struct ColeSeriesParams {
    pub a_sq: f64,
    pub n_terms: usize,
    pub quad: QuadratureSpec,
}

impl ColeSeriesParams {
    pub fn new(a_sq: f64, n_terms: usize) -> Result<Self, ReferenceError> {
        if !(a_sq > 0.0) || n_terms < 1 {
            return Err(ReferenceError::InvalidParams(
                "need a_sq > 0 and at least one series term".into(),
            ));
        }
        // the coefficients enter a ratio of small quantities at large t,
        // so they are computed tighter than the default spec
        Ok(Self {
            a_sq,
            n_terms,
            quad: QuadratureSpec {
                abs_tol: 1e-13,
                rel_tol: 1e-13,
                max_depth: 30,
            },
        })
    }
}

/// Classical series solution for the sine initial profile: a ratio of
/// exponentially damped Fourier sums whose coefficients are moments of
/// exp((cos πx - 1)/(2a²π)). Coefficients are computed once per instance.
#[derive(Debug, Clone)]
pub struct ColeSeries {
    pub a_sq: f64,
    c0: f64,
    coeffs: Vec<f64>,
}

impl ColeSeries {
    pub fn build(params: &ColeSeriesParams) -> Result<Self, ReferenceError> {
        let a_sq = params.a_sq;
        let weight = move |x: f64| (((PI * x).cos() - 1.0) / (2.0 * a_sq * PI)).exp();
        let c0 = integrate(
            |x| Complex64::new(weight(x), 0.0),
            0.0,
            1.0,
            &params.quad,
        )?
        .value
        .re;
        let mut coeffs = Vec::with_capacity(params.n_terms);
        for n in 1..=params.n_terms {
            let cn = integrate(
                |x| Complex64::new(2.0 * weight(x) * (n as f64 * PI * x).cos(), 0.0),
                0.0,
                1.0,
                &params.quad,
            )?
            .value
            .re;
            coeffs.push(cn);
        }
        if !(c0 > 0.0) {
            return Err(ReferenceError::InvalidParams(format!(
                "leading coefficient must be positive (got {c0})"
            )));
        }
        Ok(Self { a_sq, c0, coeffs })
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn coefficient(&self, n: usize) -> Option<f64> {
        if n == 0 {
            Some(self.c0)
        } else {
            self.coeffs.get(n - 1).copied()
        }
    }

    pub fn n_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        let mut num = 0.0;
        let mut den = self.c0;
        for (i, &cn) in self.coeffs.iter().enumerate() {
            let n = (i + 1) as f64;
            let damp = (-n * n * PI * PI * self.a_sq * t).exp();
            num += cn * damp * n * (n * PI * x).sin();
            den += cn * damp * (n * PI * x).cos();
        }
        2.0 * PI * self.a_sq * num / den
    }

    pub fn table(&self, grid: &SpaceTimeGrid) -> SolutionTable {
        let t0 = Instant::now();
        let (nt, nx) = grid.shape();
        let mut values = Vec::with_capacity(nt * nx);
        for &t in grid.ts() {
            for &x in grid.xs() {
                values.push(self.eval(x, t));
            }
        }
        let meta = SolveMeta {
            solver: "cole".to_string(),
            timings: StageTimings {
                total: t0.elapsed(),
                ..StageTimings::default()
            },
            ..SolveMeta::default()
        };
        SolutionTable::new(grid.clone(), values, vec![CellStatus::Ok; nt * nx], meta)
            .expect("shape matches by construction")
    }
}

/// Semi-analytic p-domain solution for the sine initial profile: the
/// kernel-factor decomposition with θ(ξ) = (cos πξ - 1)/(2a²π) and exponent
/// -ξ·sqrt(p)/a, every integrand written as exp(exponent + θ) with the
/// decaying kernel factors folded in so all exponents have non-positive
/// real part. Serves as an independent cross-check of the generic path.
pub fn example2_pdomain(
    x: f64,
    p: Complex64,
    a_sq: f64,
    u00: f64,
    quad: &QuadratureSpec,
) -> Result<(Complex64, Complex64), ReferenceError> {
    let a = a_sq.sqrt();
    let s = p.sqrt();
    let q = s / a;
    let theta = move |xi: f64| ((PI * xi).cos() - 1.0) / (2.0 * a_sq * PI);

    // ∫_lo^hi exp(-(shift + dir·ξ)·q + θ(ξ)) dξ
    let folded = |lo: f64, hi: f64, shift: f64, dir: f64| -> Result<Complex64, ReferenceError> {
        let r = integrate(
            move |xi: f64| (-(shift + dir * xi) * q + theta(xi)).exp(),
            lo,
            hi,
            quad,
        )?;
        Ok(r.value)
    };

    // kernel-factor terms over the whole interval
    let t1 = folded(0.0, 1.0, 2.0 - x, 1.0)?; // E(2-x)·I₊
    let t2 = folded(0.0, 1.0, x, 1.0)?; // E(x)·I₊
    let t3 = folded(0.0, 1.0, 2.0 + x, -1.0)?; // E(2+x)·I₋
    let t4 = folded(0.0, 1.0, 2.0 - x, -1.0)?; // E(2-x)·I₋

    // data-term pieces split at the kink
    let r_left = folded(0.0, x, x, -1.0)?; // ∫_0^x exp((ξ-x)q + θ)
    let r_right = folded(x, 1.0, -x, 1.0)?; // ∫_x^1 exp((x-ξ)q + θ)

    let e2 = (-2.0 * q).exp();
    let k = u00 / (2.0 * a * s * (Complex64::new(1.0, 0.0) - e2));
    let r = (r_left + r_right) * u00 / (2.0 * a * s);
    let rx = -(r_left - r_right) * u00 / (2.0 * a_sq);

    let u = k * (t1 + t2 + t3 + t4) + r;
    let ux = (s * k / a) * ((t1 - t2) + (t4 - t3)) + rx;
    Ok((u, ux))
}

/// Finite-difference scheme parameters: Crank-Nicolson diffusion with the
/// convection term explicit in conservative form (w²/2)_x.
#[derive(Debug, Clone, Copy)]
pub struct FdScheme {
    pub dx: f64,
    pub dt: f64,
}

impl FdScheme {
    pub fn validate(&self) -> Result<(), ReferenceError> {
        if !(self.dx > 0.0) || !(self.dt > 0.0) {
            return Err(ReferenceError::InvalidParams(
                "finite-difference steps must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// March the Burgers problem with the fixed semi-implicit scheme. The output
/// grid is derived from the scheme steps over \[l1,l2\] x (0, t_max].
pub fn fd_solve(problem: &BurgersProblem, scheme: &FdScheme) -> Result<SolutionTable, ReferenceError> {
    let t0 = Instant::now();
    scheme.validate()?;
    let mut warnings: Vec<String> = problem
        .validate()?
        .iter()
        .map(ValidationWarning::to_string)
        .collect();

    let len = problem.l2 - problem.l1;
    let nx = (len / scheme.dx).round().max(2.0) as usize;
    let dx = len / nx as f64;
    let nt = (problem.t_max / scheme.dt).round().max(1.0) as usize;
    let dt = problem.t_max / nt as f64;

    let xs: Vec<f64> = (0..=nx).map(|i| problem.l1 + len * i as f64 / nx as f64).collect();
    let ts: Vec<f64> = (1..=nt).map(|k| problem.t_max * k as f64 / nt as f64).collect();
    let grid = SpaceTimeGrid::new(xs.clone(), ts)?;

    let mut w: Vec<f64> = xs.iter().map(|&x| problem.w0.eval(x)).collect();
    let w0_max = w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let range0 = w0_max.max(problem.alpha1.abs()).max(problem.alpha2.abs());
    let blowup = if range0 > 0.0 { 10.0 * range0 } else { 1e-6 };

    // advisory convective step bound for the explicit part
    let cfl_bound = dx * dx / (2.0 * w0_max * dx + f64::EPSILON);
    if dt > cfl_bound {
        warnings.push(
            ValidationWarning::CflAdvisory {
                dt,
                bound: cfl_bound,
            }
            .to_string(),
        );
    }

    // constant tridiagonal factorization for the Crank-Nicolson half
    let r = problem.a_sq * dt / (dx * dx);
    let n_inner = nx - 1;
    let diag = 1.0 + r;
    let off = -0.5 * r;
    let mut cp = vec![0.0f64; n_inner]; // Thomas forward coefficients
    cp[0] = off / diag;
    for i in 1..n_inner {
        cp[i] = off / (diag - off * cp[i - 1]);
    }

    let mut values = Vec::with_capacity(nt * (nx + 1));
    let mut rhs = vec![0.0f64; n_inner];
    let mut dp = vec![0.0f64; n_inner];
    for step in 1..=nt {
        for i in 1..nx {
            let diffusion = 0.5 * r * (w[i + 1] - 2.0 * w[i] + w[i - 1]);
            let convection = (w[i + 1] * w[i + 1] - w[i - 1] * w[i - 1]) / (4.0 * dx);
            rhs[i - 1] = w[i] + diffusion - dt * convection;
        }
        rhs[0] -= off * problem.alpha1;
        rhs[n_inner - 1] -= off * problem.alpha2;

        dp[0] = rhs[0] / diag;
        for i in 1..n_inner {
            dp[i] = (rhs[i] - off * dp[i - 1]) / (diag - off * cp[i - 1]);
        }
        w[nx] = problem.alpha2;
        w[n_inner] = dp[n_inner - 1];
        for i in (0..n_inner - 1).rev() {
            w[i + 1] = dp[i] - cp[i] * w[i + 2];
        }
        w[0] = problem.alpha1;

        let max_abs = w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if !max_abs.is_finite() || max_abs > blowup {
            return Err(ReferenceError::Unstable {
                step,
                time: step as f64 * dt,
                max_abs,
            });
        }
        values.extend_from_slice(&w);
    }

    let (gnt, gnx) = grid.shape();
    let meta = SolveMeta {
        solver: "fd".to_string(),
        timings: StageTimings {
            total: t0.elapsed(),
            ..StageTimings::default()
        },
        warnings,
        ..SolveMeta::default()
    };
    Ok(SolutionTable::new(grid, values, vec![CellStatus::Ok; gnt * gnx], meta)?)
}

/// Build the Laplace field for a Burgers problem (validation helper shared by
/// tests and the demo front ends).
pub fn burgers_field(problem: &BurgersProblem, u00: f64) -> Result<LaplaceField, ReferenceError> {
    let phi = crate::problem::hopf_cole_initial(problem, u00)
        .map_err(|e| ReferenceError::InvalidParams(e.to_string()))?;
    let rd = ReactionDiffusionProblem::from_burgers(problem, phi);
    Ok(build_field(rd)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
        assert!(
            (got - want).abs() <= tol,
            "{what}: got {got}, want {want} (|diff| = {:.3e})",
            (got - want).abs()
        );
    }

    #[test]
    fn example1_exact_spot_values() {
        let params = Example1Params::new(1.0, 2.0).unwrap();
        assert_close(example1_exact(0.5, 0.0, &params), PI, 1e-14, "w(0.5, 0)");
        for &t in &[0.0, 0.1, 1.0] {
            assert_eq!(example1_exact(0.0, t, &params), 0.0, "w(0, t)");
            assert_close(example1_exact(1.0, t, &params), 0.0, 1e-15, "w(1, t)");
        }
        // direct evaluation at a small-viscosity point
        let small = Example1Params::new(0.1, 2.0).unwrap();
        let decay = (-PI * PI * 0.1 * 0.1f64).exp();
        let want = 2.0 * 0.1 * PI * decay * (PI * 0.25).sin() / (2.0 + decay * (PI * 0.25).cos());
        assert_close(example1_exact(0.25, 0.1, &small), want, 1e-15, "w(0.25, 0.1)");
    }

    #[test]
    fn example1_params_validation() {
        assert!(Example1Params::new(1.0, 0.5).is_err());
        assert!(Example1Params::new(-1.0, 2.0).is_err());
        assert!(Example1Params::new(0.1, -3.0).is_ok());
    }

    #[test]
    fn cole_series_boundary_and_self_convergence() {
        let series20 = ColeSeries::build(&ColeSeriesParams::new(1.0, 20).unwrap()).unwrap();
        for &t in &[0.05, 0.3, 1.0] {
            assert_eq!(series20.eval(0.0, t), 0.0, "sin terms vanish at x=0");
            assert_close(series20.eval(1.0, t), 0.0, 1e-13, "x=1");
        }
        // tail bound e^{-n²π²t} makes 20 vs 40 terms indistinguishable
        let series40 = ColeSeries::build(&ColeSeriesParams::new(1.0, 40).unwrap()).unwrap();
        let v20 = series20.eval(0.5, 0.5);
        let v40 = series40.eval(0.5, 0.5);
        assert_close(v20, v40, 1e-12, "truncation self-convergence");

        // five terms already carry the plotted-reference regime at t >= 0.1
        let series5 = ColeSeries::build(&ColeSeriesParams::new(1.0, 5).unwrap()).unwrap();
        for &t in &[0.1, 0.5, 1.0] {
            for i in 1..10 {
                let x = i as f64 / 10.0;
                assert_close(series5.eval(x, t), series20.eval(x, t), 1e-10, "5-term truncation");
            }
        }
    }

    #[test]
    fn cole_series_matches_inversion_pipeline() {
        use crate::engine::{solve, SpaceTimeGrid};
        use crate::ilt::IltConfig;
        let a_sq = 1.0;
        let series = ColeSeries::build(&ColeSeriesParams::new(a_sq, 20).unwrap()).unwrap();
        let problem = example2_problem(a_sq, 1.0);
        let xs: Vec<f64> = (0..=8).map(|i| i as f64 / 8.0).collect();
        let grid = SpaceTimeGrid::new(xs, vec![0.1, 0.5, 1.0]).unwrap();
        let table = solve(&problem, &grid, &IltConfig::default()).unwrap();
        let mut worst = 0.0f64;
        for (ti, &t) in grid.ts().iter().enumerate() {
            for (j, &x) in grid.xs().iter().enumerate() {
                worst = worst.max((table.value(ti, j) - series.eval(x, t)).abs());
            }
        }
        println!("cole vs inversion, max |diff|: {worst:.3e}");
        assert!(worst < 1e-4, "agreement bound, got {worst:.3e}");
    }

    #[test]
    fn pdomain_forms_match_generic_field_for_the_sine_profile() {
        let a_sq = 1.0;
        let problem = example2_problem(a_sq, 1.0);
        let field = burgers_field(&problem, 1.0).unwrap();
        let quad = QuadratureSpec::default();
        for &(x, pre, pim) in &[
            (0.3, 2.0, 1.0),
            (0.5, 1.0, 0.0),
            (0.8, 4.0, -6.0),
            (0.05, 0.7, 2.2),
        ] {
            let p = Complex64::new(pre, pim);
            let (u_sa, ux_sa) = example2_pdomain(x, p, a_sq, 1.0, &quad).unwrap();
            let s = field.eval(x, p).unwrap();
            let scale = s.u.norm().max(1e-12);
            assert!(
                (s.u - u_sa).norm() <= 1e-9 * scale,
                "U mismatch at ({x}, {p}): {:?} vs {:?}",
                s.u,
                u_sa
            );
            assert!(
                (s.ux - ux_sa).norm() <= 1e-9 * scale.max(s.ux.norm()),
                "Ux mismatch at ({x}, {p})"
            );
        }
    }

    #[test]
    fn pdomain_stays_finite_toward_the_pole() {
        // the 1/(1 - e^{-2 sqrt p /a}) factor blows up as p -> 0+, but the
        // assembled U stays finite
        let quad = QuadratureSpec::default();
        let (u, ux) = example2_pdomain(0.4, Complex64::new(1e-8, 0.0), 1.0, 1.0, &quad).unwrap();
        assert!(u.norm().is_finite(), "U finite at p=1e-8: {u}");
        assert!(ux.norm().is_finite(), "Ux finite at p=1e-8");
        // U ~ mean(phi)/p near the pole for conserved Neumann-like data
        assert!(u.re > 0.0 && u.re < 1e9);
    }

    #[test]
    fn fd_zero_data_stays_zero() {
        let problem = BurgersProblem {
            a_sq: 1.0,
            l1: 0.0,
            l2: 1.0,
            alpha1: 0.0,
            alpha2: 0.0,
            w0: InitialProfile::analytic(|_| 0.0),
            t_max: 0.1,
        };
        let table = fd_solve(&problem, &FdScheme { dx: 0.1, dt: 0.01 }).unwrap();
        assert!(table.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn fd_tracks_the_closed_form() {
        let params = Example1Params::new(1.0, 2.0).unwrap();
        let problem = example1_problem(&params, 0.5);
        let table = fd_solve(&problem, &FdScheme { dx: 0.01, dt: 0.001 }).unwrap();
        let (nt, nx) = table.grid.shape();
        let t_final = *table.grid.ts().last().unwrap();
        let mut linf = 0.0f64;
        for j in 0..nx {
            let x = table.grid.xs()[j];
            linf = linf.max((table.value(nt - 1, j) - example1_exact(x, t_final, &params)).abs());
        }
        println!("fd vs exact at t=0.5: linf = {linf:.3e}");
        assert!(linf > 1e-9, "error should be visibly nonzero");
        assert!(linf < 1e-3, "error should be small, got {linf:.3e}");
    }

    #[test]
    fn fd_converges_at_second_order() {
        let params = Example1Params::new(1.0, 2.0).unwrap();
        let problem = example1_problem(&params, 0.5);
        let mut errors = Vec::new();
        for (dx, dt) in [(0.02, 0.004), (0.01, 0.001)] {
            let table = fd_solve(&problem, &FdScheme { dx, dt }).unwrap();
            let (nt, nx) = table.grid.shape();
            let t_final = *table.grid.ts().last().unwrap();
            let mut linf = 0.0f64;
            for j in 0..nx {
                let x = table.grid.xs()[j];
                linf =
                    linf.max((table.value(nt - 1, j) - example1_exact(x, t_final, &params)).abs());
            }
            errors.push(linf);
        }
        let ratio = errors[0] / errors[1];
        println!(
            "fd convergence: linf({{0.02}}) = {:.3e}, linf({{0.01}}) = {:.3e}, ratio = {ratio:.2}",
            errors[0], errors[1]
        );
        assert!(ratio >= 3.5, "halving dx should cut the error ~4x, got {ratio:.2}");
    }

    #[test]
    fn fd_preserves_sign_structure() {
        let params = Example1Params::new(1.0, 2.0).unwrap();
        let problem = example1_problem(&params, 0.5);
        let table = fd_solve(&problem, &FdScheme { dx: 0.01, dt: 0.001 }).unwrap();
        let min = table.values().iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(min > -1e-6, "no undershoot beyond tolerance, got {min:.3e}");
    }

    #[test]
    fn fd_detects_blowup() {
        // inviscid-dominated march with a huge time step goes unstable
        let problem = BurgersProblem {
            a_sq: 1e-6,
            l1: 0.0,
            l2: 1.0,
            alpha1: 0.0,
            alpha2: 0.0,
            w0: InitialProfile::analytic(|x: f64| 10.0 * (2.0 * PI * x).sin()),
            t_max: 5.0,
        };
        let result = fd_solve(&problem, &FdScheme { dx: 0.05, dt: 0.5 });
        assert!(
            matches!(result, Err(ReferenceError::Unstable { .. })),
            "expected instability, got {result:?}"
        );
    }

    #[test]
    fn fd_warns_on_aggressive_time_step() {
        let params = Example1Params::new(1.0, 2.0).unwrap();
        let problem = example1_problem(&params, 0.01);
        let table = fd_solve(&problem, &FdScheme { dx: 0.01, dt: 0.01 }).unwrap();
        assert!(
            table.meta.warnings.iter().any(|w| w.contains("advisory")),
            "expected advisory warning, got {:?}",
            table.meta.warnings
        );
    }
}
