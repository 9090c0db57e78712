//! Problem definitions and the Hopf-Cole forward/inverse transforms.
//!
//! The substitution w = -2a²·u_x/u maps the Burgers problem with constant
//! Dirichlet data onto a heat problem whose initial data is
//! φ(x) = u00·exp(-(1/2a²)∫_{l1}^x w0), with homogeneous Robin boundaries
//! α·u + 2a²·u_x = 0. Everything downstream works with φ, so its cumulative
//! integral is computed once and cached on a refinement grid.

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Default absolute floor for the Hopf-Cole denominator guard, used when no
/// contextual scale (e.g. a grid-row maximum) is available.
pub const DEFAULT_DENOMINATOR_GUARD: f64 = 1e-12;

/// Relative factor for the engine's denominator guard: the threshold is this
/// times the running maximum of |u| over the current grid row.
pub const GUARD_REL_FACTOR: f64 = 1e-12;

/// Initial profile w0: either a closed-form evaluator or a sampled table
/// interpolated with a monotone piecewise cubic.
#[derive(Clone)]
pub enum InitialProfile {
    Analytic(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
    Sampled(Arc<SampledProfile>),
}

impl InitialProfile {
    pub fn analytic(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        InitialProfile::Analytic(Arc::new(f))
    }

    pub fn sampled(xs: Vec<f64>, values: Vec<f64>) -> Result<Self, ProblemError> {
        Ok(InitialProfile::Sampled(Arc::new(SampledProfile::new(xs, values)?)))
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            InitialProfile::Analytic(f) => f(x),
            InitialProfile::Sampled(s) => s.eval(x),
        }
    }
}

impl fmt::Debug for InitialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialProfile::Analytic(_) => f.write_str("InitialProfile::Analytic(..)"),
            InitialProfile::Sampled(s) => write!(f, "InitialProfile::Sampled({} points)", s.xs.len()),
        }
    }
}

/// Tabulated profile with monotone (Fritsch-Carlson) piecewise-cubic
/// interpolation, which cannot overshoot between samples. Overshoot would
/// corrupt the exponential of the Hopf-Cole image.
#[derive(Debug)]
pub struct SampledProfile {
    xs: Vec<f64>,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl SampledProfile {
    pub fn new(xs: Vec<f64>, values: Vec<f64>) -> Result<Self, ProblemError> {
        if xs.len() < 2 || xs.len() != values.len() {
            return Err(ProblemError::InvalidProfile(
                "need at least two samples and matching lengths".into(),
            ));
        }
        if xs.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(ProblemError::InvalidProfile(
                "sample abscissae must be strictly increasing".into(),
            ));
        }
        if xs.iter().chain(values.iter()).any(|v| !v.is_finite()) {
            return Err(ProblemError::InvalidProfile("samples must be finite".into()));
        }
        let slopes = fritsch_carlson_slopes(&xs, &values);
        Ok(Self { xs, values, slopes })
    }

    pub fn span(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.values[0];
        }
        if x >= self.xs[n - 1] {
            return self.values[n - 1];
        }
        let i = match self.xs.binary_search_by(|v| v.total_cmp(&x)) {
            Ok(i) => return self.values[i],
            Err(i) => i - 1,
        };
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        let (m0, m1) = (self.slopes[i] * h, self.slopes[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + m0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + m1 * (t3 - t2)
    }

    /// Heuristic scan for jump-like samples: a consecutive difference more
    /// than 50x the median difference magnitude is reported as a suspected
    /// discontinuity (warning only).
    fn suspected_jumps(&self) -> Vec<f64> {
        let mut diffs: Vec<f64> = self
            .values
            .windows(2)
            .map(|w| (w[1] - w[0]).abs())
            .collect();
        if diffs.len() < 4 {
            return Vec::new();
        }
        let mut sorted = diffs.clone();
        sorted.sort_by(f64::total_cmp);
        let median = sorted[sorted.len() / 2];
        if median == 0.0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, d) in diffs.drain(..).enumerate() {
            if d > 50.0 * median {
                out.push(0.5 * (self.xs[i] + self.xs[i + 1]));
            }
        }
        out
    }
}

fn fritsch_carlson_slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();
    let mut m = vec![0.0; n];
    m[0] = endpoint_slope(h[0], h.get(1).copied().unwrap_or(h[0]), delta[0], delta.get(1).copied().unwrap_or(delta[0]));
    m[n - 1] = endpoint_slope(
        h[n - 2],
        if n > 2 { h[n - 3] } else { h[n - 2] },
        delta[n - 2],
        if n > 2 { delta[n - 3] } else { delta[n - 2] },
    );
    for i in 1..n - 1 {
        if delta[i - 1] * delta[i] <= 0.0 {
            m[i] = 0.0;
        } else {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    m
}

fn endpoint_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
    let m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if m * d0 <= 0.0 {
        0.0
    } else if d0 * d1 <= 0.0 && m.abs() > 3.0 * d0.abs() {
        3.0 * d0
    } else {
        m
    }
}

/// The Burgers problem of interest: w_t - a²·w_xx + w·w_x = 0 on [l1, l2],
/// w(x,0) = w0(x), w(l1,t) = alpha1, w(l2,t) = alpha2, for 0 < t <= t_max.
#[derive(Debug, Clone)]
pub struct BurgersProblem {
    pub a_sq: f64,
    pub l1: f64,
    pub l2: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub w0: InitialProfile,
    pub t_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ValidationWarning {
    /// w0 at an endpoint does not match the Dirichlet value there.
    /// Compatibility is not required; the transform tolerates the mismatch.
    BoundaryMismatch { endpoint: f64, w0_value: f64, alpha: f64 },
    /// Suspected jump in a sampled profile near this abscissa.
    SuspectedDiscontinuity { near: f64 },
    /// Advisory CFL bound for explicit pieces of downstream schemes.
    CflAdvisory { dt: f64, bound: f64 },
}

impl fmt::Display for ValidationWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationWarning::BoundaryMismatch { endpoint, w0_value, alpha } => write!(
                f,
                "w0({endpoint}) = {w0_value} does not match boundary value {alpha}"
            ),
            ValidationWarning::SuspectedDiscontinuity { near } => {
                write!(f, "suspected discontinuity in w0 near x = {near}")
            }
            ValidationWarning::CflAdvisory { dt, bound } => {
                write!(f, "time step {dt} exceeds advisory convective bound {bound}")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("interval endpoints must satisfy l1 < l2 (got l1={l1}, l2={l2})")]
    InvalidInterval { l1: f64, l2: f64 },
    #[error("viscosity a^2 must be positive (got {0})")]
    NonpositiveViscosity(f64),
    #[error("time horizon must be positive (got {0})")]
    NonpositiveHorizon(f64),
    #[error("u(l1,0) must be nonzero for the Hopf-Cole transform")]
    ZeroReferenceValue,
    #[error("invalid initial profile: {0}")]
    InvalidProfile(String),
    #[error("cumulative integral of the initial profile did not converge (residual {0:.3e})")]
    IntegrationFailure(f64),
    #[error("Hopf-Cole denominator degenerate: |u| = {abs_u:.3e} at or below guard {guard:.3e}")]
    DegenerateDenominator { abs_u: f64, guard: f64 },
}

impl BurgersProblem {
    /// Check invariants; returns non-fatal warnings on success.
    pub fn validate(&self) -> Result<Vec<ValidationWarning>, ProblemError> {
        if !(self.l1 < self.l2) || !self.l1.is_finite() || !self.l2.is_finite() {
            return Err(ProblemError::InvalidInterval { l1: self.l1, l2: self.l2 });
        }
        if !(self.a_sq > 0.0) {
            return Err(ProblemError::NonpositiveViscosity(self.a_sq));
        }
        if !(self.t_max > 0.0) {
            return Err(ProblemError::NonpositiveHorizon(self.t_max));
        }
        let mut warnings = Vec::new();
        let scale = 1.0 + self.alpha1.abs().max(self.alpha2.abs());
        for (endpoint, alpha) in [(self.l1, self.alpha1), (self.l2, self.alpha2)] {
            let w0v = self.w0.eval(endpoint);
            if (w0v - alpha).abs() > 1e-9 * scale {
                warnings.push(ValidationWarning::BoundaryMismatch {
                    endpoint,
                    w0_value: w0v,
                    alpha,
                });
            }
        }
        if let InitialProfile::Sampled(s) = &self.w0 {
            let (lo, hi) = s.span();
            if lo > self.l1 + 1e-12 || hi < self.l2 - 1e-12 {
                return Err(ProblemError::InvalidProfile(format!(
                    "sampled profile spans [{lo}, {hi}], short of the interval [{}, {}]",
                    self.l1, self.l2
                )));
            }
            for near in s.suspected_jumps() {
                warnings.push(ValidationWarning::SuspectedDiscontinuity { near });
            }
        }
        Ok(warnings)
    }
}

/// The Hopf-Cole transformation itself: w = -2a²·u_x/u. Uses an absolute
/// guard; callers with a contextual scale should use [`hopf_cole_ratio_guarded`].
pub fn hopf_cole_ratio(u: f64, ux: f64, a_sq: f64) -> Result<f64, ProblemError> {
    hopf_cole_ratio_guarded(u, ux, a_sq, DEFAULT_DENOMINATOR_GUARD)
}

pub fn hopf_cole_ratio_guarded(u: f64, ux: f64, a_sq: f64, guard: f64) -> Result<f64, ProblemError> {
    if u.abs() <= guard {
        return Err(ProblemError::DegenerateDenominator { abs_u: u.abs(), guard });
    }
    Ok(-2.0 * a_sq * ux / u)
}

/// The transformed initial data φ with its cumulative integral cached.
///
/// φ(x) = u00·exp(-W(x)/(2a²)), W(x) = ∫_{l1}^x w0(y) dy. W is tabulated on a
/// refinement grid (512 panels minimum, doubled until two consecutive levels
/// agree, Richardson-style); off-node evaluation adds a short Gauss-Legendre
/// correction from the nearest node, so repeated φ evaluations stay cheap.
pub struct InitialData {
    l1: f64,
    l2: f64,
    u00: f64,
    inv_two_a_sq: f64,
    node_step: f64,
    cumulative: Vec<f64>,
    /// w0 at the grid nodes: the exact derivative of the cumulative, used
    /// for Hermite evaluation between nodes.
    node_slopes: Vec<f64>,
}

impl fmt::Debug for InitialData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "InitialData {{ l1: {}, l2: {}, u00: {}, nodes: {} }}",
            self.l1,
            self.l2,
            self.u00,
            self.cumulative.len()
        )
    }
}

// 8-point Gauss-Legendre on [-1, 1], used per panel of the cumulative grid.
const GL8_X: [f64; 8] = [
    -0.960_289_856_497_536_3,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329_0,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329_0,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL8_W: [f64; 8] = [
    0.101_228_536_290_376_26,
    0.222_381_034_453_374_47,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362_0,
    0.362_683_783_378_362_0,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_47,
    0.101_228_536_290_376_26,
];

fn gl8(f: &InitialProfile, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in GL8_X.iter().zip(GL8_W.iter()) {
        sum += w * f.eval(c + h * x);
    }
    sum * h
}

/// Forward Hopf-Cole transform of the initial data.
pub fn hopf_cole_initial(problem: &BurgersProblem, u00: f64) -> Result<InitialData, ProblemError> {
    if u00 == 0.0 || !u00.is_finite() {
        return Err(ProblemError::ZeroReferenceValue);
    }
    problem.validate()?;

    let len = problem.l2 - problem.l1;
    let mut panels = 512usize;
    let mut cumulative = build_cumulative(&problem.w0, problem.l1, len, panels);
    loop {
        let finer = build_cumulative(&problem.w0, problem.l1, len, panels * 2);
        let mut max_diff = 0.0f64;
        let mut scale = 1.0f64;
        for (i, v) in cumulative.iter().enumerate() {
            max_diff = max_diff.max((finer[2 * i] - v).abs());
            scale = scale.max(v.abs());
        }
        panels *= 2;
        cumulative = finer;
        if max_diff <= 1e-12 * scale.max(1.0) {
            break;
        }
        if panels >= 1 << 16 {
            return Err(ProblemError::IntegrationFailure(max_diff));
        }
    }

    let node_step = len / panels as f64;
    let node_slopes = (0..=panels)
        .map(|i| problem.w0.eval(problem.l1 + i as f64 * node_step))
        .collect();
    Ok(InitialData {
        l1: problem.l1,
        l2: problem.l2,
        u00,
        inv_two_a_sq: 1.0 / (2.0 * problem.a_sq),
        node_step,
        cumulative,
        node_slopes,
    })
}

fn build_cumulative(w0: &InitialProfile, l1: f64, len: f64, panels: usize) -> Vec<f64> {
    let h = len / panels as f64;
    let mut cumulative = Vec::with_capacity(panels + 1);
    cumulative.push(0.0);
    let mut acc = 0.0;
    for i in 0..panels {
        let a = l1 + i as f64 * h;
        acc += gl8(w0, a, a + h);
        cumulative.push(acc);
    }
    cumulative
}

impl InitialData {
    /// φ(x); clamped to the interval.
    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(self.l1, self.l2);
        self.u00 * (-self.cumulative_at(x) * self.inv_two_a_sq).exp()
    }

    /// W(x) = ∫_{l1}^x w0, by cubic Hermite interpolation between cached
    /// nodes (the node slopes are w0 itself, so the panel error is O(h⁴) on
    /// a grid of >= 1024 panels: machine precision for smooth profiles).
    pub fn cumulative_at(&self, x: f64) -> f64 {
        let pos = (x - self.l1) / self.node_step;
        let i = (pos.floor() as usize).min(self.cumulative.len() - 2);
        let t = pos - i as f64;
        if t == 0.0 {
            return self.cumulative[i];
        }
        let h = self.node_step;
        let (y0, y1) = (self.cumulative[i], self.cumulative[i + 1]);
        let (m0, m1) = (self.node_slopes[i] * h, self.node_slopes[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + m0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + m1 * (t3 - t2)
    }

    pub fn u00(&self) -> f64 {
        self.u00
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.l1, self.l2)
    }

    /// Erased evaluator for downstream consumers.
    pub fn into_evaluator(self) -> Arc<dyn Fn(f64) -> f64 + Send + Sync> {
        Arc::new(move |x| self.eval(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn example1_problem(a_sq: f64, sigma: f64) -> BurgersProblem {
        BurgersProblem {
            a_sq,
            l1: 0.0,
            l2: 1.0,
            alpha1: 0.0,
            alpha2: 0.0,
            w0: InitialProfile::analytic(move |x: f64| {
                2.0 * a_sq * PI * (PI * x).sin() / (sigma + (PI * x).cos())
            }),
            t_max: 1.0,
        }
    }

    fn example2_problem(a_sq: f64) -> BurgersProblem {
        BurgersProblem {
            a_sq,
            l1: 0.0,
            l2: 1.0,
            alpha1: 0.0,
            alpha2: 0.0,
            w0: InitialProfile::analytic(|x: f64| (PI * x).sin()),
            t_max: 1.0,
        }
    }

    #[test]
    fn validates_the_sine_problem() {
        let warnings = example2_problem(1.0).validate().unwrap();
        assert!(warnings.is_empty(), "unexpected warnings: {warnings:?}");
    }

    #[test]
    fn rejects_reversed_interval_and_bad_parameters() {
        let mut p = example2_problem(1.0);
        p.l1 = 1.0;
        p.l2 = 0.0;
        assert!(matches!(p.validate(), Err(ProblemError::InvalidInterval { .. })));

        let mut p = example2_problem(1.0);
        p.a_sq = 0.0;
        assert!(matches!(p.validate(), Err(ProblemError::NonpositiveViscosity(_))));

        let mut p = example2_problem(1.0);
        p.t_max = -1.0;
        assert!(matches!(p.validate(), Err(ProblemError::NonpositiveHorizon(_))));
    }

    #[test]
    fn warns_on_boundary_mismatch_without_failing() {
        let mut p = example2_problem(1.0);
        p.alpha1 = 0.5; // w0(0) = 0 != 0.5
        let warnings = p.validate().unwrap();
        assert!(warnings
            .iter()
            .any(|w| matches!(w, ValidationWarning::BoundaryMismatch { .. })));
    }

    #[test]
    fn example1_phi_has_closed_form() {
        // w0 of the rational-trigonometric profile integrates to
        // 2a²·ln((σ+1)/(σ+cos πx)), so φ(x) = u00(σ+cos πx)/(σ+1).
        let sigma = 2.0;
        let p = example1_problem(1.0, sigma);
        let phi = hopf_cole_initial(&p, 1.0).unwrap();
        for &x in &[0.0, 0.1, 0.37, 0.5, 0.82, 1.0] {
            let want = (sigma + (PI * x).cos()) / (sigma + 1.0);
            let got = phi.eval(x);
            assert!(
                (got - want).abs() < 1e-12,
                "phi({x}): got {got}, want {want}"
            );
        }
        assert_eq!(phi.eval(0.0), 1.0, "phi(l1) = u00 exactly");
        assert!((phi.eval(1.0) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn example2_phi_endpoint_value() {
        // ∫0^1 sin(pi y) dy = 2/pi, halved by the transform exponent
        let p = example2_problem(1.0);
        let phi = hopf_cole_initial(&p, 1.0).unwrap();
        let want = (-1.0 / PI).exp();
        assert!(
            (phi.eval(1.0) - want).abs() < 1e-12,
            "phi(1) = {}, want {}",
            phi.eval(1.0),
            want
        );
    }

    #[test]
    fn zero_profile_gives_constant_phi() {
        let mut p = example2_problem(1.0);
        p.w0 = InitialProfile::analytic(|_| 0.0);
        let phi = hopf_cole_initial(&p, 3.5).unwrap();
        for &x in &[0.0, 0.3, 0.99] {
            assert_eq!(phi.eval(x), 3.5);
        }
    }

    #[test]
    fn rejects_zero_reference_value() {
        let p = example2_problem(1.0);
        assert!(matches!(
            hopf_cole_initial(&p, 0.0),
            Err(ProblemError::ZeroReferenceValue)
        ));
    }

    #[test]
    fn phi_positive_and_log_derivative_consistent() {
        // φ'(x)/φ(x) = -w0(x)/(2a²) at midpoints, via centered differences
        let p = example2_problem(0.5);
        let phi = hopf_cole_initial(&p, 2.0).unwrap();
        let h = 1e-5;
        for i in 1..10 {
            let x = i as f64 / 10.0;
            assert!(phi.eval(x) > 0.0, "phi positive for positive u00");
            let d = (phi.eval(x + h) - phi.eval(x - h)) / (2.0 * h);
            let want = -p.w0.eval(x) / (2.0 * p.a_sq);
            let got = d / phi.eval(x);
            assert!(
                (got - want).abs() < 1e-7,
                "log-derivative at {x}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn ratio_arithmetic_and_guard() {
        assert_eq!(hopf_cole_ratio(1.0, 0.0, 1.0).unwrap(), 0.0);
        assert_eq!(hopf_cole_ratio(2.0, -1.0, 1.0).unwrap(), 1.0);
        let err = hopf_cole_ratio(1e-16, 1.0, 1.0).unwrap_err();
        match err {
            ProblemError::DegenerateDenominator { abs_u, .. } => assert_eq!(abs_u, 1e-16),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn ratio_is_scale_invariant() {
        let base = hopf_cole_ratio(2.0, -1.0, 0.7).unwrap();
        // power-of-two scales commute with rounding, so equality is exact
        for c in [4.0, -0.5, 1024.0] {
            let scaled = hopf_cole_ratio(c * 2.0, -c, 0.7).unwrap();
            assert_eq!(base, scaled, "scaling by {c}");
        }
        for c in [5.0, -3.0, 1e-3, 7.2e4] {
            let scaled = hopf_cole_ratio(c * 2.0, -c, 0.7).unwrap();
            assert!(
                (scaled - base).abs() <= 4.0 * f64::EPSILON * base.abs(),
                "scaling by {c}: {scaled} vs {base}"
            );
        }
    }

    #[test]
    fn sampled_profile_interpolates_monotonically() {
        let xs: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        let vs: Vec<f64> = xs.iter().map(|&x| (PI * x).sin()).collect();
        let s = SampledProfile::new(xs.clone(), vs.clone()).unwrap();
        for (x, v) in xs.iter().zip(vs.iter()) {
            assert_eq!(s.eval(*x), *v, "interpolant passes through samples");
        }
        // monotone data on [0, 0.5]: interpolant stays within sample bounds
        for i in 0..50 {
            let x = i as f64 * 0.01;
            let v = s.eval(x);
            assert!((0.0..=1.0).contains(&v), "no overshoot at {x}: {v}");
        }
        // accuracy sanity on the smooth profile
        assert!((s.eval(0.25) - (PI * 0.25).sin()).abs() < 2e-3);
    }

    #[test]
    fn sampled_profile_rejects_unsorted() {
        assert!(SampledProfile::new(vec![0.0, 0.5, 0.4], vec![0.0, 1.0, 2.0]).is_err());
    }

    #[test]
    fn sampled_profile_must_span_the_interval() {
        let mut p = example2_problem(1.0);
        p.w0 = InitialProfile::sampled(vec![0.2, 0.5, 0.8], vec![0.1, 0.3, 0.1]).unwrap();
        assert!(matches!(p.validate(), Err(ProblemError::InvalidProfile(_))));
    }

    #[test]
    fn sampled_jump_triggers_warning() {
        let xs: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
        let vs: Vec<f64> = xs
            .iter()
            .map(|&x| if x < 0.5 { 0.01 * x } else { 1.0 + 0.01 * x })
            .collect();
        let mut p = example2_problem(1.0);
        p.w0 = InitialProfile::sampled(xs, vs).unwrap();
        let warnings = p.validate().unwrap();
        assert!(
            warnings
                .iter()
                .any(|w| matches!(w, ValidationWarning::SuspectedDiscontinuity { .. })),
            "expected jump warning, got {warnings:?}"
        );
    }

    #[test]
    fn sampled_profile_feeds_the_transform() {
        // sampled sin(pi x) should give nearly the same phi as the closed form
        let xs: Vec<f64> = (0..=200).map(|i| i as f64 / 200.0).collect();
        let vs: Vec<f64> = xs.iter().map(|&x| (PI * x).sin()).collect();
        let mut p = example2_problem(1.0);
        p.w0 = InitialProfile::sampled(xs, vs).unwrap();
        let phi = hopf_cole_initial(&p, 1.0).unwrap();
        let want = (-1.0 / PI).exp();
        assert!(
            (phi.eval(1.0) - want).abs() < 1e-6,
            "sampled phi(1) = {}, want {}",
            phi.eval(1.0),
            want
        );
    }
}
