//! Cross-module checks through the public API: field inversion against the
//! analytic heat solution, and the full ratio pipeline on a steady profile
//! with nonzero Dirichlet data.

use burgers_laplace::engine::{solve, SpaceTimeGrid};
use burgers_laplace::ilt::{invert_field, FieldComponent, IltConfig};
use burgers_laplace::operational::ReactionDiffusionProblem;
use burgers_laplace::problem::{hopf_cole_initial, BurgersProblem, InitialProfile};
use burgers_laplace::reference::{example1_problem, Example1Params};
use std::f64::consts::PI;

#[test]
fn field_inversion_recovers_the_heat_solution() {
    // u(x,t) = (σ + e^{-π²a²t} cos πx)/(σ+1) and its x-derivative
    let params = Example1Params::new(1.0, 2.0).unwrap();
    let problem = example1_problem(&params, 1.0);
    let phi = hopf_cole_initial(&problem, 1.0).unwrap();
    let field = burgers_laplace::operational::build_field(
        ReactionDiffusionProblem::from_burgers(&problem, phi),
    )
    .unwrap();

    let cfg = IltConfig::default();
    let times = [0.2, 0.5, 0.8];
    for &x in &[0.0, 0.3, 0.7] {
        let u = invert_field(&field, FieldComponent::Value, x, &times, &cfg).unwrap();
        let ux = invert_field(&field, FieldComponent::SpaceDerivative, x, &times, &cfg).unwrap();
        for (k, &t) in times.iter().enumerate() {
            let decay = (-PI * PI * t).exp();
            let u_want = (2.0 + decay * (PI * x).cos()) / 3.0;
            let ux_want = -decay * PI * (PI * x).sin() / 3.0;
            assert!(
                (u.values[k] - u_want).abs() < 1e-8,
                "u({x},{t}) = {}, want {u_want}",
                u.values[k]
            );
            assert!(
                (ux.values[k] - ux_want).abs() < 1e-8,
                "ux({x},{t}) = {}, want {ux_want}",
                ux.values[k]
            );
        }
    }
}

#[test]
fn reaction_term_shifts_the_decay_rate() {
    // with a reaction term the sine mode decays like e^{-(b + π²a²)t}:
    // u_t - a²u_xx + b·u = 0, u(x,0) = sin(πx), zero Dirichlet
    let (a_sq, b) = (0.7, 1.3);
    let prob = ReactionDiffusionProblem {
        a_sq,
        b,
        l1: 0.0,
        l2: 1.0,
        robin1: burgers_laplace::operational::RobinCondition { alpha: 1.0, beta: 0.0 },
        robin2: burgers_laplace::operational::RobinCondition { alpha: 1.0, beta: 0.0 },
        phi: std::sync::Arc::new(|x: f64| (PI * x).sin()),
        source: None,
        g1: None,
        g2: None,
    };
    let field = burgers_laplace::operational::build_field(prob).unwrap();
    let cfg = IltConfig::default();
    let rate = b + PI * PI * a_sq;
    for &x in &[0.25, 0.6] {
        let r = invert_field(&field, FieldComponent::Value, x, &[0.2, 0.5], &cfg).unwrap();
        for (k, &t) in [0.2, 0.5].iter().enumerate() {
            let want = (-rate * t).exp() * (PI * x).sin();
            assert!(
                (r.values[k] - want).abs() < 1e-8,
                "u({x},{t}) = {}, want {want}",
                r.values[k]
            );
        }
    }
}

#[test]
fn steady_profile_with_nonzero_dirichlet_data() {
    // w(x) = -2a²B/(A + Bx) is time-independent: the convection and
    // diffusion terms cancel. Boundary values are nonzero constants, so this
    // exercises the full Robin structure of the transformed problem.
    let (a_sq, big_a, big_b) = (1.0, 1.0, 0.5);
    let steady = move |x: f64| -2.0 * a_sq * big_b / (big_a + big_b * x);
    let problem = BurgersProblem {
        a_sq,
        l1: 0.0,
        l2: 1.0,
        alpha1: steady(0.0),
        alpha2: steady(1.0),
        w0: InitialProfile::analytic(steady),
        t_max: 1.0,
    };
    let xs: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let grid = SpaceTimeGrid::new(xs, vec![0.1, 0.4, 1.0]).unwrap();
    let table = solve(&problem, &grid, &IltConfig::default()).unwrap();

    let mut worst = 0.0f64;
    for ti in 0..grid.ts().len() {
        for (j, &x) in grid.xs().iter().enumerate() {
            worst = worst.max((table.value(ti, j) - steady(x)).abs());
        }
    }
    println!("steady-profile drift: {worst:.3e}");
    assert!(worst < 1e-6, "steady profile drifted by {worst:.3e}");

    // boundary fidelity against the Dirichlet constants
    let dev = table.meta.boundary_max_dev.unwrap();
    assert!(dev < 1e-6, "boundary deviation {dev:.3e}");
}

#[test]
fn boundary_fidelity_on_the_decaying_profile() {
    let params = Example1Params::new(0.5, -2.5).unwrap();
    let problem = example1_problem(&params, 1.0);
    let xs: Vec<f64> = (0..=8).map(|i| i as f64 / 8.0).collect();
    let grid = SpaceTimeGrid::new(xs, vec![0.2, 0.9]).unwrap();
    let table = solve(&problem, &grid, &IltConfig::default()).unwrap();
    assert!(table.meta.boundary_max_dev.unwrap() <= 1e-6);
}
