//! Viscid Burgers' equation on bounded intervals with constant Dirichlet data,
//! solved exactly in the Laplace domain and recovered in the time domain by
//! numerical inversion.
//!
//! The pipeline: the Hopf-Cole substitution w = -2a²·u_x/u turns the Burgers
//! problem into a heat problem with homogeneous Robin boundaries ([`problem`]);
//! that linear problem has a closed-form solution U(x,p) in the Laplace domain
//! built from one-sided exponential kernels, a kernel-weighted integral of the
//! initial data, and a 4x4 boundary system ([`operational`]); U and U_x are
//! inverted numerically with the de Hoog accelerated Fourier-series method
//! ([`ilt`]); and the ratio of the two inverses is the Burgers solution on an
//! (x,t) grid ([`engine`]). Reference solutions for validation (closed form,
//! Cole series, finite differences) live in [`crate::reference`].

// `!(x > 0.0)` style comparisons reject NaN along with out-of-range values;
// quadrature node tables carry their published digit counts.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

pub use num_complex;

pub mod engine;
pub mod ilt;
pub mod operational;
pub mod problem;
pub mod quadrature;
pub mod reference;

pub use engine::{solve, solve_with_options, EngineOptions, SolutionTable, SpaceTimeGrid};
pub use ilt::{invert, invert_field, IltConfig, IltResult};
pub use operational::{build_field, LaplaceField, ReactionDiffusionProblem};
pub use problem::{BurgersProblem, InitialProfile};
pub use quadrature::{QuadratureResult, QuadratureSpec};
