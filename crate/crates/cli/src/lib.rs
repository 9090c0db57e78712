//! Library surface of the command-line front end, shared with its tests.

// `!(x > 0.0)` style comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod emit;
pub mod run;
